#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/core/truth.hpp"
#include "semiring_lab/groebner/subring.hpp"
#include "semiring_lab/semiring/structure.hpp"

namespace semiring_lab {

/// An element of B = Z[g₁,…,g_m] ⊂ Z[T] together with a polynomial in the
/// tag variables that expands to it.
struct SubringElement {
  Polynomial ambient;
  Polynomial representation;
};

/// target = numerator / denominator in QF(B), checked by cross-multiplying.
struct FractionCertificate {
  Polynomial target;
  SubringElement numerator;
  SubringElement denominator;
  Polynomial residual;  // target·denominator − numerator
  bool holds() const { return residual.is_zero() && !denominator.ambient.is_zero(); }
};

inline FractionCertificate make_fraction(Polynomial target, SubringElement numerator,
                                         SubringElement denominator) {
  FractionCertificate c{std::move(target), std::move(numerator), std::move(denominator), {}};
  c.residual = c.target * c.denominator.ambient - c.numerator.ambient;
  return c;
}

/// h(X) = Σ coefficients[i]·Xⁱ with coefficients in B.
struct UnivarOverSubring {
  std::vector<SubringElement> coefficients;
};

/// A relation-ideal generator and its value at the prescribed point.
struct RelationCheck {
  Polynomial relation;
  mpq_class value;
};

/// Evidence that Xᵢ ↦ vᵢ induces a ring map on B: every relation among the
/// generators must vanish at v.
struct RelationVerification {
  std::vector<RelationCheck> relations;
  bool attempted = false;
  bool complete = false;  // the relation ideal was computed in full
  Truth verdict = Truth::unknown;
};

/// B = Z[g₁,…,g_m] ⊂ Z[T₁,…,Tₙ] with a candidate homomorphism φ: B → Q
/// given by φ(gᵢ) = values[i]. The elimination basis used for membership
/// and relation queries is computed at construction when requested.
class ValuedSubring {
 public:
  ValuedSubring(std::vector<Polynomial> generators, std::vector<mpq_class> values,
                VarNames tag_names, const GroebnerBudget& budget, bool eliminate)
      : generators_(std::move(generators)),
        values_(std::move(values)),
        tag_names_(std::move(tag_names)),
        budget_(budget) {
    if (generators_.empty()) throw PreconditionError("a subring needs at least one generator");
    if (values_.size() != generators_.size()) throw ArityMismatch("one value per generator is required");
    if (tag_names_.size() != generators_.size()) throw ArityMismatch("one tag name per generator is required");
    for (auto& g : generators_) {
      if (g.nvars() != generators_.front().nvars()) throw ArityMismatch("generators live in different rings");
      if (g.domain() == Domain::natural) g = g.with_domain(Domain::integer);
      if (g.domain() != Domain::integer) throw DomainMismatch("subring generators must have integer coefficients");
    }
    if (eliminate) {
      subring_ = std::make_shared<const Subring>(generators_, budget_);
      verification_ = verify_relations(*subring_);
    }
  }

  std::size_t ambient_vars() const { return generators_.front().nvars(); }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<mpq_class>& values() const noexcept { return values_; }
  const VarNames& tag_names() const noexcept { return tag_names_; }
  const GroebnerBudget& budget() const noexcept { return budget_; }
  const RelationVerification& relation_verification() const noexcept { return verification_; }
  bool has_elimination() const noexcept { return subring_ != nullptr; }

  const Subring& subring() const {
    if (!subring_) throw PreconditionError("subring was built without an elimination basis");
    return *subring_;
  }

  Polynomial expand(const Polynomial& representation) const {
    if (representation.nvars() != size()) throw ArityMismatch("representation has wrong arity");
    const Domain d = join(representation.domain(), Domain::integer);
    std::vector<Polynomial> images;
    for (const auto& g : generators_) images.push_back(g.with_domain(d));
    return poly_subst(representation.with_domain(d), images);
  }

  /// The element with the given representation (integer coefficients).
  SubringElement element(const Polynomial& representation) const {
    if (!representation.has_integral_coefficients()) {
      throw DomainViolation("elements of B need an integral representation");
    }
    Polynomial rep = representation.with_domain(Domain::integer);
    return {expand(rep), std::move(rep)};
  }

  SubringElement element(const std::string& representation) const {
    return element(parse_polynomial(representation, tag_names_, Domain::integer));
  }

  SubringElement generator(std::size_t i) const {
    return element(Polynomial::variable(size(), i, Domain::integer));
  }

  SubringElement constant(const mpz_class& c) const {
    return element(Polynomial::constant(size(), mpq_class(c), Domain::integer));
  }

  /// φ evaluated through a representation.
  mpq_class phi(const SubringElement& e) const {
    if (e.representation.nvars() != size()) throw ArityMismatch("element belongs to another subring");
    return poly_eval(e.representation, values_).value();
  }

  bool in_I(const SubringElement& e) const { return sgn(phi(e)) == 0; }

  bool univar_in_ideal(const UnivarOverSubring& h) const {
    for (const auto& c : h.coefficients) {
      if (!in_I(c)) return false;
    }
    return true;
  }

  /// The tag-variable polynomial whose image under φ is zero for each
  /// generator: q·Xᵢ − p where values[i] = p/q.
  Polynomial vanishing_generator(std::size_t i) const {
    const mpq_class& v = values_[i];
    Polynomial x = Polynomial::variable(size(), i, Domain::integer);
    return x.scaled(mpq_class(v.get_den())) -
           Polynomial::constant(size(), mpq_class(v.get_num()), Domain::integer);
  }

 private:
  RelationVerification verify_relations(const Subring& s) const {
    RelationVerification out;
    out.attempted = true;
    const RelationIdeal rel = s.relations();
    out.complete = rel.complete;
    bool all_vanish = true;
    for (const auto& r : rel.generators) {
      mpq_class v = poly_eval(r, values_).value();
      if (sgn(v) != 0) all_vanish = false;
      out.relations.push_back({r, std::move(v)});
    }
    if (!all_vanish) {
      out.verdict = Truth::no;
    } else {
      out.verdict = rel.complete ? Truth::yes : Truth::unknown;
    }
    return out;
  }

  std::vector<Polynomial> generators_;
  std::vector<mpq_class> values_;
  VarNames tag_names_;
  GroebnerBudget budget_;
  std::shared_ptr<const Subring> subring_;
  RelationVerification verification_;
};

inline SubringElement operator+(const SubringElement& a, const SubringElement& b) {
  return {a.ambient + b.ambient, a.representation + b.representation};
}

inline SubringElement operator-(const SubringElement& a, const SubringElement& b) {
  return {a.ambient - b.ambient, a.representation - b.representation};
}

inline SubringElement operator*(const SubringElement& a, const SubringElement& b) {
  return {a.ambient * b.ambient, a.representation * b.representation};
}

/// h(ℓ) computed on ambient forms.
inline Polynomial evaluate_at(const UnivarOverSubring& h, const Polynomial& l) {
  Polynomial total(l.nvars(), Domain::integer);
  Polynomial power = Polynomial::constant(l.nvars(), 1, Domain::integer);
  const Polynomial li = l.with_domain(Domain::integer);
  for (const auto& c : h.coefficients) {
    total += c.ambient * power;
    power *= li;
  }
  return total;
}

/// ℓ = ℓ₀ + a together with h ∈ B[X] such that h(ℓ) = 0 but h ∉ I[X].
struct ConditionCWitness {
  Polynomial l0;
  Polynomial a;
  Polynomial l;
  UnivarOverSubring h;
  std::string route;
  bool root_checked = false;      // h(ℓ) expanded to 0
  bool outside_ideal = false;     // some coefficient has φ ≠ 0
};

struct FalsifierBudget {
  std::size_t max_shifts = 8;    // a ranges over the first elements of A⁺
  std::uint64_t shift_degree = 1;
};

struct FalsifierResult {
  Truth found = Truth::unknown;  // yes when a checked witness exists
  std::optional<ConditionCWitness> witness;
  std::size_t attempts = 0;
};

/// Re-checks a candidate witness from scratch.
inline bool check_witness(const ValuedSubring& b, ConditionCWitness& w) {
  for (const auto& c : w.h.coefficients) {
    if (b.expand(c.representation) != c.ambient.with_domain(Domain::integer)) return false;
  }
  w.root_checked = evaluate_at(w.h, w.l).is_zero();
  w.outside_ideal = !b.univar_in_ideal(w.h);
  return w.root_checked && w.outside_ideal;
}

/// Linear witnesses h = cX − d: for ℓ = ℓ₀ + a and denominators c from a
/// fixed list (1, the generators, the φ-vanishing elements q·gᵢ − p and
/// pairwise products of generators), asks the elimination basis whether
/// c·ℓ ∈ Q[g]; a rational representation is cleared by its denominator.
/// Only witnesses that pass check_witness are returned.
inline FalsifierResult condition_c_search(const ValuedSubring& b, const Polynomial& l0,
                                          const FalsifierBudget& budget = {}) {
  if (l0.domain() != Domain::natural) throw DomainMismatch("l0 must be an element of N[T]");
  if (l0.nvars() != b.ambient_vars()) throw ArityMismatch("l0 lives in a different ring");
  const Subring& s = b.subring();
  std::vector<SubringElement> denominators{b.constant(1)};
  for (std::size_t i = 0; i < b.size(); ++i) denominators.push_back(b.generator(i));
  for (std::size_t i = 0; i < b.size(); ++i) denominators.push_back(b.element(b.vanishing_generator(i)));
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) denominators.push_back(b.generator(i) * b.generator(j));
  }
  FalsifierResult out;
  for (const auto& a : small_elements(b.ambient_vars(), budget.shift_degree, 1, budget.max_shifts)) {
    const Polynomial l = l0 + a;
    for (const auto& c : denominators) {
      ++out.attempts;
      const Polynomial target = c.ambient * l.with_domain(Domain::integer);
      const MembershipCertificate cert = s.membership(target);
      if (cert.verdict != Membership::member) continue;
      mpz_class den = 1;
      for (const auto& [m, coeff] : cert.representation->terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coeff.get_den().get_mpz_t());
      }
      const SubringElement scale = b.constant(den);
      const SubringElement d = b.element(cert.representation->scaled(mpq_class(den)));
      ConditionCWitness w;
      w.l0 = l0;
      w.a = a;
      w.l = l;
      w.h.coefficients = {b.constant(0) - d, scale * c};
      w.route = "membership";
      if (check_witness(b, w)) {
        out.found = Truth::yes;
        out.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

}  // namespace semiring_lab
