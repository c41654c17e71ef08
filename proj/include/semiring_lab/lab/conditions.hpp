#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiring_lab/abhyankar/abhyankar.hpp"
#include "semiring_lab/abhyankar/valued_subring.hpp"

namespace semiring_lab {

enum class Verdict { holds, fails, unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "Holds";
    case Verdict::fails:
      return "Fails";
    case Verdict::unknown:
      return "Unknown";
  }
  return "?";
}

struct ConditionResult {
  Verdict verdict = Verdict::unknown;
  std::string summary;
};

struct LabBudget {
  GroebnerBudget groebner{};
  FalsifierBudget falsifier{};
  std::uint64_t evidence = 20;         // condition d: preimages of 1/m for m up to this
  std::uint64_t preimage_degree = 2;   // products of at most this many generators
};

/// 1 = Σ cofactorᵢ·elementᵢ in A with every elementᵢ ∈ I.
struct UnitIdentity {
  std::vector<SubringElement> elements;
  std::vector<Polynomial> cofactors;
  Polynomial expansion;
  bool elements_in_I = false;
  bool holds() const {
    return elements_in_I && !expansion.is_zero() && expansion.is_constant() && expansion.constant_term() == 1;
  }
};

/// φ(element) = 1/m.
struct Preimage {
  std::uint64_t m = 0;
  SubringElement element;
  mpq_class value;
};

/// Condition d refuted: the values of the generators have denominators
/// dividing `denominator`, so φ(B) ⊂ Z[1/denominator] misses 1/prime.
struct DenominatorBound {
  mpz_class denominator;
  std::uint64_t prime = 0;
};

/// A ring B = Z[g₁,…,g_m] ⊂ Z[T₁,…,Tₙ] with φ: B → Q (or onto the zero
/// ring when `values` is empty, i.e. I = B), and the ℓ₀ to try for
/// condition c.
struct Candidate {
  std::string name;
  std::vector<Polynomial> generators;
  std::optional<std::vector<mpq_class>> values;
  std::vector<Polynomial> l0;
};

struct ConditionReport {
  std::string candidate;
  std::size_t ambient_vars = 0;
  std::size_t truncation = 0;  // generators used
  VarNames tags;               // names of the generators in representations
  Truth well_defined = Truth::unknown;
  std::string well_defined_by;
  ConditionResult a, b, c, d;
  std::vector<FractionCertificate> quotient_field;
  std::optional<UnitIdentity> unit;
  std::vector<ConditionCWitness> c_witnesses;
  std::vector<Polynomial> c_unresolved;
  std::vector<Preimage> preimages;
  std::size_t evidence_truncation = 0;
  VarNames evidence_tags;
  std::optional<DenominatorBound> d_refutation;
  LabBudget budget;
};

namespace detail {

inline bool integral(const std::vector<Polynomial>& ps) {
  for (const auto& p : ps) {
    if (!p.has_integral_coefficients()) return false;
  }
  return true;
}

inline std::vector<SubringElement> denominator_candidates(const ValuedSubring& b, bool with_vanishing) {
  std::vector<SubringElement> out{b.constant(1)};
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b.generator(i));
  if (with_vanishing) {
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b.element(b.vanishing_generator(i)));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) out.push_back(b.generator(i) * b.generator(j));
  }
  return out;
}

// Tᵢ = N/D with D from a fixed list and D·Tᵢ ∈ Q[g] decided by elimination;
// a rational representation is cleared together with D.
inline void check_a(const ValuedSubring& b, bool with_vanishing, ConditionReport& r) {
  const std::size_t n = b.ambient_vars();
  std::size_t found = 0;
  const auto dens = denominator_candidates(b, with_vanishing);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial ti = Polynomial::variable(n, i, Domain::integer);
    for (const auto& d : dens) {
      const MembershipCertificate cert = b.subring().membership(d.ambient * ti);
      if (cert.verdict != Membership::member) continue;
      mpz_class den = 1;
      for (const auto& [m, c] : cert.representation->terms()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
      }
      FractionCertificate f = make_fraction(ti, b.element(cert.representation->scaled(mpq_class(den))),
                                            b.constant(den) * d);
      if (!f.holds()) continue;
      r.quotient_field.push_back(std::move(f));
      ++found;
      break;
    }
  }
  if (found == n) {
    r.a = {Verdict::holds, "every variable is a quotient of elements of B (cross-multiplication checked)"};
  } else {
    r.a = {Verdict::unknown, std::to_string(n - found) + " variable(s) without a fraction certificate"};
  }
}

// 1 ∈ I·A, tried on single vanishing elements, consecutive pairs, then all
// of them; cofactors must be integral for the identity to live in A.
inline void check_b(const ValuedSubring& b, const GroebnerBudget& budget, ConditionReport& r) {
  std::vector<SubringElement> gens;
  for (std::size_t i = 0; i < b.size(); ++i) gens.push_back(b.element(b.vanishing_generator(i)));
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t i = 0; i < gens.size(); ++i) subsets.push_back({i});
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) subsets.push_back({i, i + 1});
  std::vector<std::size_t> all(gens.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (gens.size() > 2) subsets.push_back(all);
  bool refuted = false;
  bool saw_rational = false;
  for (const auto& subset : subsets) {
    std::vector<Polynomial> ambient;
    for (auto i : subset) ambient.push_back(gens[i].ambient);
    const Polynomial one = Polynomial::constant(b.ambient_vars(), 1, Domain::integer);
    const MembershipCertificate cert = ideal_membership(one, ambient, budget);
    if (cert.verdict == Membership::non_member && subset.size() == gens.size()) refuted = true;
    if (cert.verdict != Membership::member) continue;
    if (!integral(cert.cofactors)) {
      saw_rational = true;
      continue;
    }
    UnitIdentity u;
    u.elements_in_I = true;
    u.expansion = Polynomial(b.ambient_vars(), Domain::integer);
    for (std::size_t j = 0; j < subset.size(); ++j) {
      u.elements.push_back(gens[subset[j]]);
      u.cofactors.push_back(cert.cofactors[j].with_domain(Domain::integer));
      u.elements_in_I = u.elements_in_I && b.in_I(u.elements.back());
      u.expansion += u.cofactors.back() * u.elements.back().ambient;
    }
    if (!u.holds()) continue;
    r.unit = std::move(u);
    r.b = {Verdict::holds, "1 = sum of cofactors times elements of I (expansion checked)"};
    return;
  }
  if (refuted) {
    r.b = {Verdict::fails, "1 is not in the ideal generated by I over Q[T] (complete basis)"};
  } else {
    r.b = {Verdict::unknown, saw_rational ? "only identities with rational cofactors found"
                                          : "unit ideal membership undecided within budget"};
  }
}

inline void check_c(const std::vector<Polynomial>& l0s,
                    const std::function<FalsifierResult(const Polynomial&)>& falsify, ConditionReport& r) {
  if (l0s.empty()) {
    r.c = {Verdict::unknown, "no l0 candidates supplied"};
    return;
  }
  for (const auto& l0 : l0s) {
    FalsifierResult f = falsify(l0);
    if (f.found == Truth::yes) {
      r.c_witnesses.push_back(std::move(*f.witness));
    } else {
      r.c_unresolved.push_back(l0);
    }
  }
  if (r.c_unresolved.empty()) {
    r.c = {Verdict::fails, "every supplied l0 has l = l0 + a and h(l) = 0 with h outside I[X]"};
  } else {
    r.c = {Verdict::unknown, std::to_string(r.c_unresolved.size()) + " supplied l0 without a counterexample"};
  }
}

inline std::uint64_t smallest_prime_factor(std::uint64_t m) {
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) return p;
  }
  return m;
}

inline Polynomial tag_monomial(std::size_t nvars, const std::vector<std::size_t>& factors) {
  std::vector<Exponent> e(nvars, 0);
  for (auto i : factors) ++e[i];
  return Polynomial::term(Monomial(std::move(e)), 1, Domain::integer);
}

// An integer combination of generator products with φ-value 1/m: a single
// product when one has that value, otherwise a Bezout combination of all of
// them.
inline std::optional<SubringElement> preimage(const ValuedSubring& b, std::uint64_t m,
                                              std::uint64_t degree) {
  const mpq_class target(1, static_cast<unsigned long>(m));
  std::vector<Polynomial> monomials{Polynomial::constant(b.size(), 1, Domain::integer)};
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::uint64_t d = 1; d <= degree; ++d) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : layer) {
      for (std::size_t i = f.empty() ? 0 : f.back(); i < b.size(); ++i) {
        auto g = f;
        g.push_back(i);
        monomials.push_back(tag_monomial(b.size(), g));
        next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  std::vector<mpq_class> values;
  for (const auto& mono : monomials) {
    values.push_back(poly_eval(mono, b.values()).value());
    if (values.back() == target) return b.element(mono);
  }
  mpz_class common = 1;
  for (const auto& v : values) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den().get_mpz_t());
  // values[i] = a[i]/common; need Σ c[i]·a[i] = common/m.
  if (common % m != 0) return std::nullopt;
  const mpz_class want = common / m;
  mpz_class g = 0;
  std::vector<mpz_class> coeff(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const mpz_class a = mpz_class(values[i] * common);
    if (a == 0) continue;
    mpz_class ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    for (auto& c : coeff) c *= s;
    coeff[i] = t;
    g = ng;
  }
  if (g == 0 || want % g != 0) return std::nullopt;
  const mpz_class scale = want / g;
  Polynomial rep(b.size(), Domain::integer);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (coeff[i] != 0) rep += monomials[i].scaled(mpq_class(coeff[i] * scale));
  }
  SubringElement e = b.element(rep);
  if (b.phi(e) != target) return std::nullopt;
  return e;
}

inline void check_d(const ValuedSubring& b, const LabBudget& budget, ConditionReport& r) {
  r.evidence_truncation = b.size();
  r.evidence_tags = b.tag_names();
  mpz_class den = 1;
  for (const auto& v : b.values()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  for (std::uint64_t m = 1; m <= budget.evidence; ++m) {
    for (std::uint64_t q = m; q > 1;) {
      const std::uint64_t p = smallest_prime_factor(q);
      if (den % p != 0) {
        r.d_refutation = DenominatorBound{den, p};
        r.d = {Verdict::fails, "phi(B) lies in Z[1/" + den.get_str() + "], which misses 1/" + std::to_string(p)};
        return;
      }
      while (q % p == 0) q /= p;
    }
    auto e = preimage(b, m, budget.preimage_degree);
    if (!e) {
      r.d = {Verdict::unknown, "no preimage of 1/" + std::to_string(m) + " within budget"};
      return;
    }
    r.preimages.push_back({m, *e, b.phi(*e)});
  }
  r.d = {Verdict::holds, "evidence: preimages of 1/m for m <= " + std::to_string(budget.evidence)};
}

}  // namespace detail

/// Checks conditions a)–d) on a generic candidate. Every Holds carries a
/// checked certificate and every Fails a checked witness or refutation;
/// anything else is Unknown.
inline ConditionReport verify_conditions(const Candidate& cand, const LabBudget& budget = {}) {
  if (cand.generators.empty()) throw PreconditionError("candidate needs at least one generator");
  ConditionReport r;
  r.candidate = cand.name;
  r.budget = budget;
  r.ambient_vars = cand.generators.front().nvars();
  r.truncation = cand.generators.size();
  const bool zero_ring = !cand.values.has_value();
  const std::vector<mpq_class> values =
      zero_ring ? std::vector<mpq_class>(cand.generators.size(), 0) : *cand.values;
  const ValuedSubring b(cand.generators, values, VarNames::indexed("X", 1, cand.generators.size()),
                        budget.groebner, true);
  r.tags = b.tag_names();
  detail::check_a(b, !zero_ring, r);
  if (zero_ring) {
    r.well_defined = Truth::yes;
    r.well_defined_by = "zero ring";
    UnitIdentity u;
    u.elements = {b.constant(1)};
    u.cofactors = {Polynomial::constant(r.ambient_vars, 1, Domain::integer)};
    u.expansion = u.cofactors[0];
    u.elements_in_I = true;
    r.unit = std::move(u);
    r.b = {Verdict::holds, "I = B contains 1"};
    if (cand.l0.empty()) {
      r.c = {Verdict::unknown, "no l0 candidates supplied"};
    } else {
      r.c = {Verdict::holds, "I = B, so every h lies in I[X]"};
    }
    r.d = {Verdict::fails, "B/I is the zero ring"};
    return r;
  }
  r.well_defined = b.relation_verification().verdict;
  r.well_defined_by = "relation ideal";
  if (r.well_defined != Truth::yes) {
    const std::string why = r.well_defined == Truth::no ? "phi is not well defined" : "well-definedness of phi undecided";
    r.b = r.c = r.d = {Verdict::unknown, why};
    return r;
  }
  detail::check_b(b, budget.groebner, r);
  detail::check_c(cand.l0, [&](const Polynomial& l0) { return condition_c_search(b, l0, budget.falsifier); }, r);
  detail::check_d(b, budget, r);
  return r;
}

/// The same checks on the Abhyankar ring, using its explicit certificates:
/// the two quotient-field fractions for a, the first IA identity as a
/// fallback for b, the quotient-field falsifier for c, and the generator
/// family f₂…f_M (verified by the germ certificate) for d.
inline ConditionReport verify_conditions(const AbhyankarContext& ctx, const std::vector<Polynomial>& l0s,
                                         const LabBudget& budget = {}) {
  ConditionReport r;
  r.candidate = "abhyankar";
  r.budget = budget;
  r.ambient_vars = 2;
  r.truncation = ctx.k() - 1;
  r.tags = ctx.ring().tag_names();
  r.well_defined = ctx.well_definedness().verdict;
  r.well_defined_by = ctx.well_definedness().relations.verdict == Truth::yes ? "relation ideal and germ"
                                                                              : "germ substitution";
  if (ctx.k() >= 3) {
    auto [t2, t1] = qf_witnesses(ctx);
    const bool ok = t1.holds() && t2.holds();
    r.quotient_field = {std::move(t1), std::move(t2)};
    r.a = ok ? ConditionResult{Verdict::holds, "T1 = f2(2f2 - 1)/f3 and T2 = f3/(2f2 - 1)"}
             : ConditionResult{Verdict::unknown, "fraction certificates failed to check"};
  } else {
    r.a = {Verdict::unknown, "k < 3: no fraction certificates"};
  }
  if (!ctx.verified()) {
    r.b = r.c = r.d = {Verdict::unknown, "well-definedness of phi undecided"};
    return r;
  }
  detail::check_b(ctx.ring(), budget.groebner, r);
  if (r.b.verdict != Verdict::holds && ctx.k() >= 3) {
    const IAWitness w = ia_witness(ctx, 2);
    if (w.holds()) {
      UnitIdentity u;
      u.elements = {w.first, w.second};
      u.cofactors = {w.multiplier, Polynomial::constant(2, -1, Domain::integer)};
      u.expansion = w.expansion;
      u.elements_in_I = true;
      r.unit = std::move(u);
      r.b = {Verdict::holds, "1 = 3T2(2f2 - 1) - (3f3 - 1)"};
    }
  }
  detail::check_c(l0s, [&](const Polynomial& l0) { return condition_c_falsifier(ctx, l0, budget.falsifier); }, r);
  const std::size_t family = std::max<std::size_t>(ctx.k(), budget.evidence);
  const AbhyankarContext wide(family, {std::nullopt, false});
  if (!wide.verified()) {
    r.d = {Verdict::unknown, "generator family not verified"};
    return r;
  }
  detail::check_d(wide.ring(), budget, r);
  return r;
}

}  // namespace semiring_lab
