#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/abhyankar/valued_subring.hpp"

namespace semiring_lab {

/// f₂ = T₁T₂ and f_{n+1} = (n·fₙ − 1)·T₂, expanded in Z[T₁, T₂].
inline Polynomial abhyankar_generator(std::size_t n) {
  if (n < 2) throw PreconditionError("Abhyankar generators start at n = 2");
  const Polynomial t2 = Polynomial::variable(2, 1, Domain::integer);
  Polynomial f = Polynomial::variable(2, 0, Domain::integer) * t2;
  for (std::size_t i = 2; i < n; ++i) {
    f = (f.scaled(static_cast<unsigned long>(i)) - Polynomial::constant(2, 1, Domain::integer)) * t2;
  }
  return f;
}

/// f₂, …, f_k.
inline std::vector<Polynomial> abhyankar_generators(std::size_t k) {
  if (k < 2) throw PreconditionError("truncation must satisfy k >= 2");
  std::vector<Polynomial> out;
  for (std::size_t n = 2; n <= k; ++n) out.push_back(abhyankar_generator(n));
  return out;
}

/// Certificate that φ(fₙ) = 1/n extends to a ring map on Z[f₂,…,f_k]
/// without knowing the relations: the substitution ρ(T₂) = 1/t,
/// ρ(T₁) = t·g₂(t) maps every fₙ to a polynomial gₙ(t) with gₙ(0) = 1/n,
/// where g_k = 1/k and gₙ = (1 + t·g_{n+1})/n. Then φ = (t ↦ 0)∘ρ on B.
/// Each identity ρ(fₙ) = gₙ is checked on the expanded fₙ by clearing the
/// powers of 1/t.
struct GermCertificate {
  std::size_t k = 0;
  std::vector<Polynomial> images;  // gₙ(t) for n = 2…k, one variable t
  bool substitution_checked = false;
  bool constants_checked = false;
  bool holds() const noexcept { return substitution_checked && constants_checked; }
};

inline GermCertificate germ_certificate(std::size_t k) {
  if (k < 2) throw PreconditionError("truncation must satisfy k >= 2");
  GermCertificate cert;
  cert.k = k;
  const Polynomial t = Polynomial::variable(1, 0, Domain::rational);
  const Polynomial one = Polynomial::constant(1, 1, Domain::rational);
  std::vector<Polynomial> g(k + 1, Polynomial(1, Domain::rational));
  g[k] = Polynomial::constant(1, mpq_class(1, static_cast<unsigned long>(k)), Domain::rational);
  for (std::size_t n = k - 1; n >= 2; --n) {
    g[n] = (one + t * g[n + 1]).scaled(mpq_class(1, static_cast<unsigned long>(n)));
  }
  cert.images.assign(g.begin() + 2, g.end());

  const Polynomial t1_image = t * g[2];
  cert.substitution_checked = true;
  cert.constants_checked = true;
  for (std::size_t n = 2; n <= k; ++n) {
    const Polynomial f = abhyankar_generator(n);
    const Exponent shift = static_cast<Exponent>(f.degree_in(1));
    // t^shift · ρ(f) with ρ(T₁^a T₂^b) = (t g₂)^a t^{-b}
    Polynomial cleared(1, Domain::rational);
    for (const auto& [m, c] : f.terms()) {
      const Polynomial term = t1_image.pow(m[0]).shifted(Monomial{shift - m[1]}, c);
      cleared += term;
    }
    if (cleared != g[n].shifted(Monomial{shift}, 1)) cert.substitution_checked = false;
    if (g[n].constant_term() != mpq_class(1, static_cast<unsigned long>(n))) cert.constants_checked = false;
  }
  return cert;
}

struct WellDefinedness {
  std::size_t k = 0;
  RelationVerification relations;
  GermCertificate germ;
  Truth verdict = Truth::unknown;
  bool partial() const noexcept { return relations.attempted && !relations.complete; }
};

/// The truncated subring B_k = Z[f₂,…,f_k] ⊂ Z[T₁,T₂] with φ(fₙ) = 1/n.
class AbhyankarContext {
 public:
  struct Options {
    // Defaults to degree cap 2k, enough for the elimination to finish.
    std::optional<GroebnerBudget> budget;
    // Compute the elimination basis (relation ideal, membership). The germ
    // certificate alone suffices for φ; large k may skip elimination.
    bool eliminate = true;
  };

  explicit AbhyankarContext(std::size_t k) : AbhyankarContext(k, Options{}) {}

  AbhyankarContext(std::size_t k, const Options& options)
      : k_(check_k(k)),
        ring_(abhyankar_generators(k), values(k), VarNames::tags(k),
              options.budget.value_or(default_budget(k)), options.eliminate) {
    wd_.k = k;
    wd_.relations = ring_.relation_verification();
    wd_.germ = germ_certificate(k);
    if (wd_.relations.verdict == Truth::no) {
      wd_.verdict = Truth::no;
    } else if (wd_.germ.holds() || wd_.relations.verdict == Truth::yes) {
      wd_.verdict = Truth::yes;
    }
  }

  std::size_t k() const noexcept { return k_; }
  const ValuedSubring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return ring_.generators(); }
  const std::vector<mpq_class>& values() const noexcept { return ring_.values(); }
  const WellDefinedness& well_definedness() const noexcept { return wd_; }
  bool verified() const noexcept { return wd_.verdict == Truth::yes; }

  /// fₙ as an element (representation Xₙ).
  SubringElement f(std::size_t n) const {
    if (n < 2 || n > k_) throw PreconditionError("f" + std::to_string(n) + " is outside B_" + std::to_string(k_));
    return ring_.generator(n - 2);
  }

  SubringElement element(const std::string& representation) const { return ring_.element(representation); }
  SubringElement element(const Polynomial& representation) const { return ring_.element(representation); }
  SubringElement constant(const mpz_class& c) const { return ring_.constant(c); }

  mpq_class phi_eval(const SubringElement& e) const {
    require_verified();
    return ring_.phi(e);
  }

  bool in_I(const SubringElement& e) const { return sgn(phi_eval(e)) == 0; }

  bool univar_in_ideal(const UnivarOverSubring& h) const {
    require_verified();
    return ring_.univar_in_ideal(h);
  }

 private:
  static std::size_t check_k(std::size_t k) {
    if (k < 2) throw PreconditionError("truncation must satisfy k >= 2");
    return k;
  }

  static GroebnerBudget default_budget(std::size_t k) {
    GroebnerBudget b;
    b.max_degree = 2 * k;
    return b;
  }

  static std::vector<mpq_class> values(std::size_t k) {
    std::vector<mpq_class> v;
    for (std::size_t n = 2; n <= k; ++n) v.emplace_back(1, static_cast<unsigned long>(n));
    return v;
  }

  void require_verified() const {
    if (!verified()) throw PreconditionError("phi is not verified to be well defined on B_" + std::to_string(k_));
  }

  std::size_t k_;
  ValuedSubring ring_;
  WellDefinedness wd_;
};

inline WellDefinedness well_definedness_check(std::size_t k,
                                              std::optional<GroebnerBudget> budget = std::nullopt) {
  return AbhyankarContext(k, {budget, true}).well_definedness();
}

/// 1 = (n+1)·T₂·(n·fₙ − 1) − ((n+1)·f_{n+1} − 1), with both bracketed
/// factors in I.
struct IAWitness {
  std::size_t n = 0;
  SubringElement first;        // n·fₙ − 1
  SubringElement second;       // (n+1)·f_{n+1} − 1
  Polynomial multiplier;       // (n+1)·T₂
  Polynomial expansion;        // multiplier·first − second
  bool first_in_I = false;
  bool second_in_I = false;
  bool holds() const { return first_in_I && second_in_I && expansion == Polynomial::constant(2, 1, Domain::integer); }
};

inline IAWitness ia_witness(const AbhyankarContext& ctx, std::size_t n) {
  if (n < 2 || n + 1 > ctx.k()) {
    throw PreconditionError("IA witness for n = " + std::to_string(n) + " needs 2 <= n and n + 1 <= k");
  }
  IAWitness w;
  w.n = n;
  const auto nn = static_cast<unsigned long>(n);
  w.first = ctx.constant(nn) * ctx.f(n) - ctx.constant(1);
  w.second = ctx.constant(nn + 1) * ctx.f(n + 1) - ctx.constant(1);
  w.multiplier = Polynomial::variable(2, 1, Domain::integer).scaled(nn + 1);
  w.expansion = w.multiplier * w.first.ambient - w.second.ambient;
  w.first_in_I = ctx.in_I(w.first);
  w.second_in_I = ctx.in_I(w.second);
  return w;
}

/// T₂ = f₃/(2f₂ − 1) and T₁ = f₂(2f₂ − 1)/f₃.
inline std::pair<FractionCertificate, FractionCertificate> qf_witnesses(const AbhyankarContext& ctx) {
  if (ctx.k() < 3) throw PreconditionError("quotient-field witnesses need k >= 3");
  const SubringElement f2 = ctx.f(2), f3 = ctx.f(3);
  const SubringElement u = ctx.constant(2) * f2 - ctx.constant(1);
  return {make_fraction(Polynomial::variable(2, 1, Domain::integer), f3, u),
          make_fraction(Polynomial::variable(2, 0, Domain::integer), f2 * u, f3)};
}

/// One step of the contradiction: an extension ψ of φ to A would give
/// ψ(f_{n+1}) = (n·ψ(fₙ) − 1)·ψ(T₂) = coefficient·t₂ with coefficient = 0,
/// yet φ(f_{n+1}) = 1/(n+1).
struct NonExtendabilityStep {
  std::size_t n = 0;
  mpq_class phi_fn;        // 1/n
  mpq_class coefficient;   // n·(1/n) − 1
  Polynomial image;        // coefficient·t₂ as a polynomial in t₂
  mpq_class required;      // 1/(n+1)
  bool contradiction = false;
};

struct NonExtendability {
  std::optional<std::size_t> first;
  std::vector<NonExtendabilityStep> steps;
};

inline NonExtendability non_extendability(std::size_t n_max) {
  if (n_max < 2) throw PreconditionError("n_max must be at least 2");
  NonExtendability out;
  const Polynomial t2 = Polynomial::variable(1, 0, Domain::rational);
  for (std::size_t n = 2; n <= n_max; ++n) {
    NonExtendabilityStep s;
    s.n = n;
    const auto nn = static_cast<unsigned long>(n);
    s.phi_fn = mpq_class(1, nn);
    s.coefficient = mpq_class(nn) * s.phi_fn - 1;
    s.image = t2.scaled(s.coefficient);
    s.required = mpq_class(1, nn + 1);
    // The image is a polynomial in t₂; it equals the constant 1/(n+1) for
    // some t₂ only if its non-constant part vanishes and the constants agree.
    const Polynomial diff = s.image - Polynomial::constant(1, s.required, Domain::rational);
    s.contradiction = diff.is_constant() && !diff.is_zero();
    if (s.contradiction && !out.first) out.first = n;
    out.steps.push_back(std::move(s));
  }
  return out;
}

/// Clears the denominators of ℓ ∈ Q(T₁,T₂) written through T₂ = f₃/u and
/// T₁ = f₂u/f₃ (u = 2f₂ − 1): with ℓ = Σ c·T₁^α T₂^β, take
/// c = f₃^A·u^B with A = max(α − β, 0), B = max(β − α, 0) over the terms, and
/// d = Σ c·f₂^α u^{α−β+B} f₃^{β−α+A}; then h = cX − d has h(ℓ) = 0.
inline std::optional<ConditionCWitness> quotient_field_witness(const AbhyankarContext& ctx,
                                                               const Polynomial& l0,
                                                               const Polynomial& a) {
  if (ctx.k() < 3) return std::nullopt;
  const Polynomial l = l0 + a;
  long max_a = 0, max_b = 0;
  for (const auto& [m, c] : l.terms()) {
    const long diff = static_cast<long>(m[0]) - static_cast<long>(m[1]);
    max_a = std::max(max_a, diff);
    max_b = std::max(max_b, -diff);
  }
  const SubringElement f2 = ctx.f(2), f3 = ctx.f(3);
  const SubringElement u = ctx.constant(2) * f2 - ctx.constant(1);
  auto power = [&](const SubringElement& x, long e) {
    SubringElement r = ctx.constant(1);
    for (long i = 0; i < e; ++i) r = r * x;
    return r;
  };
  const SubringElement c = power(f3, max_a) * power(u, max_b);
  SubringElement d = ctx.constant(0);
  for (const auto& [m, coeff] : l.terms()) {
    const long alpha = m[0], beta = m[1];
    d = d + ctx.constant(coeff.get_num()) * power(f2, alpha) * power(u, alpha - beta + max_b) *
                power(f3, beta - alpha + max_a);
  }
  ConditionCWitness w;
  w.l0 = l0;
  w.a = a;
  w.l = l;
  w.h.coefficients = {ctx.constant(0) - d, c};
  w.route = "quotient-field";
  if (!check_witness(ctx.ring(), w)) return std::nullopt;
  return w;
}

/// Searches ℓ = ℓ₀ + a for h ∈ B_k[X] with h(ℓ) = 0 and h ∉ I[X]: first
/// through the quotient-field expression of ℓ, then (when the elimination
/// basis is available) through subring membership of c·ℓ. Every returned
/// witness has been replayed.
inline FalsifierResult condition_c_falsifier(const AbhyankarContext& ctx, const Polynomial& l0,
                                             const FalsifierBudget& budget = {}) {
  if (l0.domain() != Domain::natural) throw DomainMismatch("l0 must be an element of N[T]");
  if (l0.nvars() != 2) throw ArityMismatch("l0 must be an element of N[T1, T2]");
  if (!ctx.verified()) throw PreconditionError("phi is not verified to be well defined");
  FalsifierResult out;
  for (const auto& a : small_elements(2, budget.shift_degree, 1, budget.max_shifts)) {
    ++out.attempts;
    if (auto w = quotient_field_witness(ctx, l0, a)) {
      out.found = Truth::yes;
      out.witness = std::move(w);
      return out;
    }
  }
  if (ctx.ring().has_elimination()) {
    FalsifierResult r = condition_c_search(ctx.ring(), l0, budget);
    r.attempts += out.attempts;
    return r;
  }
  return out;
}

}  // namespace semiring_lab
