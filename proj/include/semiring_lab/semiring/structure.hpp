#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/core/truth.hpp"
#include "semiring_lab/semiring/congruence.hpp"
#include "semiring_lab/semiring/models.hpp"

namespace semiring_lab {

/// Elements of N[T₁…Tₙ] of degree ≤ max_degree and coefficients ≤
/// max_coefficient, ordered by coefficient sum and then by graded-lex
/// order of their dense coefficient vectors, truncated to `limit`.
inline std::vector<Polynomial> small_elements(std::size_t nvars, std::uint64_t max_degree,
                                              std::uint64_t max_coefficient, std::size_t limit) {
  detail::StateSpace space(nvars, max_degree, max_coefficient);
  std::vector<Polynomial> out;
  detail::State s(space.size(), 0);
  const std::uint64_t max_sum = max_coefficient * space.size();
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t slot, std::uint64_t left) {
    if (out.size() >= limit || left > max_coefficient * (s.size() - slot)) return;
    if (slot + 1 == s.size()) {
      s[slot] = static_cast<std::uint32_t>(left);
      out.push_back(space.decode(s));
      s[slot] = 0;
      return;
    }
    for (std::uint64_t c = 0; c <= std::min(left, max_coefficient); ++c) {
      s[slot] = static_cast<std::uint32_t>(c);
      rec(slot + 1, left - c);
    }
    s[slot] = 0;
  };
  for (std::uint64_t sum = 0; sum <= max_sum && out.size() < limit; ++sum) rec(0, sum);
  return out;
}

/// 1 + 1 = 1 forces a + a = a·(1 + 1) = a for every a, so idempotence is
/// the single word problem (1 + 1, 1).
inline Equivalence is_add_idempotent(const CongruenceClosure& cc) {
  const Presentation& pres = cc.presentation();
  return words_equivalent(pres.constant(2), pres.constant(1), cc);
}

inline Equivalence is_add_idempotent(const Presentation& pres, const SemiringBudget& budget = {}) {
  return is_add_idempotent(congruence_close(pres, budget));
}

/// a + c ~ b + c together with evidence that a ≁ b.
struct CancellationFailure {
  Polynomial a;
  Polynomial b;
  Polynomial c;
  Derivation derivation;  // a + c ~> b + c
  ModelWitness separation;
};

struct Cancellativity {
  Truth verdict = Truth::unknown;
  std::optional<CancellationFailure> witness;
  std::string reason;
};

/// Positive rationals cancel by arithmetic.
inline Cancellativity is_add_cancellative(const EvalHom&) {
  return {Truth::yes, std::nullopt, "addition in Q+ cancels"};
}

/// Free presentations cancel. Otherwise every relation l = r is split as
/// l = a + c, r = b + c with c the coefficientwise minimum; a model of the
/// relations separating a from b refutes cancellativity.
inline Cancellativity is_add_cancellative(const Presentation& pres) {
  if (pres.is_free()) return {Truth::yes, std::nullopt, "free semiring N[T]"};
  const auto& rels = pres.relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto& [l, rhs] = rels[r];
    if (l == rhs) continue;
    Polynomial c(pres.nvars(), Domain::natural);
    for (const auto& [m, lc] : l.terms()) {
      const mpq_class rc = rhs.coefficient(m);
      if (sgn(rc) > 0) c.add_term(m, std::min(lc, rc));
    }
    Polynomial a = (l.with_domain(Domain::integer) - c.with_domain(Domain::integer)).with_domain(Domain::natural);
    Polynomial b = (rhs.with_domain(Domain::integer) - c.with_domain(Domain::integer)).with_domain(Domain::natural);
    if (auto model = find_separating_model(pres, a, b)) {
      DerivationStep step{l, rhs, r, true, Monomial(pres.nvars())};
      return {Truth::no,
              CancellationFailure{std::move(a), std::move(b), std::move(c), Derivation{step}, *model},
              "relation " + std::to_string(r + 1) + " cancels to a separated pair"};
    }
  }
  return {Truth::unknown, std::nullopt, "no separated cancellation found"};
}

/// a ≤ b in Q⁺: b = a + c needs c = b − a > 0.
struct RationalOrder {
  Truth verdict = Truth::no;
  std::optional<mpq_class> c;
};

inline RationalOrder preorder_leq(const mpq_class& a, const mpq_class& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw DomainViolation("elements of Q+ are strictly positive");
  if (a < b) return {Truth::yes, mpq_class(b - a)};
  return {Truth::no, std::nullopt};
}

inline RationalOrder preorder_leq(const Polynomial& a, const Polynomial& b, const EvalHom& phi) {
  return preorder_leq(phi(a), phi(b));
}

/// a ≤ b in a presented semiring: b ~ a + c for some nonzero c ∈ A⁺.
struct PresentedOrder {
  Truth verdict = Truth::unknown;
  std::optional<Polynomial> c;
  std::optional<Derivation> derivation;  // b ~> a + c
  std::optional<ModelWitness> refutation;
};

inline PresentedOrder preorder_leq(const Polynomial& a, const Polynomial& b,
                                   const CongruenceClosure& cc) {
  const Presentation& pres = cc.presentation();
  for (const Polynomial* x : {&a, &b}) {
    if (x->nvars() != pres.nvars()) throw ArityMismatch("element does not live in the presentation");
    if (!cc.within_budget(*x)) throw OutOfBudget("element exceeds the degree or coefficient budget");
  }
  const Polynomial an = a.with_domain(Domain::natural);
  auto dominates = [&](const Polynomial& e) {
    if (e == an) return false;
    for (const auto& [m, c] : an.terms()) {
      if (e.coefficient(m) < c) return false;
    }
    return true;
  };
  PresentedOrder out;
  if (pres.is_free()) {
    out.verdict = from_bool(dominates(b));
    if (out.verdict == Truth::yes) {
      out.c = (b.with_domain(Domain::integer) - an.with_domain(Domain::integer)).with_domain(Domain::natural);
      out.derivation = Derivation{};
    }
    return out;
  }
  if (auto model = find_order_refutation(pres, an, b.with_domain(Domain::natural))) {
    out.verdict = Truth::no;
    out.refutation = std::move(model);
    return out;
  }
  if (auto found = cc.find_in_class(b.with_domain(Domain::natural), dominates)) {
    out.verdict = Truth::yes;
    out.c = (found->first.with_domain(Domain::integer) - an.with_domain(Domain::integer))
                .with_domain(Domain::natural);
    out.derivation = std::move(found->second);
  }
  return out;
}

/// Elements ℓ with ℓ + 1 ~ ℓ, each with its derivation.
struct LSample {
  std::vector<Polynomial> elements;
  std::vector<Derivation> derivations;  // ℓ + 1 ~> ℓ
  std::size_t candidates = 0;           // elements examined
  std::size_t undecided = 0;            // candidates left Unknown
  std::size_t closure_checks = 0;       // shifted derivations replayed
  bool closure_holds = true;            // every replayed shift was valid
};

/// Shifts every step of a derivation by the same summand.
inline Derivation shift_derivation(const Derivation& d, const Polynomial& a) {
  Derivation out;
  for (const auto& step : d) {
    DerivationStep s = step;
    s.before = s.before + a;
    s.after = s.after + a;
    out.push_back(std::move(s));
  }
  return out;
}

/// Empty for a Q⁺ target: x + 1 = x has no rational solution.
inline LSample find_L(const EvalHom&) { return {}; }

/// Scans the first `max_candidates` budgeted elements for ℓ + 1 ~ ℓ. For
/// each hit, L + A⁺ ⊂ L is spot-checked by replaying the derivation shifted
/// by 1 and by each variable.
inline LSample find_L(const CongruenceClosure& cc, std::size_t max_candidates = 64) {
  const Presentation& pres = cc.presentation();
  const SemiringBudget& budget = cc.budget();
  LSample out;
  const Polynomial one = pres.constant(1);
  std::vector<Polynomial> shifts{one};
  for (std::size_t i = 0; i < pres.nvars(); ++i) shifts.push_back(pres.variable(i));
  for (const auto& l : small_elements(pres.nvars(), budget.max_degree, budget.max_coefficient,
                                      max_candidates)) {
    const Polynomial l1 = l + one;
    if (!cc.within_budget(l1)) continue;
    ++out.candidates;
    Equivalence eq = words_equivalent(l1, l, cc);
    if (eq.verdict == Truth::unknown) ++out.undecided;
    if (eq.verdict != Truth::yes) continue;
    for (const auto& a : shifts) {
      ++out.closure_checks;
      if (!replay(pres, l1 + a, l + a, shift_derivation(*eq.derivation, a))) out.closure_holds = false;
    }
    out.elements.push_back(l);
    out.derivations.push_back(std::move(*eq.derivation));
  }
  return out;
}

}  // namespace semiring_lab
