#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "semiring_lab/semiring/congruence.hpp"
#include "semiring_lab/semiring/models.hpp"
#include "semiring_lab/semiring/structure.hpp"

namespace semiring_lab {

/// Which of the distinguished subsets of S an element is tested against:
/// P (bounded by positive rationals on both sides), Q (bounded above) or
/// L (ℓ + 1 = ℓ).
enum class SubsetTag { P, Q, L };

inline std::string to_string(SubsetTag t) {
  switch (t) {
    case SubsetTag::P:
      return "P";
    case SubsetTag::Q:
      return "Q";
    case SubsetTag::L:
      return "L";
  }
  return "?";
}

struct SubsetAnswer {
  Truth verdict = Truth::unknown;
  std::string evidence;
};

/// Exact answers for a Q⁺ evaluation target. The preorder on Q⁺ is strict,
/// so s ≤ s + 1 and s/2 ≤ s are the bounds used.
inline SubsetAnswer subset_member(SubsetTag tag, const mpq_class& s) {
  if (sgn(s) <= 0) throw DomainViolation("elements of Q+ are strictly positive");
  const mpq_class upper = s + 1;
  const mpq_class lower = s / 2;
  switch (tag) {
    case SubsetTag::Q:
      return {Truth::yes, s.get_str() + " <= " + upper.get_str()};
    case SubsetTag::P:
      return {Truth::yes, lower.get_str() + " <= " + s.get_str() + " <= " + upper.get_str()};
    case SubsetTag::L:
      return {Truth::no, "x + 1 != x in Q"};
  }
  return {};
}

namespace detail {

// A presented semiring need not contain Q⁺; the positive integers 1…C stand
// in for it. Refutations use models that send every positive rational to
// the same value, so they rule out all of Q⁺ at once.
inline SubsetAnswer upper_bound(const Polynomial& s, const CongruenceClosure& cc) {
  const Presentation& pres = cc.presentation();
  const Polynomial one = pres.constant(1);
  if (auto model = find_model(pres, {s, one}, [](const auto& m, const auto& v) { return !m.leq(v[0], v[1]); },
                              ModelFamilies::constant_collapsing)) {
    return {Truth::no, "model " + model->model + " puts the element above every constant"};
  }
  for (std::uint64_t m = 1; m <= cc.budget().max_coefficient; ++m) {
    const Polynomial bound = pres.constant(m);
    const PresentedOrder r = preorder_leq(s, bound, cc);
    if (r.verdict == Truth::yes) {
      return {Truth::yes, "bounded by " + std::to_string(m) + " with c = " +
                              format(*r.c, VarNames::ambient(pres.nvars()))};
    }
  }
  return {Truth::unknown, "no constant bound found within budget"};
}

inline SubsetAnswer lower_bound(const Polynomial& s, const CongruenceClosure& cc) {
  const Presentation& pres = cc.presentation();
  const Polynomial one = pres.constant(1);
  if (auto model = find_model(pres, {one, s}, [](const auto& m, const auto& v) { return !m.leq(v[0], v[1]); },
                              ModelFamilies::constant_collapsing)) {
    return {Truth::no, "model " + model->model + " puts the element below every constant"};
  }
  const PresentedOrder r = preorder_leq(one, s, cc);
  if (r.verdict == Truth::yes) {
    return {Truth::yes, "above 1 with c = " + format(*r.c, VarNames::ambient(pres.nvars()))};
  }
  return {Truth::unknown, "no constant lower bound found within budget"};
}

}  // namespace detail

/// Three-valued answers inside a presented semiring.
inline SubsetAnswer subset_member(SubsetTag tag, const Polynomial& s, const CongruenceClosure& cc) {
  if (!cc.within_budget(s)) throw OutOfBudget("element exceeds the degree or coefficient budget");
  switch (tag) {
    case SubsetTag::Q:
      return detail::upper_bound(s, cc);
    case SubsetTag::P: {
      SubsetAnswer lo = detail::lower_bound(s, cc);
      if (lo.verdict == Truth::no) return lo;
      SubsetAnswer hi = detail::upper_bound(s, cc);
      return {lo.verdict && hi.verdict, lo.evidence + "; " + hi.evidence};
    }
    case SubsetTag::L: {
      const Polynomial s1 = s + cc.presentation().constant(1);
      if (!cc.within_budget(s1)) throw OutOfBudget("element + 1 exceeds the budget");
      const Equivalence eq = words_equivalent(s1, s, cc);
      std::string evidence = eq.verdict == Truth::yes  ? "derivation of length " + std::to_string(eq.derivation->size())
                             : eq.verdict == Truth::no ? "separated in model " + eq.separation->model
                                                       : "undecided within budget";
      return {eq.verdict, std::move(evidence)};
    }
  }
  return {};
}

/// Membership in P, Q or L over a fixed structure.
class BoundedSubsetPredicate {
 public:
  BoundedSubsetPredicate(SubsetTag tag, EvalHom phi) : tag_(tag), structure_(std::move(phi)) {}
  BoundedSubsetPredicate(SubsetTag tag, std::shared_ptr<const CongruenceClosure> cc)
      : tag_(tag), structure_(std::move(cc)) {}

  SubsetTag tag() const noexcept { return tag_; }

  SubsetAnswer operator()(const Polynomial& s) const {
    if (const auto* phi = std::get_if<EvalHom>(&structure_)) return subset_member(tag_, (*phi)(s));
    return subset_member(tag_, s.with_domain(Domain::natural), *std::get<1>(structure_));
  }

 private:
  SubsetTag tag_;
  std::variant<EvalHom, std::shared_ptr<const CongruenceClosure>> structure_;
};

}  // namespace semiring_lab
