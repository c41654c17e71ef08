#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/poly/polynomial.hpp"

namespace semiring_lab {

/// Resource caps for Buchberger's algorithm. A pair whose lcm has total
/// degree above max_degree is never reduced; when such a pair (or the step or
/// basis cap) stops the run the basis is reported incomplete.
struct GroebnerBudget {
  std::uint64_t max_degree = 8;
  std::uint64_t max_steps = 20000;
  std::size_t max_basis = 2000;
};

/// Work counters of one Buchberger run.
struct GroebnerStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t pairs_deferred = 0;
  std::uint64_t max_pair_degree = 0;
};

/// Basis of an ideal of Q[x₁,…,xₙ]. When complete() is false the run hit its
/// budget: the generators still generate the ideal, but normal forms are
/// only meaningful when they vanish.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool complete() const noexcept { return complete_; }
  bool reduced() const noexcept { return complete_; }
  const GroebnerStats& stats() const noexcept { return stats_; }

  /// Cofactors of each generator with respect to the input generators;
  /// empty unless the basis was computed with tracking.
  const std::vector<std::vector<Polynomial>>& cofactors() const noexcept { return cofactors_; }

  bool is_unit_ideal() const {
    return generators_.size() == 1 && generators_.front().is_constant() &&
           !generators_.front().is_zero();
  }

  /// Assembles a basis from finished data; used by the Buchberger driver.
  static GroebnerBasis assemble(std::size_t nvars, MonomialOrder order,
                                std::vector<Polynomial> generators,
                                std::vector<std::vector<Polynomial>> cofactors, bool complete,
                                GroebnerStats stats) {
    GroebnerBasis gb(nvars, order);
    gb.generators_ = std::move(generators);
    gb.cofactors_ = std::move(cofactors);
    gb.complete_ = complete;
    gb.stats_ = stats;
    return gb;
  }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<std::vector<Polynomial>> cofactors_;
  bool complete_ = true;
  GroebnerStats stats_;
};

namespace detail {

inline Polynomial to_rational(const Polynomial& p) { return p.with_domain(Domain::rational); }

// Polynomial over Q together with its expression Σ cof[j]·input[j] when
// tracking is enabled.
struct TrackedPoly {
  Polynomial poly;
  std::vector<Polynomial> cof;
};

inline void axpy(std::vector<Polynomial>& target, const std::vector<Polynomial>& source,
                 const Monomial& m, const mpq_class& c) {
  for (std::size_t j = 0; j < source.size(); ++j) target[j] -= source[j].shifted(m, c);
}

struct LeadingData {
  Monomial monomial;
  mpq_class coefficient;
};

inline LeadingData leading(const Polynomial& p, const MonomialOrder& order) {
  auto [m, c] = leading_term(p, order);
  return {m, c.value()};
}

// Complete reduction of `p` by `basis`. On return p holds the remainder; its
// cofactors (if tracked) are updated so the tracked identity still holds.
// Reducers are tried in index order, so the result is deterministic.
inline void reduce_fully(TrackedPoly& p, const std::vector<TrackedPoly>& basis,
                         const std::vector<LeadingData>& leads, const MonomialOrder& order,
                         std::optional<std::size_t> skip = std::nullopt) {
  Polynomial remainder(p.poly.nvars(), Domain::rational);
  Polynomial work = std::move(p.poly);
  while (!work.is_zero()) {
    LeadingData lt = leading(work, order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (skip && *skip == i) continue;
      if (!leads[i].monomial.divides(lt.monomial)) continue;
      const Monomial factor = lt.monomial / leads[i].monomial;
      const mpq_class scale = lt.coefficient / leads[i].coefficient;
      work -= basis[i].poly.shifted(factor, scale);
      if (!p.cof.empty()) axpy(p.cof, basis[i].cof, factor, scale);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lt.monomial, lt.coefficient);
      work.add_term(lt.monomial, -lt.coefficient);
    }
  }
  p.poly = std::move(remainder);
}

inline void make_monic(TrackedPoly& p, const MonomialOrder& order) {
  const mpq_class lc = leading(p.poly, order).coefficient;
  if (lc == 1) return;
  const mpq_class inv = 1 / lc;
  p.poly = p.poly.scaled(inv);
  for (auto& c : p.cof) c = c.scaled(inv);
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t degree;
};

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens` (computed over Q).
///
/// Pairs are selected by the normal strategy: smallest lcm total degree,
/// ties broken by the term order and then by basis indices. Buchberger's
/// coprime and chain criteria prune pairs. The output is sorted by
/// decreasing leading monomial, so it only depends on the ideal and order.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                const GroebnerBudget& budget = {});

/// As buchberger, additionally recording for each basis element its
/// cofactors with respect to `gens`.
inline GroebnerBasis buchberger_tracked(const std::vector<Polynomial>& gens,
                                        const MonomialOrder& order,
                                        const GroebnerBudget& budget = {});

namespace detail {

template <bool Track>
GroebnerBasis run_buchberger(const std::vector<Polynomial>& input, const MonomialOrder& order,
                             const GroebnerBudget& budget) {
  if (input.empty()) throw PreconditionError("buchberger needs at least one generator");
  const std::size_t nvars = input.front().nvars();
  for (const auto& g : input) {
    if (g.nvars() != nvars) throw ArityMismatch("generators live in different rings");
  }

  std::vector<TrackedPoly> basis;
  std::vector<LeadingData> leads;
  std::vector<CriticalPair> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  GroebnerStats stats;
  bool complete = true;

  auto add_element = [&](TrackedPoly p) {
    make_monic(p, order);
    const std::size_t idx = basis.size();
    leads.push_back(leading(p.poly, order));
    basis.push_back(std::move(p));
    for (std::size_t i = 0; i < idx; ++i) {
      Monomial l = lcm(leads[i].monomial, leads[idx].monomial);
      const std::uint64_t d = l.degree();
      queue.push_back({i, idx, std::move(l), d});
    }
  };

  for (std::size_t j = 0; j < input.size(); ++j) {
    if (input[j].is_zero()) continue;
    TrackedPoly p{to_rational(input[j]), {}};
    if constexpr (Track) {
      p.cof.assign(input.size(), Polynomial(nvars, Domain::rational));
      p.cof[j] = Polynomial::constant(nvars, 1, Domain::rational);
    }
    add_element(std::move(p));
  }

  auto is_treated = [&](std::size_t a, std::size_t b) {
    return treated.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  std::vector<CriticalPair> deferred;
  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const auto& a, const auto& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    CriticalPair pair = std::move(*best);
    queue.erase(best);

    if (pair.degree > budget.max_degree) {
      deferred.push_back(std::move(pair));
      ++stats.pairs_deferred;
      continue;
    }
    if (stats.pairs_reduced >= budget.max_steps || basis.size() > budget.max_basis) {
      complete = false;
      break;
    }
    treated.insert({pair.i, pair.j});

    if (leads[pair.i].monomial.coprime(leads[pair.j].monomial)) {
      ++stats.pairs_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = leads[k].monomial.divides(pair.lcm) && is_treated(pair.i, k) &&
              is_treated(pair.j, k);
    }
    if (chain) {
      ++stats.pairs_skipped;
      continue;
    }

    ++stats.pairs_reduced;
    stats.max_pair_degree = std::max(stats.max_pair_degree, pair.degree);
    const Monomial fi = pair.lcm / leads[pair.i].monomial;
    const Monomial fj = pair.lcm / leads[pair.j].monomial;
    TrackedPoly s{basis[pair.i].poly.shifted(fi, 1) - basis[pair.j].poly.shifted(fj, 1), {}};
    if constexpr (Track) {
      s.cof.assign(input.size(), Polynomial(nvars, Domain::rational));
      axpy(s.cof, basis[pair.i].cof, fi, -1);
      axpy(s.cof, basis[pair.j].cof, fj, 1);
    }
    reduce_fully(s, basis, leads, order);
    if (!s.poly.is_zero()) add_element(std::move(s));
  }
  if (!deferred.empty()) complete = false;

  // Interreduce: drop elements whose leading monomial is a multiple of
  // another's, then reduce the rest against each other.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].monomial.divides(leads[i].monomial)) continue;
      redundant = leads[j].monomial != leads[i].monomial || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<TrackedPoly> minimal;
  std::vector<LeadingData> minimal_leads;
  for (std::size_t i : keep) {
    minimal.push_back(std::move(basis[i]));
    minimal_leads.push_back(leads[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    reduce_fully(minimal[i], minimal, minimal_leads, order, i);
    make_monic(minimal[i], order);
    minimal_leads[i] = leading(minimal[i].poly, order);
  }
  std::vector<std::size_t> perm(minimal.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order.less(minimal_leads[b].monomial, minimal_leads[a].monomial);
  });

  std::vector<Polynomial> generators;
  std::vector<std::vector<Polynomial>> cofactors;
  for (std::size_t i : perm) {
    generators.push_back(std::move(minimal[i].poly));
    if constexpr (Track) cofactors.push_back(std::move(minimal[i].cof));
  }
  return GroebnerBasis::assemble(nvars, order, std::move(generators), std::move(cofactors),
                                 complete, stats);
}

}  // namespace detail

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                const GroebnerBudget& budget) {
  return detail::run_buchberger<false>(gens, order, budget);
}

inline GroebnerBasis buchberger_tracked(const std::vector<Polynomial>& gens,
                                        const MonomialOrder& order, const GroebnerBudget& budget) {
  return detail::run_buchberger<true>(gens, order, budget);
}

/// Result of a division of p by a basis: p = Σ quotients[i]·basis[i] + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

inline Division divide(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw ArityMismatch("polynomial and basis live in different rings");
  const auto& gens = gb.generators();
  std::vector<detail::TrackedPoly> basis;
  std::vector<detail::LeadingData> leads;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Polynomial> unit(gens.size(), Polynomial(p.nvars(), Domain::rational));
    unit[i] = Polynomial::constant(p.nvars(), 1, Domain::rational);
    basis.push_back({gens[i], std::move(unit)});
    leads.push_back(detail::leading(gens[i], gb.order()));
  }
  // Track the negated quotients: reduce_fully subtracts from the cofactors.
  detail::TrackedPoly work{detail::to_rational(p),
                           std::vector<Polynomial>(gens.size(), Polynomial(p.nvars(), Domain::rational))};
  if (gens.empty()) work.cof.clear();
  detail::reduce_fully(work, basis, leads, gb.order());
  Division d{{}, std::move(work.poly)};
  for (auto& q : work.cof) d.quotients.push_back(-q);
  if (d.quotients.empty()) d.quotients.assign(gens.size(), Polynomial(p.nvars(), Domain::rational));
  return d;
}

/// Complete reduction of p modulo the basis: no term of the result is
/// divisible by a leading monomial of the basis.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars()) throw ArityMismatch("polynomial and basis live in different rings");
  std::vector<detail::TrackedPoly> basis;
  std::vector<detail::LeadingData> leads;
  for (const auto& g : gb.generators()) {
    basis.push_back({g, {}});
    leads.push_back(detail::leading(g, gb.order()));
  }
  detail::TrackedPoly work{detail::to_rational(p), {}};
  detail::reduce_fully(work, basis, leads, gb.order());
  return std::move(work.poly);
}

enum class Membership { member, non_member, unknown };

constexpr std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::member:
      return "member";
    case Membership::non_member:
      return "non-member";
    case Membership::unknown:
      return "unknown";
  }
  return "unknown";
}

/// Outcome of an ideal or subalgebra membership query. For a member the
/// certificate is checkable on its own: the cofactors combine the
/// generators into the query (ideal membership), or substituting the
/// generators into `representation` reproduces it (subalgebra membership).
struct MembershipCertificate {
  Membership verdict = Membership::unknown;
  std::optional<Polynomial> representation;
  std::vector<Polynomial> cofactors;
  bool integral = false;
  Polynomial normal_form;
};

/// Decides p ∈ (gens) over Q[x]. Members come with cofactors; a nonzero
/// normal form only proves non-membership when the basis is complete.
inline MembershipCertificate ideal_membership(const Polynomial& p,
                                              const std::vector<Polynomial>& gens,
                                              const GroebnerBudget& budget = {}) {
  MembershipCertificate cert;
  const std::size_t nvars = p.nvars();
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw ArityMismatch("generators and query live in different rings");
  }
  cert.normal_form = Polynomial(nvars, Domain::rational);
  if (p.is_zero()) {
    cert.verdict = Membership::member;
    cert.cofactors.assign(gens.size(), Polynomial(nvars, Domain::rational));
    cert.integral = true;
    return cert;
  }
  const bool all_zero =
      std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); });
  if (all_zero) {
    cert.verdict = Membership::non_member;
    cert.normal_form = detail::to_rational(p);
    return cert;
  }
  GroebnerBasis gb = buchberger_tracked(gens, MonomialOrder::graded_lex(), budget);
  Division div = divide(p, gb);
  cert.normal_form = div.remainder;
  if (!div.remainder.is_zero()) {
    cert.verdict = gb.complete() ? Membership::non_member : Membership::unknown;
    return cert;
  }
  cert.cofactors.assign(gens.size(), Polynomial(nvars, Domain::rational));
  for (std::size_t i = 0; i < div.quotients.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      cert.cofactors[j] += div.quotients[i] * gb.cofactors()[i][j];
    }
  }
  Polynomial check(nvars, Domain::rational);
  for (std::size_t j = 0; j < gens.size(); ++j) check += cert.cofactors[j] * detail::to_rational(gens[j]);
  if (check != detail::to_rational(p)) throw AlgebraError("internal error: cofactor identity failed");
  cert.verdict = Membership::member;
  cert.integral = std::all_of(cert.cofactors.begin(), cert.cofactors.end(),
                              [](const Polynomial& c) { return c.has_integral_coefficients(); });
  return cert;
}

}  // namespace semiring_lab
