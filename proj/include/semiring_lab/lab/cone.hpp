#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiring_lab/lab/subsets.hpp"

namespace semiring_lab {

using ExponentVector = std::vector<std::uint32_t>;

/// Graded-lex order on exponent vectors: total degree first, then the
/// first coordinate dominates.
inline bool graded_less(const ExponentVector& a, const ExponentVector& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string to_string(const ExponentVector& u) {
  std::string out = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(u[i]);
  }
  return out + ")";
}

inline Monomial to_monomial(const ExponentVector& u) {
  return Monomial(std::vector<Exponent>(u.begin(), u.end()));
}

/// Every vector of [0, box]ⁿ in graded-lex order.
inline std::vector<ExponentVector> box_points(std::size_t n, std::uint32_t box) {
  std::vector<ExponentVector> out;
  ExponentVector u(n, 0);
  while (true) {
    out.push_back(u);
    std::size_t i = 0;
    while (i < n && u[i] == box) u[i++] = 0;
    if (i == n) break;
    ++u[i];
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

/// Exponent vectors u in [0, box]ⁿ with φ(Tᵘ) ∈ Q, stored explicitly.
struct Cone {
  std::size_t n = 0;
  std::uint32_t box = 0;
  std::vector<ExponentVector> members;  // graded-lex order
  std::size_t unknown = 0;              // points whose membership was undecided
  std::string provenance;

  bool contains(const ExponentVector& u) const {
    return std::binary_search(members.begin(), members.end(), u, graded_less);
  }
};

/// Builds a cone from an explicit member list (sorted and deduplicated).
inline Cone make_cone(std::size_t n, std::uint32_t box, std::vector<ExponentVector> members,
                      std::string provenance = "explicit") {
  for (const auto& u : members) {
    if (u.size() != n) throw ArityMismatch("exponent vector " + to_string(u) + " has wrong length");
  }
  std::sort(members.begin(), members.end(), graded_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {n, box, std::move(members), 0, std::move(provenance)};
}

inline Cone cone_enumerate(std::size_t n, std::uint32_t box,
                           const std::function<Truth(const ExponentVector&)>& in_q,
                           std::string provenance) {
  Cone c;
  c.n = n;
  c.box = box;
  c.provenance = std::move(provenance);
  for (const auto& u : box_points(n, box)) {
    const Truth t = in_q(u);
    if (t == Truth::yes) c.members.push_back(u);
    if (t == Truth::unknown) ++c.unknown;
  }
  return c;
}

inline Cone cone_enumerate(const EvalHom& phi, std::uint32_t box) {
  const BoundedSubsetPredicate q(SubsetTag::Q, phi);
  const std::size_t n = phi.nvars();
  std::string prov = "Q+ evaluation T -> (";
  for (std::size_t i = 0; i < n; ++i) prov += (i ? ", " : "") + phi.images()[i].get_str();
  prov += ")";
  return cone_enumerate(
      n, box, [&](const ExponentVector& u) { return q(Polynomial::term(to_monomial(u), 1, Domain::natural)).verdict; },
      prov);
}

/// Points whose monomial lies outside the closure budget count as unknown.
inline Cone cone_enumerate(std::shared_ptr<const CongruenceClosure> cc, std::uint32_t box) {
  const std::size_t n = cc->presentation().nvars();
  const BoundedSubsetPredicate q(SubsetTag::Q, cc);
  return cone_enumerate(
      n, box,
      [&](const ExponentVector& u) {
        const Polynomial m = Polynomial::term(to_monomial(u), 1, Domain::natural);
        if (!cc->within_budget(m)) return Truth::unknown;
        return q(m).verdict;
      },
      "presentation, bounded search");
}

/// Rank over Q of the member vectors.
inline std::size_t cone_dim(const Cone& c) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& u : c.members) rows.emplace_back(u.begin(), u.end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c.n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      const mpq_class f = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < c.n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// A member a and k with a/k integral but a/k missing.
struct ImpurityWitness {
  ExponentVector a;
  std::uint32_t k = 0;
  ExponentVector quotient;
};

struct Purity {
  bool pure = true;
  std::optional<ImpurityWitness> witness;
  std::size_t members = 0;
};

/// Checks a/k ∈ C for every nonzero member a and k ≥ 2 dividing a.
inline Purity purity_of(const Cone& c) {
  Purity out;
  out.members = c.members.size();
  for (const auto& a : c.members) {
    std::uint32_t g = 0;
    for (auto x : a) g = std::gcd(g, x);
    for (std::uint32_t k = 2; k <= g; ++k) {
      if (g % k != 0) continue;
      ExponentVector q(a);
      for (auto& x : q) x /= k;
      if (!c.contains(q)) {
        out.pure = false;
        out.witness = ImpurityWitness{a, k, q};
        return out;
      }
    }
  }
  return out;
}

/// The additive semigroup generated by `generators`, cut to [0, box]ⁿ.
inline Cone semigroup_in_box(std::size_t n, const std::vector<ExponentVector>& generators, std::uint32_t box) {
  std::set<ExponentVector> seen{ExponentVector(n, 0)};
  std::vector<ExponentVector> frontier{ExponentVector(n, 0)};
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& u : frontier) {
      for (const auto& g : generators) {
        if (g.size() != n) throw ArityMismatch("generator " + to_string(g) + " has wrong length");
        ExponentVector v(u);
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
          v[i] += g[i];
          if (v[i] > box) inside = false;
        }
        if (inside && seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return make_cone(n, box, {seen.begin(), seen.end()}, "semigroup");
}

inline Purity purity_check(std::size_t n, const std::vector<ExponentVector>& generators, std::uint32_t box) {
  return purity_of(semigroup_in_box(n, generators, box));
}

/// Smallest u (graded-lex) with u and every u + eᵢ in the cone.
inline std::optional<ExponentVector> find_interior_u(const Cone& c) {
  for (const auto& u : c.members) {
    bool ok = true;
    for (std::size_t i = 0; i < c.n && ok; ++i) {
      ExponentVector v(u);
      ++v[i];
      ok = c.contains(v);
    }
    if (ok) return u;
  }
  return std::nullopt;
}

/// Tᵢ = T^{u+eᵢ}/Tᵘ, with numerator and denominator confirmed by the
/// membership oracle and the identity checked by cross-multiplication.
struct MonomialFraction {
  std::size_t variable = 0;
  Polynomial numerator;
  Polynomial denominator;
  Truth numerator_member = Truth::unknown;
  Truth denominator_member = Truth::unknown;
  bool cross_checked = false;
  bool holds() const {
    return cross_checked && numerator_member == Truth::yes && denominator_member == Truth::yes;
  }
};

using MembershipOracle = std::function<Truth(const Polynomial&)>;

/// Tᵛ for v ∈ C is (1 + Tᵛ) − 1 in the subring generated by 1 and the
/// 1 + Tᵛ, so cone membership of the exponent already decides it.
inline MembershipOracle cone_oracle(const Cone& c) {
  return [c](const Polynomial& p) {
    if (p.size() != 1 || p.terms().begin()->second != 1) return Truth::unknown;
    const auto& e = p.terms().begin()->first.exponents();
    return from_bool(c.contains(ExponentVector(e.begin(), e.end())));
  };
}

inline std::optional<std::vector<MonomialFraction>> qf_from_cone(const Cone& c, const MembershipOracle& oracle) {
  const auto u = find_interior_u(c);
  if (!u) return std::nullopt;
  std::vector<MonomialFraction> out;
  for (std::size_t i = 0; i < c.n; ++i) {
    ExponentVector v(*u);
    ++v[i];
    MonomialFraction f;
    f.variable = i;
    f.numerator = Polynomial::term(to_monomial(v), 1, Domain::integer);
    f.denominator = Polynomial::term(to_monomial(*u), 1, Domain::integer);
    f.numerator_member = oracle(f.numerator);
    f.denominator_member = oracle(f.denominator);
    const Polynomial ti = Polynomial::variable(c.n, i, Domain::integer);
    f.cross_checked = (ti * f.denominator - f.numerator).is_zero();
    out.push_back(std::move(f));
  }
  return out;
}

/// φ(1 + Tᵘ) ∈ P.
inline SubsetAnswer one_plus_Tu_in_P(const ExponentVector& u, const EvalHom& phi) {
  if (u.size() != phi.nvars()) throw ArityMismatch("exponent vector has wrong length");
  const BoundedSubsetPredicate p(SubsetTag::P, phi);
  return p(Polynomial::term(to_monomial(u), 1, Domain::natural) + Polynomial::constant(u.size(), 1, Domain::natural));
}

inline SubsetAnswer one_plus_Tu_in_P(const ExponentVector& u, std::shared_ptr<const CongruenceClosure> cc) {
  const std::size_t n = cc->presentation().nvars();
  if (u.size() != n) throw ArityMismatch("exponent vector has wrong length");
  const Polynomial s = Polynomial::term(to_monomial(u), 1, Domain::natural) + Polynomial::constant(n, 1, Domain::natural);
  if (!cc->within_budget(s)) throw OutOfBudget("1 + T^u exceeds the budget");
  const BoundedSubsetPredicate p(SubsetTag::P, std::move(cc));
  return p(s);
}

}  // namespace semiring_lab
