#pragma once

// Brute-force ideal membership: p ∈ (g₁,…,g_s) with cofactors of total degree
// ≤ D is a linear system in the cofactor coefficients. Solved exactly by
// Gaussian elimination over Q; shares no code with the Gröbner engine.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "semiring_lab/poly/polynomial.hpp"

namespace semiring_lab::testing {

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(nvars, 0);
  // Odometer over [0, degree]^nvars, filtered by total degree.
  while (true) {
    unsigned total = 0;
    for (auto x : e) total += x;
    if (total <= degree) out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars && e[i] == degree) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  return out;
}

/// True iff p = Σ cⱼ gⱼ has a solution with deg cⱼ ≤ cofactor_degree.
inline bool linear_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                              unsigned cofactor_degree) {
  const std::size_t n = p.nvars();
  const auto basis = monomials_up_to(n, cofactor_degree);
  std::map<Monomial, std::size_t> row_of;
  auto row = [&](const Monomial& m) {
    auto [it, inserted] = row_of.try_emplace(m, row_of.size());
    return it->second;
  };
  // Columns: (generator j, cofactor monomial b); last column is p.
  const std::size_t cols = gens.size() * basis.size();
  std::vector<std::map<std::size_t, mpq_class>> sparse_cols(cols + 1);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (const auto& [m, c] : gens[j].terms()) sparse_cols[j * basis.size() + b][row(m * basis[b])] += c;
    }
  }
  for (const auto& [m, c] : p.terms()) sparse_cols[cols][row(m)] += c;
  const std::size_t rows = row_of.size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1, 0));
  for (std::size_t c = 0; c <= cols; ++c) {
    for (const auto& [r, v] : sparse_cols[c]) a[r][c] = v;
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && sgn(a[r][c]) == 0) ++r;
    if (r == rows) continue;
    std::swap(a[r], a[pivot_row]);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == pivot_row || sgn(a[k][c]) == 0) continue;
      const mpq_class f = a[k][c] / a[pivot_row][c];
      for (std::size_t cc = c; cc <= cols; ++cc) a[k][cc] -= f * a[pivot_row][cc];
    }
    ++pivot_row;
  }
  // Inconsistent iff some zero row has a nonzero right-hand side.
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (sgn(a[r][cols]) != 0) return false;
  }
  return true;
}

}  // namespace semiring_lab::testing
