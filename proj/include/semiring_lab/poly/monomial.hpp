#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "semiring_lab/core/errors.hpp"

namespace semiring_lab {

using Exponent = std::uint32_t;

/// T^u for an exponent vector u ∈ N₀ⁿ. The all-zero vector is the unit.
///
/// The defaulted three-way comparison (plain lexicographic comparison of the
/// exponent vectors) is only a storage order for sorted containers; term
/// orders used by Gröbner computations live in MonomialOrder.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  /// Total degree of the variables in [first, last).
  std::uint64_t degree(std::size_t first, std::size_t last) const {
    return std::accumulate(exps_.begin() + static_cast<std::ptrdiff_t>(first),
                           exps_.begin() + static_cast<std::ptrdiff_t>(last), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    check_arity(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const {
    check_arity(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw PreconditionError("monomial quotient is not exact");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check_arity(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) throw ArityMismatch("monomial variable counts differ");
  }

  std::vector<Exponent> exps_;
};

/// A term order. Elimination orders compare the first block [0, split) by
/// graded lex and fall back to graded lex on the second block, so every
/// monomial involving a first-block variable is larger than every monomial
/// free of them.
class MonomialOrder {
 public:
  enum class Kind { lex, graded_lex, elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder graded_lex() { return MonomialOrder(Kind::graded_lex, 0); }
  static MonomialOrder elimination(std::size_t split) {
    return MonomialOrder(Kind::elimination, split);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t split() const noexcept { return split_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw ArityMismatch("monomial variable counts differ");
    switch (kind_) {
      case Kind::lex:
        return lex_range(a, b, 0, a.nvars());
      case Kind::graded_lex:
        return graded_range(a, b, 0, a.nvars());
      case Kind::elimination: {
        const std::size_t s = std::min(split_, a.nvars());
        if (auto c = graded_range(a, b, 0, s); c != 0) return c;
        return graded_range(a, b, s, a.nvars());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string_view name() const noexcept {
    switch (kind_) {
      case Kind::lex:
        return "lex";
      case Kind::graded_lex:
        return "graded-lex";
      case Kind::elimination:
        return "elimination";
    }
    return "lex";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  // Variable 0 is the most significant one.
  static std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t first,
                                        std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering graded_range(const Monomial& a, const Monomial& b, std::size_t first,
                                           std::size_t last) {
    if (auto c = a.degree(first, last) <=> b.degree(first, last); c != 0) return c;
    return lex_range(a, b, first, last);
  }

  Kind kind_;
  std::size_t split_;
};

}  // namespace semiring_lab
