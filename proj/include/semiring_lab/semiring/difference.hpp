#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>
#include <utility>

#include "semiring_lab/semiring/structure.hpp"

namespace semiring_lab {

/// An additively cancellative commutative semiring whose elements can be
/// compared for equality; `base()` is any fixed element used to embed
/// s ↦ (s + e, e).
template <class S>
concept CancellativeStructure = requires(const S& s, const typename S::value_type& a,
                                         const typename S::value_type& b) {
  { s.add(a, b) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { s.equal(a, b) } -> std::convertible_to<bool>;
  { s.contains(a) } -> std::convertible_to<bool>;
  { s.base() } -> std::convertible_to<typename S::value_type>;
};

/// (N, +, ·) with 0 ∈ N.
struct NaturalNumbers {
  using value_type = mpz_class;
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool contains(const value_type& a) const { return sgn(a) >= 0; }
  value_type base() const { return 0; }
};

/// (Q⁺, +, ·); no zero, so the embedding uses e = 1.
struct PositiveRationals {
  using value_type = mpq_class;
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool contains(const value_type& a) const { return sgn(a) > 0; }
  value_type base() const { return 1; }
};

/// The free semiring N[T₁…Tₙ].
struct FreeSemiring {
  using value_type = Polynomial;
  std::size_t nvars = 1;
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool contains(const value_type& a) const {
    return a.nvars() == nvars && a.domain() == Domain::natural;
  }
  value_type base() const { return Polynomial(nvars, Domain::natural); }
};

template <class T>
struct DifferencePair {
  T minuend;
  T subtrahend;
};

/// Formal differences a − b over a cancellative semiring, with
/// (a, b) ~ (c, d) iff a + d = b + c.
template <CancellativeStructure S>
class DifferenceRing {
 public:
  using value_type = typename S::value_type;
  using element = DifferencePair<value_type>;

  explicit DifferenceRing(S structure = {}) : s_(std::move(structure)) {}

  const S& structure() const noexcept { return s_; }

  element pair(value_type a, value_type b) const {
    if (!s_.contains(a) || !s_.contains(b)) throw DomainViolation("pair entries must lie in the semiring");
    return {std::move(a), std::move(b)};
  }

  element embed(const value_type& s) const { return pair(s_.add(s, s_.base()), s_.base()); }

  element add(const element& x, const element& y) const {
    return {s_.add(x.minuend, y.minuend), s_.add(x.subtrahend, y.subtrahend)};
  }

  element negate(const element& x) const { return {x.subtrahend, x.minuend}; }

  element subtract(const element& x, const element& y) const { return add(x, negate(y)); }

  element mul(const element& x, const element& y) const {
    return {s_.add(s_.mul(x.minuend, y.minuend), s_.mul(x.subtrahend, y.subtrahend)),
            s_.add(s_.mul(x.minuend, y.subtrahend), s_.mul(x.subtrahend, y.minuend))};
  }

  bool equal(const element& x, const element& y) const {
    return s_.equal(s_.add(x.minuend, y.subtrahend), s_.add(x.subtrahend, y.minuend));
  }

 private:
  S s_;
};

/// Raised when a difference ring is requested over a semiring that is not
/// certified cancellative; carries the failure witness when one was found.
class NotCancellative : public PreconditionError {
 public:
  explicit NotCancellative(Cancellativity verdict)
      : PreconditionError("difference ring refused: " + verdict.reason), verdict_(std::move(verdict)) {}
  const Cancellativity& verdict() const noexcept { return verdict_; }

 private:
  Cancellativity verdict_;
};

/// S − S for a presented semiring. Only presentations certified
/// cancellative are accepted; among those we can certify, that means free
/// ones.
inline DifferenceRing<FreeSemiring> difference_ring(const Presentation& pres) {
  Cancellativity c = is_add_cancellative(pres);
  if (c.verdict != Truth::yes || !pres.is_free()) throw NotCancellative(std::move(c));
  return DifferenceRing<FreeSemiring>(FreeSemiring{pres.nvars()});
}

}  // namespace semiring_lab
