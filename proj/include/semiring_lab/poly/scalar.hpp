#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <string_view>

#include "semiring_lab/core/errors.hpp"

namespace semiring_lab {

/// Coefficient domain. Ordered by inclusion: N ⊂ Z ⊂ Q.
enum class Domain { natural = 0, integer = 1, rational = 2 };

constexpr std::string_view to_string(Domain d) noexcept {
  switch (d) {
    case Domain::natural:
      return "natural";
    case Domain::integer:
      return "integer";
    case Domain::rational:
      return "rational";
  }
  return "rational";
}

/// Smallest domain containing both.
constexpr Domain join(Domain a, Domain b) noexcept {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

constexpr bool includes(Domain outer, Domain inner) noexcept {
  return static_cast<int>(outer) >= static_cast<int>(inner);
}

inline bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

inline bool fits(const mpq_class& q, Domain d) {
  switch (d) {
    case Domain::natural:
      return is_integral(q) && sgn(q) >= 0;
    case Domain::integer:
      return is_integral(q);
    case Domain::rational:
      return true;
  }
  return false;
}

/// Smallest domain a value belongs to.
inline Domain domain_of(const mpq_class& q) {
  if (!is_integral(q)) return Domain::rational;
  return sgn(q) >= 0 ? Domain::natural : Domain::integer;
}

/// `p/q` or `p`; the format the polynomial parser reads back.
inline std::string to_string(const mpq_class& q) { return q.get_str(); }

/// Exact number tagged with the domain it is meant to live in. Rationals are
/// kept canonical (lowest terms, positive denominator) by GMP.
class Scalar {
 public:
  Scalar() = default;

  Scalar(mpq_class value, Domain domain) : value_(std::move(value)), domain_(domain) {
    value_.canonicalize();
    if (!fits(value_, domain_)) {
      throw DomainViolation("value " + value_.get_str() + " is not in domain " +
                            std::string(to_string(domain_)));
    }
  }

  static Scalar natural(unsigned long v) { return Scalar(mpq_class(v), Domain::natural); }
  static Scalar integer(long v) { return Scalar(mpq_class(v), Domain::integer); }
  static Scalar rational(long num, long den) {
    return Scalar(mpq_class(num, den), Domain::rational);
  }

  const mpq_class& value() const noexcept { return value_; }
  Domain domain() const noexcept { return domain_; }
  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.domain_ == b.domain_ && a.value_ == b.value_;
  }

 private:
  mpq_class value_{0};
  Domain domain_ = Domain::natural;
};

inline std::string to_string(const Scalar& s) { return to_string(s.value()); }

}  // namespace semiring_lab
