#pragma once

#include <string_view>

namespace semiring_lab {

/// Answer of a semi-decision procedure. `unknown` means the configured
/// budget ran out before either a derivation or a refutation was found.
enum class Truth { yes, no, unknown };

constexpr std::string_view to_string(Truth t) noexcept {
  switch (t) {
    case Truth::yes:
      return "yes";
    case Truth::no:
      return "no";
    case Truth::unknown:
      return "unknown";
  }
  return "unknown";
}

constexpr Truth from_bool(bool b) noexcept { return b ? Truth::yes : Truth::no; }

/// Kleene conjunction.
constexpr Truth operator&&(Truth a, Truth b) noexcept {
  if (a == Truth::no || b == Truth::no) return Truth::no;
  if (a == Truth::yes && b == Truth::yes) return Truth::yes;
  return Truth::unknown;
}

/// Kleene disjunction.
constexpr Truth operator||(Truth a, Truth b) noexcept {
  if (a == Truth::yes || b == Truth::yes) return Truth::yes;
  if (a == Truth::no && b == Truth::no) return Truth::no;
  return Truth::unknown;
}

}  // namespace semiring_lab
