#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/poly/polynomial.hpp"

namespace semiring_lab {

/// Names of the variables of a polynomial ring, in index order.
class VarNames {
 public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}

  /// T1, …, Tn: the ambient ring A = Z[T₁,…,Tₙ].
  static VarNames ambient(std::size_t n) { return indexed("T", 1, n); }

  /// X2, …, Xk: tag variables of the truncated subring generated by f₂,…,f_k.
  static VarNames tags(std::size_t k) { return indexed("X", 2, k < 2 ? 0 : k - 1); }

  static VarNames indexed(const std::string& stem, std::size_t first, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(first + i));
    return VarNames(std::move(names));
  }

  /// Concatenation; used for the combined ring of an elimination problem.
  static VarNames concat(const VarNames& a, const VarNames& b) {
    std::vector<std::string> names = a.names_;
    names.insert(names.end(), b.names_.begin(), b.names_.end());
    return VarNames(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

 private:
  std::vector<std::string> names_;
};

namespace detail {

// Display order: higher total degree first, then lex with variable 0 most
// significant.
inline bool display_before(const Monomial& a, const Monomial& b) {
  return MonomialOrder::graded_lex().less(b, a);
}

inline std::string format_monomial(const Monomial& m, const VarNames& names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace detail

/// Text form, e.g. `2*T1*T2^2 - T2` or `1/2*X2 + 3`. parse_polynomial reads
/// it back to the identical term map.
inline std::string format(const Polynomial& p, const VarNames& names) {
  if (names.size() != p.nvars()) throw ArityMismatch("variable names do not match the ring");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, mpq_class>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return detail::display_before(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class magnitude = abs(c);
    const std::string mono = detail::format_monomial(m, names);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + '*' + mono;
    }
  }
  return out;
}

inline std::string format(const Polynomial& p) { return format(p, VarNames::ambient(p.nvars())); }

namespace detail {

// Recursive-descent reader:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := power ('*' power)*
//   power  := atom ('^' natural)?
//   atom   := integer ['/' integer] | name | '(' expr ')'
class PolyReader {
 public:
  PolyReader(std::string_view text, const VarNames& names)
      : text_(text), names_(names) {}

  Polynomial read() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(names_.size(), Domain::rational);
    bool negate = accept('-');
    if (!negate) accept('+');
    while (true) {
      Polynomial t = term();
      if (negate) acc -= t;
      else acc += t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected an exponent");
      if (digits.size() > 6) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(read_digits());
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected a denominator");
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator", at);
        value /= mpq_class(d);
      }
      return Polynomial::constant(names_.size(), value, Domain::rational);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      auto idx = names_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", at);
      return Polynomial::variable(names_.size(), *idx, Domain::rational);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    return digits;
  }

  std::string_view text_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads a polynomial over the given variables and tags it with `domain`.
/// Throws ParseError (with the offending position) on malformed text and
/// DomainViolation when a coefficient does not fit the domain.
inline Polynomial parse_polynomial(std::string_view text, const VarNames& names,
                                   Domain domain = Domain::integer) {
  return detail::PolyReader(text, names).read().with_domain(domain);
}

/// Number of ambient variables a text mentions: the largest i among the
/// names Ti (at least 1). Used by the CLI to size the ring.
inline std::size_t infer_ambient_arity(std::string_view text) {
  std::size_t n = 1;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != 'T' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')) continue;
    std::size_t j = i + 1;
    std::size_t v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      if (v > 64) break;
      ++j;
    }
    n = std::max(n, v);
  }
  return n;
}

}  // namespace semiring_lab
