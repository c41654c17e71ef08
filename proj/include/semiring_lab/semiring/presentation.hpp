#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/poly/io.hpp"

namespace semiring_lab {

/// Caps for bounded searches in a finitely presented semiring: elements are
/// restricted to total degree ≤ max_degree and coefficients ≤
/// max_coefficient, and a search visits at most max_steps elements.
struct SemiringBudget {
  std::uint64_t max_degree = 6;
  std::uint64_t max_coefficient = 64;
  std::uint64_t max_steps = 100000;
};

/// The semiring N[T₁,…,Tₙ]/~ where ~ is the congruence generated by the
/// relations. Both sides of every relation are natural-domain polynomials.
class Presentation {
 public:
  using Relation = std::pair<Polynomial, Polynomial>;

  explicit Presentation(std::size_t nvars) : nvars_(nvars) {}

  Presentation(std::size_t nvars, std::vector<Relation> relations) : nvars_(nvars) {
    for (auto& [l, r] : relations) add(std::move(l), std::move(r));
  }

  void add(Polynomial lhs, Polynomial rhs) {
    if (lhs.nvars() != nvars_ || rhs.nvars() != nvars_) {
      throw ArityMismatch("relation does not live in N[T1..T" + std::to_string(nvars_) + "]");
    }
    relations_.emplace_back(lhs.with_domain(Domain::natural), rhs.with_domain(Domain::natural));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  /// True when every relation is of the form p = p, i.e. the semiring is
  /// N[T] itself.
  bool is_free() const {
    for (const auto& [l, r] : relations_) {
      if (l != r) return false;
    }
    return true;
  }

  Polynomial element(const std::string& text) const {
    return parse_polynomial(text, VarNames::ambient(nvars_), Domain::natural);
  }

  Polynomial constant(std::uint64_t c) const {
    return Polynomial::constant(nvars_, mpq_class(static_cast<unsigned long>(c)), Domain::natural);
  }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(nvars_, i, Domain::natural); }

 private:
  std::size_t nvars_;
  std::vector<Relation> relations_;
};

/// Reads one relation per line, `lhs = rhs`, in the polynomial text format
/// over T1…Tn. Blank lines and lines starting with '#' are skipped. Parse
/// errors report the line number and the column within that line.
inline Presentation read_presentation(std::istream& in, std::size_t nvars) {
  Presentation pres(nvars);
  const VarNames names = VarNames::ambient(nvars);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'lhs = rhs'", first);
    }
    auto side = [&](std::size_t from, std::size_t to) {
      try {
        return parse_polynomial(line.substr(from, to - from), names, Domain::natural);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.message(), from + e.position());
      }
    };
    Polynomial lhs = side(0, eq);
    Polynomial rhs = side(eq + 1, line.size());
    pres.add(std::move(lhs), std::move(rhs));
  }
  return pres;
}

inline Presentation parse_presentation(const std::string& text, std::size_t nvars) {
  std::istringstream in(text);
  return read_presentation(in, nvars);
}

/// Largest Ti index mentioned by a presentation text (at least 1).
inline std::size_t infer_presentation_arity(const std::string& text) {
  return infer_ambient_arity(text);
}

}  // namespace semiring_lab
