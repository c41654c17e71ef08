#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/poly/monomial.hpp"
#include "semiring_lab/poly/scalar.hpp"

namespace semiring_lab {

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a sorted map keyed by exponent vector and never store a
/// zero coefficient, so two polynomials are equal exactly when their term
/// maps are. Every coefficient belongs to the polynomial's domain; in
/// particular a natural-domain polynomial is an element of N[T₁,…,Tₙ] (the
/// zero polynomial included).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, Domain domain = Domain::integer)
      : nvars_(nvars), domain_(domain) {}

  static Polynomial constant(std::size_t nvars, const mpq_class& c,
                             Domain domain = Domain::integer) {
    Polynomial p(nvars, domain);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index,
                             Domain domain = Domain::integer) {
    if (index >= nvars) throw ArityMismatch("variable index out of range");
    Polynomial p(nvars, domain);
    p.add_term(Monomial::variable(nvars, index), 1);
    return p;
  }

  static Polynomial term(const Monomial& m, const mpq_class& c, Domain domain = Domain::integer) {
    Polynomial p(m.nvars(), domain);
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  Domain domain() const noexcept { return domain_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  /// Constant coefficient (zero when absent).
  mpq_class constant_term() const { return coefficient(Monomial(nvars_)); }

  mpq_class coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  /// Total degree; the zero polynomial has degree 0 here.
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  std::uint64_t degree_in(std::size_t var) const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::uint64_t>(d, m[var]);
    return d;
  }

  /// True when every term only involves variables with index in [first, last).
  bool involves_only(std::size_t first, std::size_t last) const {
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] != 0 && (i < first || i >= last)) return false;
      }
    }
    return true;
  }

  bool has_integral_coefficients() const {
    for (const auto& [m, c] : terms_) {
      if (!is_integral(c)) return false;
    }
    return true;
  }

  /// Same polynomial tagged with another domain; every coefficient must fit.
  Polynomial with_domain(Domain d) const {
    for (const auto& [m, c] : terms_) {
      if (!fits(c, d)) {
        throw DomainViolation("coefficient " + c.get_str() + " is not in domain " +
                              std::string(to_string(d)));
      }
    }
    Polynomial r = *this;
    r.domain_ = d;
    return r;
  }

  /// Adds c·m in place. Used by builders; keeps the no-zero invariant.
  void add_term(const Monomial& m, const mpq_class& c) {
    if (m.nvars() != nvars_) throw ArityMismatch("monomial does not match the ring");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) {
        terms_.erase(it);
        return;
      }
    }
    if (!fits(it->second, domain_)) {
      const std::string bad = it->second.get_str();
      throw DomainViolation("coefficient " + bad + " is not in domain " +
                            std::string(to_string(domain_)));
    }
  }

  Polynomial scaled(const mpq_class& c) const {
    Polynomial r(nvars_, domain_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
  }

  /// c·m·p
  Polynomial shifted(const Monomial& m, const mpq_class& c) const {
    Polynomial r(nvars_, domain_);
    if (sgn(c) == 0) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono * m, coeff * c);
    if (domain_ != Domain::rational) r.check_domain();
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) {
    check_compatible(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q) {
    check_compatible(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }

  friend Polynomial operator-(const Polynomial& p) {
    Polynomial r(p.nvars_, p.domain_);
    for (const auto& [m, c] : p.terms_) r.add_term(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_compatible(q);
    Polynomial r(p.nvars_, p.domain_);
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    }
    return r;
  }

  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1, domain_);
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& q) const {
    if (q.nvars_ != nvars_) {
      throw ArityMismatch("polynomials have " + std::to_string(nvars_) + " and " +
                          std::to_string(q.nvars_) + " variables");
    }
    if (q.domain_ != domain_) {
      throw DomainMismatch("polynomials have domains " + std::string(to_string(domain_)) +
                           " and " + std::string(to_string(q.domain_)));
    }
  }

  void check_domain() const {
    for (const auto& [m, c] : terms_) {
      if (!fits(c, domain_)) throw DomainViolation("coefficient " + c.get_str() + " out of domain");
    }
  }

  std::size_t nvars_ = 0;
  Domain domain_ = Domain::integer;
  TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Exact value of p at a rational point.
inline Scalar poly_eval(const Polynomial& p, std::span<const mpq_class> point) {
  if (point.size() != p.nvars()) {
    throw ArityMismatch("evaluation point has " + std::to_string(point.size()) +
                        " coordinates, ring has " + std::to_string(p.nvars()) + " variables");
  }
  std::vector<std::vector<mpq_class>> powers(point.size());
  auto power = [&](std::size_t var, Exponent e) -> const mpq_class& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * point[var]);
    return cache[e];
  };
  mpq_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class t = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] != 0) t *= power(i, m[i]);
    }
    total += t;
  }
  return Scalar(total, Domain::rational);
}

/// p with variable i replaced by images[i], expanded. The images must share
/// one ambient ring; the result lives there, in the join of the domains.
inline Polynomial poly_subst(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.nvars()) {
    throw ArityMismatch("substitution needs " + std::to_string(p.nvars()) + " images, got " +
                        std::to_string(images.size()));
  }
  std::size_t target_vars = 0;
  Domain target_domain = p.domain();
  if (!images.empty()) {
    target_vars = images.front().nvars();
    for (const auto& img : images) {
      if (img.nvars() != target_vars) throw ArityMismatch("substitution images live in different rings");
      if (img.domain() != images.front().domain()) {
        throw DomainMismatch("substitution images have different domains");
      }
    }
    target_domain = join(target_domain, images.front().domain());
  }
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, 1, target_domain));
    while (cache.size() <= e) {
      cache.push_back(cache.back() * images[var].with_domain(target_domain));
    }
    return cache[e];
  };
  Polynomial result(target_vars, target_domain);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target_vars, c, target_domain);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] != 0) t *= power(i, m[i]);
    }
    result += t;
  }
  return result;
}

/// Largest term of a nonzero polynomial under `order`.
inline std::pair<Monomial, Scalar> leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return {best->first, Scalar(best->second, p.domain())};
}

/// Re-embeds p into a ring with `nvars` variables, sending variable i to
/// variable offset + i.
inline Polynomial embed(const Polynomial& p, std::size_t nvars, std::size_t offset) {
  if (offset + p.nvars() > nvars) throw ArityMismatch("embedding does not fit");
  Polynomial r(nvars, p.domain());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> e(nvars, 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) e[offset + i] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

/// Inverse of embed: keeps variables [offset, offset + nvars). Requires p not
/// to involve any other variable.
inline Polynomial project(const Polynomial& p, std::size_t nvars, std::size_t offset) {
  if (!p.involves_only(offset, offset + nvars)) {
    throw PreconditionError("polynomial involves variables outside the projected block");
  }
  Polynomial r(nvars, p.domain());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> e(nvars, 0);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = m[offset + i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace semiring_lab
