#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiring_lab/core/errors.hpp"
#include "semiring_lab/semiring/presentation.hpp"

namespace semiring_lab {

/// A commutative semiring with a computable natural order (a ≤ a + c for
/// every c). Any assignment of the variables in such a semiring extends
/// uniquely to a homomorphism from N[T]; if it satisfies a presentation's
/// relations it factors through the presented semiring and can refute
/// equalities or order relations there.
template <class M>
concept SemiringModel = requires(const M& m, const typename M::value_type& a,
                                 const typename M::value_type& b, std::uint64_t n) {
  { m.zero() } -> std::convertible_to<typename M::value_type>;
  { m.one() } -> std::convertible_to<typename M::value_type>;
  { m.add(a, b) } -> std::convertible_to<typename M::value_type>;
  { m.mul(a, b) } -> std::convertible_to<typename M::value_type>;
  { m.natural(n) } -> std::convertible_to<typename M::value_type>;
  { m.equal(a, b) } -> std::convertible_to<bool>;
  { m.leq(a, b) } -> std::convertible_to<bool>;
  { m.show(a) } -> std::convertible_to<std::string>;
  { m.name() } -> std::convertible_to<std::string>;
};

/// (Q≥0, +, ·).
struct NonnegativeRationals {
  using value_type = mpq_class;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type natural(std::uint64_t n) const { return mpq_class(static_cast<unsigned long>(n)); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool leq(const value_type& a, const value_type& b) const { return a <= b; }
  std::string show(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }
};

/// N with every value ≥ t identified: {0,…,t} with capped + and ·.
/// t = 1 is the Boolean semiring.
struct ThresholdNaturals {
  using value_type = std::uint64_t;
  std::uint64_t cap = 1;
  value_type zero() const { return 0; }
  value_type one() const { return std::min<std::uint64_t>(1, cap); }
  value_type add(value_type a, value_type b) const { return std::min(a + b, cap); }
  value_type mul(value_type a, value_type b) const { return std::min(a * b, cap); }
  value_type natural(std::uint64_t n) const { return std::min(n, cap); }
  bool equal(value_type a, value_type b) const { return a == b; }
  bool leq(value_type a, value_type b) const { return a <= b; }
  std::string show(value_type a) const { return std::to_string(a); }
  std::string name() const { return "threshold-" + std::to_string(cap); }
};

/// Max-plus semiring over Z ∪ {−∞}: + is max, · is +. Every nonzero
/// natural maps to 0, so it only sees supports.
struct MaxPlusIntegers {
  using value_type = std::optional<long>;
  value_type zero() const { return std::nullopt; }
  value_type one() const { return 0L; }
  value_type add(const value_type& a, const value_type& b) const {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
  }
  value_type mul(const value_type& a, const value_type& b) const {
    if (!a || !b) return std::nullopt;
    return *a + *b;
  }
  value_type natural(std::uint64_t n) const { return n == 0 ? zero() : one(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool leq(const value_type& a, const value_type& b) const { return !a || (b && *a <= *b); }
  std::string show(const value_type& a) const { return a ? std::to_string(*a) : "-inf"; }
  std::string name() const { return "max-plus"; }
};

template <SemiringModel M>
typename M::value_type power(const M& model, typename M::value_type base, Exponent e) {
  typename M::value_type result = model.one();
  while (e != 0) {
    if (e & 1U) result = model.mul(result, base);
    e >>= 1U;
    if (e != 0) base = model.mul(base, base);
  }
  return result;
}

/// Image of a natural-domain polynomial under Tᵢ ↦ point[i].
template <SemiringModel M>
typename M::value_type evaluate(const M& model, const Polynomial& p,
                                std::span<const typename M::value_type> point) {
  if (point.size() != p.nvars()) throw ArityMismatch("model assignment has wrong length");
  if (p.domain() != Domain::natural) throw DomainMismatch("models evaluate elements of N[T]");
  typename M::value_type total = model.zero();
  for (const auto& [m, c] : p.terms()) {
    typename M::value_type t = model.natural(c.get_num().get_ui());
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] != 0) t = model.mul(t, power(model, point[i], m[i]));
    }
    total = model.add(total, t);
  }
  return total;
}

/// A concrete model in which a presentation's relations hold, recorded as
/// text so it can be reported and re-checked.
struct ModelWitness {
  std::string model;
  std::vector<std::string> assignment;
  std::vector<std::string> values;  // images of the elements the witness is about
};

namespace detail {

// Sample points per model; enumerated as an odometer over nvars coordinates.
inline std::vector<mpq_class> rational_samples() {
  return {0, 1, 2, 3, mpq_class(1, 2), mpq_class(1, 3), mpq_class(2, 3), mpq_class(3, 2)};
}

inline std::vector<MaxPlusIntegers::value_type> maxplus_samples() {
  return {std::nullopt, -2L, -1L, 0L, 1L, 2L};
}

inline std::vector<std::uint64_t> threshold_samples(std::uint64_t cap) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= cap; ++v) out.push_back(v);
  return out;
}

inline constexpr std::size_t kMaxAssignmentsPerModel = 20000;

template <SemiringModel M, class Accept>
std::optional<ModelWitness> search_model(const M& model,
                                         const std::vector<typename M::value_type>& samples,
                                         const Presentation& pres,
                                         const std::vector<Polynomial>& elements, Accept accept) {
  const std::size_t n = pres.nvars();
  std::vector<std::size_t> idx(n, 0);
  std::vector<typename M::value_type> point(n, samples.front());
  for (std::size_t visited = 0; visited < kMaxAssignmentsPerModel; ++visited) {
    for (std::size_t i = 0; i < n; ++i) point[i] = samples[idx[i]];
    bool holds = true;
    for (const auto& [l, r] : pres.relations()) {
      if (!model.equal(evaluate(model, l, std::span<const typename M::value_type>(point)),
                       evaluate(model, r, std::span<const typename M::value_type>(point)))) {
        holds = false;
        break;
      }
    }
    if (holds) {
      std::vector<typename M::value_type> values;
      for (const auto& e : elements) {
        values.push_back(evaluate(model, e, std::span<const typename M::value_type>(point)));
      }
      if (accept(model, values)) {
        ModelWitness w;
        w.model = model.name();
        for (const auto& v : point) w.assignment.push_back(model.show(v));
        for (const auto& v : values) w.values.push_back(model.show(v));
        return w;
      }
    }
    std::size_t i = 0;
    while (i < n && idx[i] + 1 == samples.size()) idx[i++] = 0;
    if (i == n) break;
    ++idx[i];
  }
  return std::nullopt;
}

}  // namespace detail

/// Which model families a search may use.
enum class ModelFamilies {
  all,
  // Only models sending every positive natural to one value (Boolean and
  // max-plus). Needed when a refutation must cover all constants at once.
  constant_collapsing,
};

/// Searches small models of the presentation (threshold semirings with
/// caps 1–4, max-plus, nonnegative rationals) for one where `accept` holds
/// on the images of `elements`. Deterministic: families and sample points
/// are tried in a fixed order.
template <class Accept>
std::optional<ModelWitness> find_model(const Presentation& pres,
                                       const std::vector<Polynomial>& elements, Accept accept,
                                       ModelFamilies families = ModelFamilies::all) {
  for (const auto& e : elements) {
    if (e.nvars() != pres.nvars()) throw ArityMismatch("element does not live in the presentation");
  }
  const std::uint64_t max_cap = families == ModelFamilies::all ? 4 : 1;
  for (std::uint64_t cap = 1; cap <= max_cap; ++cap) {
    ThresholdNaturals model{cap};
    if (auto w = detail::search_model(model, detail::threshold_samples(cap), pres, elements, accept)) {
      return w;
    }
  }
  if (auto w = detail::search_model(MaxPlusIntegers{}, detail::maxplus_samples(), pres, elements, accept)) {
    return w;
  }
  if (families == ModelFamilies::all) {
    if (auto w = detail::search_model(NonnegativeRationals{}, detail::rational_samples(), pres,
                                      elements, accept)) {
      return w;
    }
  }
  return std::nullopt;
}

/// A model of the relations in which p and q have different images.
inline std::optional<ModelWitness> find_separating_model(const Presentation& pres,
                                                         const Polynomial& p,
                                                         const Polynomial& q) {
  return find_model(pres, {p, q}, [](const auto& model, const auto& v) {
    return !model.equal(v[0], v[1]);
  });
}

/// A model of the relations in which the image of a is not below the image
/// of b; refutes a ≤ b in the presented semiring.
inline std::optional<ModelWitness> find_order_refutation(const Presentation& pres,
                                                         const Polynomial& a,
                                                         const Polynomial& b) {
  return find_model(pres, {a, b}, [](const auto& model, const auto& v) {
    return !model.leq(v[0], v[1]);
  });
}

/// The Q⁺-valued homomorphism Tᵢ ↦ images[i] (all images strictly positive).
class EvalHom {
 public:
  explicit EvalHom(std::vector<mpq_class> images) : images_(std::move(images)) {
    for (const auto& q : images_) {
      if (sgn(q) <= 0) throw DomainViolation("evaluation images must be positive rationals");
    }
  }

  std::size_t nvars() const noexcept { return images_.size(); }
  const std::vector<mpq_class>& images() const noexcept { return images_; }

  /// φ(p) for p ∈ N[T]; zero only for p = 0.
  mpq_class operator()(const Polynomial& p) const { return poly_eval(p, images_).value(); }

 private:
  std::vector<mpq_class> images_;
};

}  // namespace semiring_lab
