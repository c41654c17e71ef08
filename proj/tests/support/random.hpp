#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "semiring_lab/poly/polynomial.hpp"

namespace semiring_lab::testing {

inline constexpr std::uint64_t kSeed = 0x5e3a1f0dULL;

class Random {
 public:
  explicit Random(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    std::vector<Exponent> e(nvars, 0);
    const auto d = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned i = 0; i < d; ++i) ++e[index(nvars)];
    return Monomial(std::move(e));
  }

  mpq_class coefficient(Domain domain, long bound) {
    switch (domain) {
      case Domain::natural:
        return integer(0, bound);
      case Domain::integer:
        return integer(-bound, bound);
      case Domain::rational:
        return mpq_class(integer(-bound, bound), integer(1, bound));
    }
    return 0;
  }

  Polynomial polynomial(std::size_t nvars, unsigned max_degree, std::size_t max_terms,
                        Domain domain = Domain::integer, long bound = 9) {
    Polynomial p(nvars, domain);
    const auto terms = index(max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t) {
      mpq_class c = coefficient(domain, bound);
      c.canonicalize();
      p.add_term(monomial(nvars, max_degree), c);
    }
    return p;
  }

  mpq_class rational(long bound) {
    mpq_class q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  mpq_class positive_rational(long bound) {
    mpq_class q(integer(1, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace semiring_lab::testing
