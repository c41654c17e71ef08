// Cones of Q-bounded monomials, purity and interior points.

#include <iostream>

#include "semiring_lab/lab/cone.hpp"

using namespace semiring_lab;

int main() {
  const Cone c = cone_enumerate(EvalHom({mpq_class(1, 2), 3}), 3);
  std::cout << "phi: T1 -> 1/2, T2 -> 3, box 3: " << c.members.size() << " members, dim " << cone_dim(c) << "\n";
  if (const auto u = find_interior_u(c)) {
    std::cout << "interior point " << to_string(*u) << "\n";
    const auto fractions = qf_from_cone(c, cone_oracle(c));
    for (const auto& f : *fractions) {
      std::cout << "  T" << f.variable + 1 << " = " << format(f.numerator) << " / " << format(f.denominator)
                << (f.holds() ? "  checked" : "  FAILED") << "\n";
    }
  }
  std::cout << "phi(1 + T1^2*T2) in P: " << to_string(one_plus_Tu_in_P({2, 1}, EvalHom({mpq_class(1, 2), 3})).verdict)
            << "\n";

  for (const auto& gens : {std::vector<ExponentVector>{{1, 0}, {0, 1}}, std::vector<ExponentVector>{{2, 0}, {0, 1}},
                           std::vector<ExponentVector>{{2, 0}, {3, 0}, {1, 1}}}) {
    const Purity p = purity_check(2, gens, 6);
    std::cout << "semigroup";
    for (const auto& g : gens) std::cout << " " << to_string(g);
    std::cout << ": " << (p.pure ? "pure" : "impure");
    if (p.witness) {
      std::cout << ", " << to_string(p.witness->a) << "/" << p.witness->k << " = " << to_string(p.witness->quotient)
                << " missing";
    }
    std::cout << "\n";
  }
  return 0;
}
