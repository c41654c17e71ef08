// Walks through the Abhyankar ring B = Z[f2, f3, ...] inside Z[T1, T2]:
// generators, phi, the unit identity, the quotient-field fractions, why phi
// does not extend to A, and the condition report.

#include <cstdlib>
#include <iostream>

#include "semiring_lab/abhyankar/abhyankar.hpp"
#include "semiring_lab/lab/conditions.hpp"

using namespace semiring_lab;

int main(int argc, char** argv) {
  const std::size_t k = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  const VarNames t = VarNames::ambient(2);

  std::cout << "generators\n";
  for (std::size_t n = 2; n <= k; ++n) std::cout << "  f" << n << " = " << format(abhyankar_generator(n), t) << "\n";

  const AbhyankarContext ctx(k);
  const WellDefinedness& wd = ctx.well_definedness();
  std::cout << "phi well defined: " << to_string(wd.verdict) << " (germ " << (wd.germ.holds() ? "checked" : "failed")
            << ", " << wd.relations.relations.size() << " relations, complete: " << wd.relations.complete << ")\n";
  const SubringElement e = ctx.element("X2*X3 + 7");
  std::cout << "phi(f2*f3 + 7) = " << ctx.phi_eval(e) << "\n";

  const IAWitness ia = ia_witness(ctx, 2);
  std::cout << "1 = " << format(ia.multiplier, t) << " * (" << format(ia.first.ambient, t) << ") - ("
            << format(ia.second.ambient, t) << ")  expands to " << format(ia.expansion, t) << "\n";

  const auto [t2, t1] = qf_witnesses(ctx);
  std::cout << "T2 = (" << format(t2.numerator.ambient, t) << ") / (" << format(t2.denominator.ambient, t)
            << ")  residual " << format(t2.residual, t) << "\n";
  std::cout << "T1 = (" << format(t1.numerator.ambient, t) << ") / (" << format(t1.denominator.ambient, t)
            << ")  residual " << format(t1.residual, t) << "\n";

  const NonExtendability ne = non_extendability(4);
  for (const auto& s : ne.steps) {
    std::cout << "phi(f" << s.n + 1 << ") would be (" << s.n << "*" << s.phi_fn << " - 1)*t2 = "
              << format(s.image, VarNames({"t2"})) << ", not " << s.required << "\n";
  }

  const Polynomial l0 = parse_polynomial("T1*T2", t, Domain::natural);
  const ConditionReport r = verify_conditions(ctx, {l0});
  std::cout << "conditions\n";
  for (const auto& [name, c] : {std::pair{"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}}) {
    std::cout << "  " << name << "  " << to_string(c.verdict) << "  " << c.summary << "\n";
  }
  return 0;
}
