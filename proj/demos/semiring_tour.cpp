// Word problems in a few presented semirings N[T]/~.

#include <iostream>
#include <string>

#include "semiring_lab/lab/subsets.hpp"
#include "semiring_lab/semiring/congruence.hpp"
#include "semiring_lab/semiring/difference.hpp"
#include "semiring_lab/semiring/structure.hpp"

using namespace semiring_lab;

namespace {

void show(const std::string& title, const std::string& relations) {
  const Presentation pres = parse_presentation(relations, 1);
  const CongruenceClosure cc = congruence_close(pres, {3, 8, 100000});
  std::cout << title << "  [" << (relations.empty() ? "free" : relations) << "]\n";
  const Equivalence idem = is_add_idempotent(cc);
  std::cout << "  1 + 1 = 1:       " << to_string(idem.verdict);
  if (idem.separation) std::cout << "  (separated in " << idem.separation->model << ")";
  std::cout << "\n";
  const Cancellativity canc = is_add_cancellative(pres);
  std::cout << "  cancellative:    " << to_string(canc.verdict);
  if (canc.witness) {
    std::cout << "  (a, b, c) = (" << format(canc.witness->a) << ", " << format(canc.witness->b) << ", "
              << format(canc.witness->c) << ")";
  }
  std::cout << "\n";
  const LSample l = find_L(cc, 8);
  std::cout << "  l + 1 = l for:  ";
  for (const auto& e : l.elements) std::cout << " " << format(e);
  if (l.elements.empty()) std::cout << " none found";
  std::cout << "\n";
  const SubsetAnswer q = subset_member(SubsetTag::Q, pres.variable(0), cc);
  std::cout << "  T1 in Q:         " << to_string(q.verdict) << "  " << q.evidence << "\n";
}

}  // namespace

int main() {
  show("free semiring", "");
  show("idempotent", "1 + 1 = 1");
  show("absorbing", "T1 + 1 = T1");
  show("halving", "T1 + T1 = 1");

  const DifferenceRing<NaturalNumbers> z;
  const auto three = z.embed(3), five = z.embed(5);
  const auto d = z.subtract(three, five);
  std::cout << "3 - 5 in the difference ring of N: (" << d.minuend << ", " << d.subtrahend << ")\n";
  return 0;
}
