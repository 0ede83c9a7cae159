// A closure space on three points over the Lawvere chain that is not finitely
// additive, and its topological core.

#include <iostream>

#include "vtop/vtop.hpp"

int main() {
  using namespace vtop;
  auto q = quantales::lawvere_chain(2);
  const Elem zero = quantales::lawvere_index(2, 0), one = quantales::lawvere_index(2, 1);
  // Distance 1 from a pair to the third point, 0 inside: not additive since
  // each single point is at distance infinity from the others.
  ClosureStructure c(q, 3, {"a", "b", "c"});
  for (Subset a = 0; a < c.subsets(); ++a)
    for (std::size_t x = 0; x < 3; ++x) {
      if (contains(a, x)) c.set(a, x, zero);
      else if (cardinality(a) >= 2) c.set(a, x, one);
    }
  std::cout << "closure space: " << (is_closure_space(c) ? "yes" : "no")
            << ", additive: " << (satisfies_A(c) ? "yes" : "no") << "\n";
  const auto plus = core(c);
  for (Subset a = 0; a < plus.subsets(); ++a) {
    std::cout << plus.format(a) << " ->";
    for (std::size_t x = 0; x < 3; ++x) std::cout << " " << q->name(plus(a, x));
    std::cout << "\n";
  }
}
