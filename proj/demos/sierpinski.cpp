// Builds the Sierpinski space over the two-element frame, checks its axioms
// and prints it as a space file.

#include <iostream>

#include "vtop/vtop.hpp"

int main() {
  using namespace vtop;
  auto two = quantales::two();
  const Elem bot = 0, top = 1;
  // Subsets of {s, t} by mask: {}, {s}, {t}, {s,t}. The point t is closed.
  ClosureStructure c(two, 2,
                     std::vector<Elem>{bot, bot,   // {}
                                       top, top,   // {s}
                                       bot, top,   // {t}
                                       top, top},  // {s,t}
                     {"s", "t"});
  for (const auto& item : check_axioms(c).items) std::cout << item.id << ": " << (item.pass ? "pass" : "fail") << "\n";
  std::cout << io::space_to_json(c).dump(2) << "\n";
}
