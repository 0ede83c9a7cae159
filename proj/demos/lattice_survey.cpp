// Prints which catalog lattices are sup-generated by coprimes, coframes and
// constructively completely distributive.

#include <iomanip>
#include <iostream>

#include "vtop/vtop.hpp"

int main() {
  using namespace vtop;
  std::cout << std::boolalpha << std::left << std::setw(16) << "lattice" << std::setw(8) << "size" << std::setw(10) << "coprime"
            << std::setw(10) << "coframe" << "ccd\n";
  for (const auto& [name, L] : lattices::catalog()) {
    std::cout << std::setw(16) << name << std::setw(8) << L.size() << std::setw(10)
              << is_sup_generated_by_coprimes(L).holds() << std::setw(10) << is_coframe(L).holds << is_ccd(L).holds
              << "\n";
  }
}
