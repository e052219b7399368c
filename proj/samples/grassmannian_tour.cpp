// Prints the quantum Euler class of G(k,n) for a few small Grassmannians and
// whether it is invertible.

#include <iostream>

#include "qeuler/qeuler.hpp"

int main() {
  using namespace qeuler;
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {2, 4}, {2, 5}}) {
    const auto algebra = GrassmannianRing(k, n).to_frobenius();
    const auto e = algebra.euler_class();
    std::cout << "G(" << k << "," << n << ")  e = " << format_element(algebra, e);
    if (algebra.is_unit(e)) std::cout << "  e^-1 = " << format_element(algebra, algebra.inverse(e));
    std::cout << "\n";
  }
}
