// Capacity bound of the full flag manifold of C^n for lambda = (n-1, ..., 1, 0),
// with the chain of torus-invariant spheres that realizes it.

#include <iostream>

#include "qeuler/qeuler.hpp"

int main() {
  using namespace qeuler;
  for (int n = 2; n <= 5; ++n) {
    std::vector<Rational> lambda;
    for (int i = n - 1; i >= 0; --i) lambda.emplace_back(i);
    const auto un = un_closed_form(lambda);
    const auto g = gkm_graph(un.spec);
    const auto hz = hz_upper_bound(g);
    std::cout << "n = " << n << "  closed form " << un.value << "\n" << hz_text(g, hz) << "\n";
  }
}
