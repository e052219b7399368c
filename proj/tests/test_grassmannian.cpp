#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace qeuler;
using qeuler::testing::Random;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SchubertElement term(const Partition& p, int q_power = 0, long long c = 1) {
  return SchubertElement(p, RationalFunction::monomial(Rational(c), q_power));
}

const std::vector<std::pair<int, int>> kShapes = {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {1, 5}};

TEST(Grassmannian, BasisHasBinomialSize) {
  EXPECT_EQ(enumerate_basis(2, 4).size(), 6u);
  EXPECT_EQ(enumerate_basis(2, 5).size(), 10u);
  EXPECT_EQ(enumerate_basis(3, 6).size(), 20u);
  EXPECT_EQ(enumerate_basis(1, 2).size(), 2u);
  EXPECT_THROW(enumerate_basis(0, 3), InvalidShape);
  EXPECT_THROW(enumerate_basis(3, 3), InvalidShape);
}

TEST(Grassmannian, ProductsFromTheG24Table) {
  const GrassmannianRing g(2, 4);
  EXPECT_EQ(g.quantum_product(P({1}), P({1})), term(P({2})) + term(P({1, 1})));
  EXPECT_EQ(g.quantum_product(P({1}), P({2, 1})), term(P({2, 2})) + term(P({}), 1));
  EXPECT_EQ(g.quantum_product(P({2}), P({1, 1})), term(P({}), 1));
  EXPECT_EQ(g.quantum_product(P({2}), P({2})), term(P({2, 2})));
  EXPECT_EQ(g.quantum_product(P({2, 1}), P({2, 1})), term(P({2}), 1) + term(P({1, 1}), 1));
  EXPECT_EQ(g.quantum_product(P({2, 2}), P({2, 2})), term(P({}), 2));
  EXPECT_EQ(g.quantum_product(P({1, 1}), P({2, 2})), term(P({2}), 1));
}

TEST(Grassmannian, EulerClassAndInverse) {
  const auto a = GrassmannianRing(2, 4).to_frobenius();
  const auto e = a.euler_class();
  EXPECT_EQ(format_element(a, e), "6*s[2,2] + 2*q");
  EXPECT_EQ(format_element(a, a.inverse(e)), "3/16*q^-2*s[2,2] - 1/16*q^-1");
  EXPECT_TRUE(a.diagnose().semisimple);
}

TEST(Grassmannian, ProjectiveLine) {
  const GrassmannianRing g(1, 2);
  EXPECT_EQ(g.quantum_product(P({1}), P({1})), term(P({}), 1));
  const auto a = g.to_frobenius();
  EXPECT_EQ(format_element(a, a.euler_class()), "2*s[1]");
  EXPECT_TRUE(a.diagnose().semisimple);
}

TEST(Grassmannian, GiambelliMatchesPieri) {
  const GrassmannianRing g(2, 5);
  const auto s1 = term(P({1})), s2 = term(P({2}));
  EXPECT_EQ(term(P({1, 1})), g.product(s1, s1) - s2);
}

TEST(Grassmannian, PieriRejectsBadSpecialClass) {
  const GrassmannianRing g(2, 4);
  EXPECT_THROW(g.quantum_pieri(3, P({1})), InvalidSpecialClass);
  EXPECT_THROW(g.quantum_pieri(-1, P({1})), InvalidSpecialClass);
  EXPECT_THROW(g.quantum_product(P({3}), P({1})), InvalidShape);
}

TEST(Grassmannian, AgreesWithRimHookOracle) {
  for (auto [k, n] : kShapes) {
    const GrassmannianRing g(k, n);
    for (const auto& a : g.basis())
      for (const auto& b : g.basis())
        EXPECT_EQ(g.quantum_product(a, b), rim_hook::rim_hook_product(g, a, b)) << a.label() << " * " << b.label();
  }
}

TEST(Grassmannian, RimHookSignConventionCalibration) {
  const GrassmannianRing g(2, 4);
  std::size_t frozen_mismatch = 0, other_mismatch = 0;
  for (const auto& b : g.basis()) {
    const auto pieri = g.quantum_product(P({1}), b);
    frozen_mismatch += pieri != rim_hook::rim_hook_product(g, P({1}), b, rim_hook::SignConvention::rows_complement);
    other_mismatch += pieri != rim_hook::rim_hook_product(g, P({1}), b, rim_hook::SignConvention::height_minus_one);
  }
  EXPECT_EQ(frozen_mismatch, 0u);
  EXPECT_GT(other_mismatch, 0u);
}

TEST(Grassmannian, StructureConstantsArePositive) {
  for (auto [k, n] : kShapes) {
    const GrassmannianRing g(k, n);
    for (const auto& a : g.basis())
      for (const auto& b : g.basis())
        for (const auto& [nu, c] : g.quantum_product(a, b)) {
          auto mono = c.as_monomial();
          ASSERT_TRUE(mono.has_value());
          EXPECT_GT(mono->first.sign(), 0);
          EXPECT_TRUE(mono->first.is_integer());
          EXPECT_GE(mono->second, 0);
        }
  }
}

TEST(Grassmannian, PointPairingIsDuality) {
  for (auto [k, n] : kShapes) {
    const GrassmannianRing g(k, n);
    for (const auto& a : g.basis())
      for (const auto& b : g.basis()) {
        const auto c = g.quantum_product(a, b).coefficient(g.full_box());
        const bool dual = g.dual_partition(a) == b;
        EXPECT_EQ(c, RationalFunction(dual ? 1 : 0)) << a.label() << " * " << b.label();
      }
  }
}

TEST(Grassmannian, GradingAndCommutativity) {
  for (auto [k, n] : kShapes) {
    const GrassmannianRing g(k, n);
    const int dim = g.complex_dimension();
    for (const auto& a : g.basis())
      for (const auto& b : g.basis()) {
        const auto ab = g.quantum_product(a, b);
        EXPECT_EQ(ab, g.quantum_product(b, a));
        for (const auto& [nu, c] : ab) {
          const int d = c.as_monomial()->second;
          EXPECT_EQ(g.real_degree(nu) - 2 * d * n, g.real_degree(a) + g.real_degree(b) - 2 * dim);
        }
      }
    EXPECT_TRUE(g.to_frobenius().validate().empty());
  }
}

TEST(Grassmannian, AssociativityOnRandomTriples) {
  Random rng(21);
  for (auto [k, n] : kShapes) {
    const GrassmannianRing g(k, n);
    const auto& basis = g.basis();
    for (int t = 0; t < 200; ++t) {
      const auto& a = basis[rng.integer(0, basis.size() - 1)];
      const auto& b = basis[rng.integer(0, basis.size() - 1)];
      const auto& c = basis[rng.integer(0, basis.size() - 1)];
      EXPECT_EQ(g.product(g.quantum_product(a, b), term(c)), g.product(term(a), g.quantum_product(b, c)));
    }
  }
}

TEST(Grassmannian, ProductsNeverVanish) {
  for (auto [k, n] : kShapes) {
    const GrassmannianRing g(k, n);
    for (const auto& a : g.basis())
      for (const auto& b : g.basis()) EXPECT_FALSE(g.quantum_product(a, b).is_zero());
  }
}

TEST(Grassmannian, ThreadCountDoesNotChangeTheTable) {
  const GrassmannianRing g(3, 6);
  const auto one = g.to_frobenius(1), four = g.to_frobenius(4);
  for (std::size_t i = 0; i < one.rank(); ++i)
    for (std::size_t j = 0; j < one.rank(); ++j) EXPECT_EQ(one.basis_product(i, j), four.basis_product(i, j));
}

TEST(Grassmannian, EulerClassesAreUnits) {
  for (auto [k, n] : kShapes) {
    const auto r = GrassmannianRing(k, n).to_frobenius().diagnose();
    EXPECT_TRUE(r.semisimple) << k << "," << n;
    EXPECT_TRUE(r.field_factor);
  }
}

TEST(Grassmannian, ChernNumberMatchesRootData) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      std::set<int> sp;
      for (int i = 0; i < n - 1; ++i)
        if (i != k - 1) sp.insert(i);
      const OrbitSpec spec(RootSystem('A', n - 1), sp);
      EXPECT_EQ(chern_numbers(spec).minimal, GrassmannianRing(k, n).chern_number());
    }
}

}  // namespace
