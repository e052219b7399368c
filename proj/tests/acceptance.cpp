// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "support.hpp"

namespace {

using namespace qeuler;
using qeuler::testing::Random;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Check = std::function<void(Outcome&)>;

std::vector<FrobeniusAlgebra> grassmannians() {
  std::vector<FrobeniusAlgebra> out;
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}}) out.push_back(GrassmannianRing(k, n).to_frobenius());
  return out;
}

void g24_table(Outcome& o) {
  // The printed table, rows and columns 1, s1, s2, s11, s21, s22.
  const std::vector<std::string> order = {"0", "1", "2", "1,1", "2,1", "2,2"};
  const std::vector<std::vector<std::string>> expected = {
      {"1", "s[1]", "s[2]", "s[1,1]", "s[2,1]", "s[2,2]"},
      {"s[1]", "s[2] + s[1,1]", "s[2,1]", "s[2,1]", "s[2,2] + q", "q*s[1]"},
      {"s[2]", "s[2,1]", "s[2,2]", "q", "q*s[1]", "q*s[1,1]"},
      {"s[1,1]", "s[2,1]", "q", "s[2,2]", "q*s[1]", "q*s[2]"},
      {"s[2,1]", "s[2,2] + q", "q*s[1]", "q*s[1]", "q*s[2] + q*s[1,1]", "q*s[2,1]"},
      {"s[2,2]", "q*s[1]", "q*s[1,1]", "q*s[2]", "q*s[2,1]", "q^2"},
  };
  const auto a = GrassmannianRing(2, 4).to_frobenius();
  int matched = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const auto want = parse_linear_combination(expected[i][j], "0");
      const auto got = a.multiply(QuantumElement(order[i]), QuantumElement(order[j]));
      o.require(got == want, "s[" + order[i] + "]*s[" + order[j] + "] = " + format_element(a, got));
      matched += got == want;
    }
  o.require(matched == 36, "matched " + std::to_string(matched) + "/36");
}

void g24_euler(Outcome& o) {
  const auto a = GrassmannianRing(2, 4).to_frobenius();
  const auto e = a.euler_class();
  o.require(e == parse_linear_combination("6*s[2,2] + 2*q", "0"), "e = " + format_element(a, e));
  const auto inv = a.inverse(e);
  o.require(inv == parse_linear_combination("3/(16*q^2)*s[2,2] - 1/(16*q)", "0"), "e^-1 = " + format_element(a, inv));
  o.require(a.diagnose().semisimple, "not reported semisimple");
}

void ig26(Outcome& o) {
  const auto& a = qeuler::testing::ig26();
  o.require(a.validate().empty(), "validate() reports violations");
  const auto e = a.euler_class();
  o.require(e == parse_linear_combination("12*s[4,3] + 8*q*s[2] + 2*q*s[1,1]", "0"), "e = " + format_element(a, e));
  const auto y = parse_linear_combination("s[4,3] - q*s[2] + q*s[1,1]", "0");
  o.require(a.multiply(e, y).is_zero(), "e * (s43 - q s2 + q s11) != 0");
  const auto r = a.diagnose();
  o.require(!r.semisimple, "reported semisimple");
  o.require(r.field_factor, "no field factor reported");
}

void oracle(Outcome& o) {
  std::size_t pairs = 0;
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    const GrassmannianRing g(k, n);
    for (const auto& x : g.basis())
      for (const auto& y : g.basis()) {
        o.require(g.quantum_product(x, y) == rim_hook::rim_hook_product(g, x, y),
                  "G(" + std::to_string(k) + "," + std::to_string(n) + ") " + x.label() + " * " + y.label());
        ++pairs;
      }
  }
  o.require(pairs == 36 + 100 + 400, "pair count " + std::to_string(pairs));
}

void structure_properties(const FrobeniusAlgebra& a, Outcome& o, bool all_triples, Random& rng) {
  const std::size_t n = a.rank();
  const auto& g = *a.grading();
  std::size_t point = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a.functional_values()[i].is_one()) point = i;
  std::vector<std::size_t> dual(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto p = a.basis_product(i, j);
      const std::string where = a.basis()[i] + "*" + a.basis()[j];
      o.require(!p.is_zero(), "vanishing product " + where);
      o.require(p == a.basis_product(j, i), "not commutative at " + where);
      for (const auto& [l, c] : p) {
        const auto mono = c.as_monomial();
        o.require(mono && mono->first.sign() > 0 && mono->second >= 0, "non-positive coefficient in " + where);
        if (mono)
          o.require(g.real_degree[a.index_of(l)] - 2 * mono->second * g.chern_number ==
                        g.real_degree[i] + g.real_degree[j] - g.real_dimension,
                    "grading fails in " + where);
      }
      const auto c = p.coefficient(a.basis()[point]);
      o.require(c.is_zero() || c.is_one(), "point coefficient of " + where + " has a q-part");
      if (c.is_one()) {
        o.require(dual[i] == n, "two duals for " + a.basis()[i]);
        dual[i] = j;
      }
    }
  for (std::size_t i = 0; i < n; ++i) o.require(dual[i] < n, "no dual for " + a.basis()[i]);
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto x = a.basis_element(i), y = a.basis_element(j), z = a.basis_element(k);
    o.require(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)), "associativity fails");
  };
  if (all_triples) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) assoc(i, j, k);
  } else {
    for (int t = 0; t < 200; ++t) assoc(rng.integer(0, n - 1), rng.integer(0, n - 1), rng.integer(0, n - 1));
  }
}

void properties(Outcome& o) {
  Random rng(501);
  for (const auto& a : grassmannians()) structure_properties(a, o, false, rng);
  structure_properties(qeuler::testing::ig26(), o, true, rng);
}

void frobenius_engine(Outcome& o) {
  Random rng(601);
  auto algebras = grassmannians();
  algebras.push_back(qeuler::testing::ig26());
  algebras.push_back(qeuler::testing::truncated_polynomial(3));
  for (const auto& a : algebras) {
    const auto e = a.euler_class();
    for (int t = 0; t < 20; ++t) {
      const auto nu = rng.element(a);
      o.require(a.trace(nu) == a.functional(a.multiply(e, nu)), "trace identity fails");
    }
    o.require(a.functional(e) == RationalFunction(Rational(Integer(a.rank()))), "f(e) != rank");
    o.require(a.multiply(e, e).is_zero() == a.is_nilpotent(e), "e^2 = 0 and nilpotency disagree");
    if (a.rank() <= 12) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < a.rank(); ++i) labels.push_back("b" + std::to_string(i));
      const auto change = rng.change_of_basis(a.rank());
      const auto b = a.with_basis(change, labels);
      const auto eb = b.coordinates(b.euler_class());
      o.require(a.from_coordinates(change * std::span<const RationalFunction>(eb)) == e, "e depends on the basis");
    }
  }
  const auto x = GrassmannianRing(2, 4).to_frobenius();
  const auto y = qeuler::testing::ig26();
  const auto s = direct_sum(x, y);
  const auto [px, py] = direct_sum_prefixes(x, y);
  QuantumElement expected;
  for (const auto& [l, c] : x.euler_class()) expected.add(px + l, c);
  for (const auto& [l, c] : y.euler_class()) expected.add(py + l, c);
  o.require(s.euler_class() == expected, "direct-sum Euler class does not decompose");
}

void root_data(Outcome& o) {
  auto factorial = [](long long n) {
    long long f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const std::vector<std::pair<char, int>> systems = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5},
                                                     {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4}};
  for (auto [f, r] : systems) {
    const RootSystem rs(f, r);
    const long long order = f == 'A' ? factorial(r + 1) : f == 'D' ? (1LL << (r - 1)) * factorial(r) : (1LL << r) * factorial(r);
    const std::size_t count = f == 'A' ? r * (r + 1) / 2 : f == 'D' ? r * (r - 1) : r * r;
    o.require(WeylGroup(rs).order() == static_cast<std::size_t>(order), rs.name() + " Weyl order");
    o.require(rs.positive_roots().size() == count, rs.name() + " positive roots");
    const auto w = rs.fundamental_weights();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        o.require(pairing(w[i], rs.simple_roots()[j]) == Rational(i == j ? 1 : 0), rs.name() + " <w, b> != delta");
  }
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      std::set<int> sp;
      for (int i = 0; i < n - 1; ++i)
        if (i != k - 1) sp.insert(i);
      o.require(chern_numbers(OrbitSpec(RootSystem('A', n - 1), sp)).minimal == n,
                "N != n for G(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
    std::set<int> sp;
    for (int i = 1; i < n; ++i) sp.insert(i);
    o.require(chern_numbers(OrbitSpec(RootSystem('A', n), sp)).minimal == n + 1,
              "N != n+1 for projective space of dimension " + std::to_string(n));
  }
}

void capacity(Outcome& o) {
  Random rng(801);
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 25; ++t) {
      std::vector<Rational> lambda{rng.rational(10)};
      for (int i = 1; i < n; ++i)
        lambda.push_back(lambda.back() - Rational(Integer(rng.integer(1, 40)), Integer(rng.integer(1, 7))));
      const auto un = un_closed_form(lambda);
      const auto g = gkm_graph(un.spec);
      const auto hz = hz_upper_bound(g);
      o.require(hz.bound == un.value, "n=" + std::to_string(n) + ": Dijkstra " + hz.bound.to_string() +
                                          " vs closed form " + un.value.to_string());
      if (n <= 4) o.require(brute_force_bound(g) == un.value, "n=" + std::to_string(n) + ": brute force differs");
    }
}

void golden(Outcome& o) {
  const std::string dir = QEULER_GOLDEN_DIR;
  const auto table = qeuler::testing::run_cli("grassmannian -k 2 -n 4 table --format md");
  o.require(table.exit_code == 0, "table exit code " + std::to_string(table.exit_code));
  o.require(table.out == qeuler::testing::read_text(dir + "/g24_table.md"), "G(2,4) markdown table differs");
  const auto diag = qeuler::testing::run_cli("algebra --file \"" + qeuler::testing::data_path("ig26.json") +
                                             "\" diagnose --format json");
  o.require(diag.exit_code == 0, "diagnose exit code " + std::to_string(diag.exit_code));
  o.require(diag.out == qeuler::testing::read_text(dir + "/ig26_diagnose.json"), "IG(2,6) diagnose JSON differs");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;  // 0 = no limit
    Check check;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 G(2,4) multiplication table", 1, g24_table},
      {"AC2 G(2,4) Euler class, inverse, semisimple", 0, g24_euler},
      {"AC3 IG(2,6) table, Euler class, zero divisor, diagnosis", 0, ig26},
      {"AC4 Pieri/Giambelli = rim-hook on G(2,4), G(2,5), G(3,6)", 30, oracle},
      {"AC5 structure-constant properties", 0, properties},
      {"AC6 Frobenius engine properties", 0, frobenius_engine},
      {"AC7 root data", 0, root_data},
      {"AC8 capacity bound", 60, capacity},
      {"AC9 CLI golden files", 0, golden},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0)
      o.require(seconds < c.limit_seconds, "took " + std::to_string(seconds) + " s, limit " +
                                               std::to_string(c.limit_seconds) + " s");
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(3) << seconds << " s)";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << std::endl;
    failures += !o.ok;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
