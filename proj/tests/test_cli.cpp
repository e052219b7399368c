#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace qeuler;
using qeuler::testing::read_text;
using qeuler::testing::run_cli;

const std::string kIg26 = "--file \"" + qeuler::testing::data_path("ig26.json") + "\"";

TEST(Cli, GrassmannianEuler) {
  const auto r = run_cli("grassmannian -k 2 -n 4 euler");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "6*s[2,2] + 2*q\n");
}

TEST(Cli, GoldenG24Table) {
  const auto r = run_cli("grassmannian -k 2 -n 4 table --format md");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, read_text(std::string(QEULER_GOLDEN_DIR) + "/g24_table.md"));
}

TEST(Cli, GoldenIg26Diagnose) {
  const auto r = run_cli("algebra " + kIg26 + " diagnose --format json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, read_text(std::string(QEULER_GOLDEN_DIR) + "/ig26_diagnose.json"));
}

TEST(Cli, DiagnoseJsonRoundTrips) {
  const auto r = run_cli("algebra " + kIg26 + " diagnose --format json");
  const auto& a = qeuler::testing::ig26();
  const auto parsed = diagnose_from_json(a, OrderedJson::parse(r.out));
  const auto direct = a.diagnose();
  EXPECT_EQ(parsed.rank, direct.rank);
  EXPECT_EQ(parsed.euler_class, direct.euler_class);
  EXPECT_EQ(parsed.f_of_euler, direct.f_of_euler);
  EXPECT_EQ(parsed.euler_square, direct.euler_square);
  EXPECT_EQ(parsed.semisimple, direct.semisimple);
  EXPECT_EQ(parsed.field_factor, direct.field_factor);
}

TEST(Cli, TableJsonRoundTrips) {
  const auto r = run_cli("grassmannian -k 2 -n 5 table --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto a = GrassmannianRing(2, 5).to_frobenius();
  const auto j = OrderedJson::parse(r.out);
  EXPECT_EQ(j.size(), a.rank() * a.rank());
  for (const auto& [key, value] : j.items()) {
    const auto bar = key.find('|');
    const auto x = a.index_of(key.substr(0, bar)), y = a.index_of(key.substr(bar + 1));
    EXPECT_EQ(element_from_json(a, value), a.basis_product(x, y)) << key;
  }
}

TEST(Cli, HzBoundJson) {
  const auto r = run_cli("orbit --family A --rank 3 --parabolic 1,3 --lambda 2,2,-2,-2 hz-bound --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = OrderedJson::parse(r.out);
  EXPECT_EQ(j.at("bound"), "8");
  EXPECT_EQ(j.at("chain").size(), 2u);
  EXPECT_EQ(j.at("degree").at("a2"), "2");
  Rational sum;
  for (const auto& step : j.at("chain")) sum += Rational::parse(step.at("weight").get<std::string>());
  EXPECT_EQ(sum, Rational(8));
}

TEST(Cli, UnCapacity) {
  EXPECT_EQ(run_cli("un-capacity --lambda 3,1,0").out, "3\n");
  EXPECT_EQ(run_cli("un-capacity --lambda 5,3,1,-1").out, "8\n");
  EXPECT_EQ(run_cli("un-capacity --lambda 1/2,-1/2").out, "1\n");
}

TEST(Cli, OrbitActions) {
  EXPECT_EQ(run_cli("orbit --family A --rank 3 --parabolic 1,3 chern").out, "n_a2 = 4\nN = 4\n");
  EXPECT_EQ(run_cli("orbit --family A --rank 3 --parabolic 1,3 --kappa 1 monotone-weight").out,
            "lambda = (2,2,-2,-2)\nmonotone: true, kappa = 1\n");
  const auto dot = run_cli("orbit --family A --rank 1 --lambda 3,1 gkm --format dot");
  EXPECT_EQ(dot.out, "graph gkm {\n  v0 [label=\"e\"];\n  v1 [label=\"s1\"];\n  v0 -- v1 [label=\"a1 | 2\"];\n}\n");
}

TEST(Cli, Products) {
  EXPECT_EQ(run_cli("grassmannian -k 2 -n 4 product 2,1 2,1").out, "q*s[2] + q*s[1,1]\n");
  EXPECT_EQ(run_cli("algebra " + kIg26 + " product 2,1 2,1").out, "2*s[4,2] + q*s[1]\n");
}

TEST(Cli, JobsDoNotChangeOutput) {
  EXPECT_EQ(run_cli("grassmannian -k 3 -n 6 table --format json --jobs 4").out,
            run_cli("grassmannian -k 3 -n 6 table --format json").out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("grassmannian -k 2").exit_code, 1);
  EXPECT_EQ(run_cli("grassmannian -k 2 -n 4 euler --format dot").exit_code, 1);
  EXPECT_EQ(run_cli("grassmannian -k 2 -n 4 frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli("un-capacity --lambda 1,1").exit_code, 2);
  EXPECT_EQ(run_cli("orbit --family A --rank 2 --lambda 1,1,0 gkm").exit_code, 2);
  EXPECT_EQ(run_cli("orbit --family E --rank 6 chern").exit_code, 2);
  EXPECT_EQ(run_cli("grassmannian -k 3 -n 8 euler").exit_code, 2);
  EXPECT_EQ(run_cli("grassmannian -k 2 -n 4 product 3").exit_code, 2);
  EXPECT_EQ(run_cli("un-capacity --lambda 1/0,1").exit_code, 3);
}

}  // namespace
