#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "qeuler/qeuler.hpp"

namespace qeuler::testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(QEULER_DATA_DIR) + "/" + name; }

inline const FrobeniusAlgebra& ig26() {
  static const FrobeniusAlgebra a = complete_table(parse_spec(read_text(data_path("ig26.json"))));
  return a;
}

/// K[x]/(x^m) with basis 1, x, ..., x^(m-1) and f = coefficient of x^(m-1).
inline FrobeniusAlgebra truncated_polynomial(int m, const std::string& prefix = "x") {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(prefix + std::to_string(i));
  std::vector<QuantumElement> table(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) table[i * m + j] = QuantumElement(labels[i + j]);
  FrobeniusAlgebra::Vector f(m);
  f[m - 1] = 1;
  return FrobeniusAlgebra(labels, table, QuantumElement(labels[0]), f);
}

/// The field K itself with f(1) = c.
inline FrobeniusAlgebra field(const RationalFunction& c, const std::string& label = "u") {
  return FrobeniusAlgebra({label}, {QuantumElement(label)}, QuantumElement(label), {c});
}

struct Random {
  std::mt19937_64 gen;
  explicit Random(std::uint64_t seed) : gen(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(gen); }

  Rational rational(long long range = 20) {
    long long den = integer(1, range);
    return Rational(Integer(integer(-range, range)), Integer(den));
  }

  Rational nonzero_rational(long long range = 20) {
    Rational r;
    while (r.is_zero()) r = rational(range);
    return r;
  }

  /// Small Laurent monomial c*q^e.
  RationalFunction coefficient(bool allow_zero = true) {
    if (allow_zero && integer(0, 2) == 0) return {};
    return RationalFunction::monomial(nonzero_rational(5), static_cast<int>(integer(-1, 2)));
  }

  QuantumElement element(const FrobeniusAlgebra& a) {
    QuantumElement x;
    for (const auto& l : a.basis()) x.add(l, coefficient());
    if (x.is_zero()) x.add(a.basis().front(), 1);
    return x;
  }

  /// Unit lower times unit upper triangular, so always invertible.
  Matrix<RationalFunction> change_of_basis(std::size_t n) {
    Matrix<RationalFunction> lower = Matrix<RationalFunction>::identity(n), upper = lower;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lower(i, j) = RationalFunction(Rational(integer(-2, 2)));
        upper(j, i) = RationalFunction(Rational(integer(-2, 2)));
      }
    return lower * upper;
  }
};

/// Runs the built CLI and captures stdout and the exit code.
struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + QEULER_CLI + "\" " + args + " 2>/dev/null";
  CliResult r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace qeuler::testing
