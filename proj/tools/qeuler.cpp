#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qeuler/qeuler.hpp"

namespace {

using namespace qeuler;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string action;
  std::vector<std::string> classes;
  std::string format = "text";
  unsigned jobs = 1;
  int k = 0, n = 0;
  bool allow_large = false;
  std::string file;
  std::string family;
  int rank = 0;
  std::string parabolic;
  std::string lambda;
  std::string kappa;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not available for '" + (o.action.empty() ? "un-capacity" : o.action) + "'");
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p) && p.is_relative() && std::filesystem::exists(std::filesystem::path(QEULER_DATA_DIR) / p))
    p = std::filesystem::path(QEULER_DATA_DIR) / p;
  std::ifstream in(p);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string algebra_action(const Options& o, const FrobeniusAlgebra& a, const std::vector<std::string>& order,
                           const std::function<std::string(const std::string&)>& label_of) {
  if (o.action == "table") {
    require_format(o, {"text", "md", "json"});
    if (o.format == "md") return markdown_table(a, order);
    if (o.format == "json") return dump(json_table(a, order));
    return text_table(a, order);
  }
  if (o.action == "euler") {
    require_format(o, {"text", "json"});
    const auto e = format_element(a, a.euler_class());
    if (o.format == "json") return dump(OrderedJson{{"euler_class", e}});
    return e + "\n";
  }
  if (o.action == "diagnose") {
    require_format(o, {"text", "json"});
    const auto r = a.diagnose();
    return o.format == "json" ? dump(diagnose_json(a, r)) : diagnose_text(a, r);
  }
  // product
  require_format(o, {"text", "json"});
  if (o.classes.empty()) throw UsageError("product needs at least one class label");
  QuantumElement x = a.unit();
  for (const auto& c : o.classes) x = a.multiply(x, QuantumElement(label_of(c)));
  const auto text = format_element(a, x);
  if (o.format == "json") return dump(OrderedJson{{"product", text}});
  return text + "\n";
}

std::string run_grassmannian(const Options& o) {
  if (o.action != "table" && o.action != "euler" && o.action != "diagnose" && o.action != "product")
    throw UsageError("unknown grassmannian action '" + o.action + "'");
  enumerate_basis(o.k, o.n);
  if (o.k * (o.n - o.k) > 12 && !o.allow_large)
    throw TooLarge("G(" + std::to_string(o.k) + "," + std::to_string(o.n) + ") has dimension " +
                   std::to_string(o.k * (o.n - o.k)) + " > 12; pass --allow-large to proceed");
  const GrassmannianRing ring(o.k, o.n);
  const auto algebra = ring.to_frobenius(o.jobs);
  std::vector<std::string> order;
  for (const auto& p : ring.table_order()) order.push_back(p.label());
  auto label_of = [&](const std::string& c) {
    const auto p = Partition::parse(c);
    if (!ring.contains(p)) throw UnknownLabel("class '" + c + "' does not fit in the box");
    return p.label();
  };
  return algebra_action(o, algebra, order, label_of);
}

std::string run_algebra(const Options& o) {
  if (o.action != "table" && o.action != "euler" && o.action != "diagnose" && o.action != "product")
    throw UsageError("unknown algebra action '" + o.action + "'");
  const auto spec = parse_spec(read_file(o.file));
  const auto algebra = complete_table(spec);
  auto label_of = [&](const std::string& c) {
    algebra.index_of(c);
    return c;
  };
  return algebra_action(o, algebra, algebra.basis(), label_of);
}

std::set<int> parse_parabolic(const Options& o) {
  std::set<int> out;
  if (o.parabolic.empty()) return out;
  std::stringstream ss(o.parabolic);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const Rational i = Rational::parse(piece);
    if (!i.is_integer() || i < Rational(1) || i > Rational(o.rank))
      throw InvalidWeight("parabolic index '" + piece + "' must be between 1 and " + std::to_string(o.rank));
    out.insert(static_cast<int>(i.numerator()) - 1);
  }
  return out;
}

std::string vector_text(const RationalVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out;
}

OrderedJson vector_json(const RationalVector& v) {
  OrderedJson out = OrderedJson::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string run_orbit(const Options& o) {
  if (o.family.size() != 1) throw UnsupportedType("family must be one of A, B, C, D");
  OrbitSpec spec(RootSystem(o.family[0], o.rank), parse_parabolic(o));
  if (!o.lambda.empty()) spec = spec.with_weight(parse_rational_list(o.lambda));
  else if (!o.kappa.empty() && o.action != "monotone-weight") spec = monotone_weight(spec, Rational::parse(o.kappa));

  if (o.action == "chern") {
    require_format(o, {"text", "json"});
    const auto c = chern_numbers(spec);
    if (o.format == "json") {
      OrderedJson n = OrderedJson::object();
      for (const auto& [i, v] : c.n_alpha) n[spec.simple_root_name(i)] = v;
      return dump(OrderedJson{{"n_alpha", n}, {"N", c.minimal}});
    }
    std::string out;
    for (const auto& [i, v] : c.n_alpha) out += "n_" + spec.simple_root_name(i) + " = " + std::to_string(v) + "\n";
    return out + "N = " + std::to_string(c.minimal) + "\n";
  }
  if (o.action == "monotone-weight") {
    require_format(o, {"text", "json"});
    std::optional<Rational> kappa;
    RationalVector lambda;
    if (!o.lambda.empty()) {
      kappa = is_monotone(spec);
      lambda = *spec.weight();
    } else {
      kappa = o.kappa.empty() ? Rational(1) : Rational::parse(o.kappa);
      lambda = *monotone_weight(spec, *kappa).weight();
    }
    if (o.format == "json")
      return dump(OrderedJson{{"lambda", vector_json(lambda)},
                              {"monotone", kappa.has_value()},
                              {"kappa", kappa ? OrderedJson(kappa->to_string()) : OrderedJson(nullptr)}});
    return "lambda = (" + vector_text(lambda) + ")\n" +
           (kappa ? "monotone: true, kappa = " + kappa->to_string() + "\n" : "monotone: false\n");
  }
  if (o.action == "gkm") {
    require_format(o, {"text", "json", "dot"});
    const auto g = gkm_graph(spec);
    if (o.format == "dot") return to_dot(g);
    if (o.format == "json") return dump(gkm_json(g));
    return gkm_text(g);
  }
  if (o.action == "hz-bound") {
    require_format(o, {"text", "json"});
    const auto g = gkm_graph(spec);
    const auto hz = hz_upper_bound(g);
    return o.format == "json" ? dump(hz_json(g, hz)) : hz_text(g, hz);
  }
  throw UsageError("unknown orbit action '" + o.action + "'");
}

std::string run_un_capacity(const Options& o) {
  require_format(o, {"text", "json"});
  const auto un = un_closed_form(parse_rational_list(o.lambda));
  if (o.format == "json") {
    const auto g = gkm_graph(un.spec);
    auto j = hz_json(g, hz_upper_bound(g));
    j["closed_form"] = un.value.to_string();
    return dump(j);
  }
  return un.value.to_string() + "\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "md", "json", "dot"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Euler classes, Frobenius diagnostics and GKM capacity bounds"};
  app.require_subcommand(1);
  Options o;

  auto* gr = app.add_subcommand("grassmannian", "Quantum cohomology of G(k,n)");
  gr->add_option("-k", o.k, "Dimension of the subspaces")->required();
  gr->add_option("-n", o.n, "Dimension of the ambient space")->required();
  gr->add_option("--jobs", o.jobs, "Threads used to build the table")->check(CLI::PositiveNumber);
  gr->add_flag("--allow-large", o.allow_large, "Allow k(n-k) > 12");
  gr->add_option("action", o.action, "table | euler | diagnose | product")->required();
  gr->add_option("classes", o.classes, "Partitions for product, e.g. 2,1");
  add_common(gr, o);

  auto* al = app.add_subcommand("algebra", "Algebra presented by a JSON spec file");
  al->add_option("--file", o.file, "Spec file")->required();
  al->add_option("action", o.action, "table | euler | diagnose | product")->required();
  al->add_option("classes", o.classes, "Class labels for product");
  add_common(al, o);

  auto* orb = app.add_subcommand("orbit", "Coadjoint orbit G/P");
  orb->add_option("--family", o.family, "A, B, C or D")->required();
  orb->add_option("--rank", o.rank, "Rank")->required();
  orb->add_option("--parabolic", o.parabolic, "Simple roots in S_P, 1-based, comma separated");
  orb->add_option("--lambda", o.lambda, "Weight, comma separated rationals");
  orb->add_option("--kappa", o.kappa, "Monotonicity constant");
  orb->add_option("action", o.action, "chern | monotone-weight | gkm | hz-bound")->required();
  add_common(orb, o);

  auto* un = app.add_subcommand("un-capacity", "Capacity bound of a regular U(n) orbit");
  un->add_option("--lambda", o.lambda, "Strictly decreasing eigenvalues")->required();
  add_common(un, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::string out;
    if (gr->parsed()) out = run_grassmannian(o);
    else if (al->parsed()) out = run_algebra(o);
    else if (orb->parsed()) out = run_orbit(o);
    else out = run_un_capacity(o);
    std::cout << out;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::arithmetic ? 3 : 2;
  }
}
