#include "armatch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "armatch/constructions.hpp"
#include "armatch/formulas.hpp"
#include "armatch/io.hpp"
#include "armatch/oracle.hpp"
#include "armatch/rainbow.hpp"
#include "armatch/shifting.hpp"
#include "armatch/solvers.hpp"

namespace armatch::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int threads = 1;
  std::uint64_t seed = 0;

  std::string name;
  std::string kind;
  std::string certificate;
  std::string family;
  std::optional<int> n, k, s, m, l;
  std::string tol = "1e-9";
  std::string U, W;
  std::string spec_path;
  std::string input;
  std::string output;
  std::string n_range;
  bool emit_spec = false;
  int cases = 1000;
  int n_max = 7;
};

int need(const std::optional<int>& v, const char* flag, const std::string& context) {
  if (!v) throw UsageError(context + " needs " + flag);
  return *v;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex list '" + text + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b");
  try {
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    if (a > b) throw UsageError("empty range " + text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like a..b");
  }
}

json edge_json(Edge e) { return vertices_of(e); }

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (Edge e : edges) out.push_back(edge_json(e));
  return out;
}

// Writes to --output when given, else to out.
template <class Writer>
void emit(const Options& o, std::ostream& out, Writer write) {
  if (o.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw UsageError("cannot write " + o.output);
  write(file);
}

int cmd_formulas(const Options& o, std::ostream& out) {
  json params = json::object();
  json result;
  const std::string ctx = "formulas --name " + o.name;
  if (o.name == "turan3") {
    const int n = need(o.n, "--n", ctx), s = need(o.s, "--s", ctx);
    params = {{"n", n}, {"s", s}};
    result = to_json(turan_3(n, s));
  } else if (o.name == "turan-conj") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx), s = need(o.s, "--s", ctx);
    params = {{"n", n}, {"k", k}, {"s", s}};
    result = to_json(turan_conjectured(n, k, s));
  } else if (o.name == "ar3") {
    const int n = need(o.n, "--n", ctx), s = need(o.s, "--s", ctx);
    params = {{"n", n}, {"s", s}};
    result = to_json(anti_ramsey_3(n, s));
  } else if (o.name == "ar-large") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx), s = need(o.s, "--s", ctx);
    params = {{"n", n}, {"k", k}, {"s", s}};
    result = to_json(anti_ramsey_large_n(n, k, s));
  } else if (o.name == "lb-perfect") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx);
    params = {{"n", n}, {"k", k}};
    result = to_json(lower_bound_perfect(n, k));
  } else if (o.name == "s0") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx);
    params = {{"n", n}, {"k", k}};
    result = {{"value", s_threshold(n, k)},
              {"valid", to_string(Validity::kProved)},
              {"provenance", "smallest s with C(n,k) - C(n-s,k) <= C(k(s+1)-1,k)"}};
  } else if (o.name == "alpha") {
    const int k = need(o.k, "--k", ctx);
    const Rational tol = parse_rational(o.tol);
    params = {{"k", k}, {"tol", o.tol}};
    const RationalInterval iv = alpha_k(k, tol);
    const RationalInterval bounds = alpha_k_bounds(k);
    result = {{"value", {{"lo", to_decimal(iv.lo, 15)}, {"hi", to_decimal(iv.hi, 15)}}},
              {"exact", {{"lo", iv.lo.str()}, {"hi", iv.hi.str()}}},
              {"bounds", {{"lo", to_decimal(bounds.lo, 15)}, {"hi", to_decimal(bounds.hi, 15)}}},
              {"inside_bounds", bounds.lo < iv.lo && iv.hi < bounds.hi},
              {"valid", to_string(Validity::kProved)},
              {"provenance", "root of 1 - (1-a)^k = k^k a^k in (0,1), exact bisection"}};
  } else {
    throw UsageError("unknown formula '" + o.name + "'");
  }
  json report = {{"name", o.name}, {"params", params}};
  report.update(result);
  out << report.dump() << '\n';
  return kOk;
}

ConstructionSpec spec_from_flags(const Options& o) {
  ConstructionSpec spec;
  spec.kind = construction_kind_from_string(o.kind);
  const std::string ctx = "construct --kind " + o.kind;
  spec.n = need(o.n, "--n", ctx);
  spec.s = need(o.s, "--s", ctx);
  spec.k = spec.kind == ConstructionKind::kScriptD ? o.k.value_or(3) : need(o.k, "--k", ctx);
  if (!o.U.empty()) spec.U = parse_list(o.U);
  if (!o.W.empty()) spec.W = parse_list(o.W);
  return spec;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const std::string ctx = "construct --kind " + o.kind;
  if (o.kind == "H1" || o.kind == "H2") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx);
    const auto built = o.kind == "H1" ? build_H1_coloring(n, k) : build_H2_coloring(n, k);
    emit(o, out, [&](std::ostream& os) { write_coloring(os, built.coloring); });
    return kOk;
  }
  if (o.kind == "turan-plus-one") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx), s = need(o.s, "--s", ctx);
    const auto built = build_turan_plus_one_coloring(n, k, s);
    emit(o, out, [&](std::ostream& os) { write_coloring(os, built.coloring); });
    return kOk;
  }

  ConstructionSpec spec;
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw UsageError("cannot open " + o.spec_path);
    try {
      spec = json::parse(in).get<ConstructionSpec>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad spec: ") + e.what());
    }
  } else {
    if (o.kind.empty()) throw UsageError("construct needs --kind or --spec");
    spec = spec_from_flags(o);
  }
  validate(spec);
  if (o.emit_spec) {
    emit(o, out, [&](std::ostream& os) { os << json(resolved(spec)).dump() << '\n'; });
    return kOk;
  }
  const UniformHypergraph h = build(spec);
  emit(o, out, [&](std::ostream& os) { write_hypergraph(os, h); });
  return kOk;
}

Certificate certify_nu(const UniformHypergraph& h, int s) {
  Stopwatch clock;
  SearchStats stats;
  const Matching best = maximum_matching(h, &stats);
  Certificate cert;
  cert.claim = "nu(H) = " + std::to_string(s);
  cert.parameters = {{"n", h.n()}, {"k", h.k()}, {"edges", h.edge_count()}, {"s", s}, {"nu", best.size()},
                     {"witness", edges_json(best.edges)}};
  cert.search_size = stats.nodes;
  cert.verdict = best.size() == static_cast<std::size_t>(s);
  cert.elapsed_ms = clock.elapsed_ms();
  return cert;
}

Certificate certify_stable(const UniformHypergraph& h) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = "H is stable under every shift S_ij, i < j";
  const bool closed = is_dominance_closed(h);
  cert.verdict = is_stable(h);
  cert.parameters = {{"n", h.n()}, {"k", h.k()}, {"edges", h.edge_count()}, {"dominance_closed", closed}};
  cert.search_size = binomial_u64(h.n(), 2);
  cert.elapsed_ms = clock.elapsed_ms();
  return cert;
}

Certificate certify_saturated(const UniformHypergraph& h, int s) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = "H is " + std::to_string(s) + "-saturated";
  const int nu = matching_number(h);
  cert.verdict = is_saturated(h, s);
  cert.parameters = {{"n", h.n()}, {"k", h.k()}, {"edges", h.edge_count()}, {"s", s}, {"nu", nu}};
  cert.search_size = binomial_u64(h.n(), h.k()) - h.edge_count();
  cert.elapsed_ms = clock.elapsed_ms();
  return cert;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("verify needs --input");
  const std::string ctx = "verify --certificate " + o.certificate;
  Certificate cert;
  if (o.certificate == "no-rainbow-pm") {
    cert = certify_no_rainbow_perfect_matching(parse_coloring(o.input), o.threads);
  } else if (o.certificate == "nu-equals-s") {
    cert = certify_nu(parse_hypergraph(o.input), need(o.s, "--s", ctx));
  } else if (o.certificate == "stable") {
    cert = certify_stable(parse_hypergraph(o.input));
  } else if (o.certificate == "saturated") {
    cert = certify_saturated(parse_hypergraph(o.input), need(o.s, "--s", ctx));
  } else if (o.certificate == "min-degree") {
    cert = certify_min_degree_matching(parse_hypergraph(o.input), need(o.s, "--s", ctx));
  } else {
    throw UsageError("unknown certificate '" + o.certificate + "'");
  }
  out << json(cert).dump() << '\n';
  return cert.verdict ? kOk : kVerdictFalse;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const std::string ctx = "oracle --name " + o.name;
  json report;
  if (o.name == "turan") {
    const int n = need(o.n, "--n", ctx), k = need(o.k, "--k", ctx), s = need(o.s, "--s", ctx);
    const TuranOracleResult r = brute_turan_stable(n, k, s, o.threads);
    const FormulaResult f = k == 3 ? turan_3(n, s + 1) : turan_conjectured(n, k, s);
    report = {{"oracle", r.max_edges},
              {"formula", to_json(f)["value"]},
              {"agree", f.value == r.max_edges},
              {"formula_valid", to_string(f.valid)},
              {"params", {{"n", n}, {"k", k}, {"s", s}}},
              {"nodes", r.nodes},
              {"witness", edges_json(r.witness)}};
  } else if (o.name == "hilton-milner") {
    const int m = need(o.m, "--m", ctx), l = need(o.l, "--l", ctx);
    const CrossIntersectingResult r = brute_cross_intersecting_max(m, l, o.threads);
    const BigInt formula = binomial(m, l) - binomial(m - l, l) + 1;
    report = {{"oracle", r.max_sum},
              {"formula", static_cast<long long>(formula)},
              {"agree", formula == r.max_sum},
              {"params", {{"m", m}, {"l", l}}},
              {"families_examined", r.families_examined},
              {"extremal_pairs", r.extremal.size()}};
  } else {
    throw UsageError("unknown oracle '" + o.name + "'");
  }
  out << report.dump() << '\n';
  return report["agree"].get<bool>() ? kOk : kVerdictFalse;
}

std::string branch_ar3(int n, int s) {
  if (s < 3) return "s<3";
  if (n < 3 * s) return "n<3s";
  if (n == 3 * s) return "n=3s";
  if (n < 5 * s - 2) return "3s<n<5s-2";
  return "n>=5s-2";
}

std::string branch_turan3(int n, int s) {
  const BigInt cover = binomial(n, 3) - binomial(n - s + 1, 3);
  const BigInt clique = binomial(3 * s - 1, 3);
  if (cover == clique) return "tie";
  return cover > clique ? "cover" : "clique";
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.n_range.empty()) throw UsageError("table needs --n-range");
  const auto [lo, hi] = parse_range(o.n_range);
  if (lo < 1) throw UsageError("table needs n >= 1");
  if (o.family != "ar3" && o.family != "turan3") throw UsageError("unknown family '" + o.family + "'");
  out << "n,s,value,valid,branch\n";
  for (int n = lo; n <= hi; ++n) {
    const int s_lo = o.s.value_or(2);
    const int s_hi = o.s.value_or(n / 3);
    for (int s = s_lo; s <= s_hi; ++s) {
      const bool ar = o.family == "ar3";
      const FormulaResult r = ar ? anti_ramsey_3(n, s) : turan_3(n, s);
      out << n << ',' << s << ',' << r.value << ',' << to_string(r.valid) << ','
          << (ar ? branch_ar3(n, s) : branch_turan3(n, s)) << '\n';
    }
  }
  return kOk;
}

UniformHypergraph random_hypergraph(std::mt19937_64& rng, int n, int k) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = unit(rng);
  std::vector<Edge> edges;
  for_each_subset(prefix_set(n), k, [&](Edge e) {
    if (unit(rng) < p) edges.push_back(e);
  });
  return UniformHypergraph(n, k, std::move(edges));
}

int cmd_properties(const Options& o, std::ostream& out) {
  if (o.cases < 1) throw UsageError("--cases must be positive");
  if (o.n_max < 4 || o.n_max > 9) throw UsageError("--n-max must be in [4, 9]");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick_n(4, o.n_max);
  json failures = {{"edge_count", 0}, {"nu_monotone", 0}, {"idempotent", 0}, {"stable_iff_closed", 0}};
  for (int c = 0; c < o.cases; ++c) {
    const int n = pick_n(rng);
    const UniformHypergraph h = random_hypergraph(rng, n, 3);
    const int nu = matching_number(h);
    std::uniform_int_distribution<int> pick_v(1, n);
    int i = pick_v(rng), j = pick_v(rng);
    while (i == j) j = pick_v(rng);
    if (i > j) std::swap(i, j);
    const UniformHypergraph shifted = shift(h, i, j);
    if (shifted.edge_count() != h.edge_count()) failures["edge_count"] = failures["edge_count"].get<int>() + 1;
    if (matching_number(shifted) > nu) failures["nu_monotone"] = failures["nu_monotone"].get<int>() + 1;
    const UniformHypergraph st = stabilize(h);
    if (!(stabilize(st) == st) || !is_stable(st)) failures["idempotent"] = failures["idempotent"].get<int>() + 1;
    for (const UniformHypergraph* g : {&h, &shifted, &st}) {
      if (is_stable(*g) != is_dominance_closed(*g)) {
        failures["stable_iff_closed"] = failures["stable_iff_closed"].get<int>() + 1;
      }
    }
  }
  bool passed = true;
  for (const auto& [key, v] : failures.items()) passed = passed && v.get<int>() == 0;
  out << json{{"seed", o.seed}, {"cases", o.cases}, {"n_max", o.n_max}, {"failures", failures}, {"passed", passed}}.dump()
      << '\n';
  return passed ? kOk : kVerdictFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Anti-Ramsey and Turan toolkit for matchings in uniform hypergraphs", "armatch"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "worker threads for the exhaustive kernels")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized runs");

  auto* formulas = app.add_subcommand("formulas", "evaluate a closed-form value as JSON");
  formulas->add_option("--name", o.name, "turan3|turan-conj|ar3|ar-large|lb-perfect|s0|alpha")->required();
  formulas->add_option("--n", o.n);
  formulas->add_option("--k", o.k);
  formulas->add_option("--s", o.s);
  formulas->add_option("--tol", o.tol, "bisection width for alpha");

  auto* construct = app.add_subcommand("construct", "write a construction as a hypergraph or colouring file");
  construct->add_option("--kind", o.kind, "D|Hcover|DScript|H1|H2|turan-plus-one");
  construct->add_option("--n", o.n);
  construct->add_option("--k", o.k);
  construct->add_option("--s", o.s);
  construct->add_option("--U", o.U, "comma-separated clique vertices");
  construct->add_option("--W", o.W, "comma-separated cover vertices");
  construct->add_option("--spec", o.spec_path, "construction spec JSON file");
  construct->add_flag("--emit-spec", o.emit_spec, "print the resolved spec instead of the edges");
  construct->add_option("--output,-o", o.output);

  auto* verify = app.add_subcommand("verify", "check a certificate, exit 0 iff it holds");
  verify->add_option("--certificate", o.certificate, "no-rainbow-pm|nu-equals-s|stable|saturated|min-degree")
      ->required();
  verify->add_option("--input", o.input)->required();
  verify->add_option("--s", o.s);

  auto* oracle = app.add_subcommand("oracle", "exhaustive value next to the formula");
  oracle->add_option("--name", o.name, "turan|hilton-milner")->required();
  oracle->add_option("--n", o.n);
  oracle->add_option("--k", o.k);
  oracle->add_option("--s", o.s);
  oracle->add_option("--m", o.m);
  oracle->add_option("--l", o.l);

  auto* table = app.add_subcommand("table", "CSV of formula values over a range of n");
  table->add_option("--family", o.family, "ar3|turan3")->required();
  table->add_option("--n-range", o.n_range, "a..b")->required();
  table->add_option("--s", o.s, "restrict to one s");

  auto* properties = app.add_subcommand("properties", "random shift-property run on 3-graphs");
  properties->add_option("--cases", o.cases);
  properties->add_option("--n-max", o.n_max);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*formulas) return cmd_formulas(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*table) return cmd_table(o, out);
    if (*properties) return cmd_properties(o, out);
  } catch (const InstanceTooLarge& e) {
    err << "instance too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace armatch::cli
