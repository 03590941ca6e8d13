// Command-line front end: counts, entropy, dimension, dynamics, explicit products and the regression table.
//
// Exit codes: 0 ok, 2 config or parse error, 3 budget exceeded (partial output still written), 4 suite mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "mahavier/mahavier.hpp"

namespace {

using namespace mahavier;
using nlohmann::json;

constexpr int kOk = 0, kConfig = 2, kBudget = 3, kMismatch = 4;

struct RunConfig {
  std::string fixture;
  std::string relation_path;
  std::string ga_reading = "figure";
  int cells = 4;
  int dyadic_min = 2;
  int dyadic_max = 16;
  std::optional<int> depth;
  std::size_t budget = 100'000;
  std::string mode = "partition";
  std::string eps;
  std::string method = "auto";
  std::string out;
  std::optional<std::uint64_t> seed;
  int k = 2;
  std::string start;
};

struct Loaded {
  std::string name;
  Relation relation;
};

Loaded load(const RunConfig& c) {
  if (c.fixture.empty() == c.relation_path.empty()) throw ParseError("give exactly one of --fixture or --relation");
  if (!c.fixture.empty()) {
    Fixture f = make_fixture(c.fixture, c.ga_reading == "paper" ? GaReading::Paper : GaReading::Figure);
    return {f.params.empty() ? f.name : f.name + ":" + f.params, f.relation};
  }
  RelationDoc d = load_relation_doc(c.relation_path);
  return {d.name, d.relation};
}

GridSpec grid_for(const RunConfig& c, int n) {
  if (c.mode == "partition") {
    if (!c.eps.empty()) throw ParseError("--eps applies only to --mode overlap");
    return GridSpec::partition(n);
  }
  return c.eps.empty() ? GridSpec::overlap(n) : GridSpec::overlap(n, parse_scalar(c.eps));
}

CountOptions count_options(const RunConfig& c) {
  CountOptions o;
  o.budget = c.budget;
  return o;
}

std::vector<int> dyadic_ns(const RunConfig& c) {
  if (c.dyadic_min > c.dyadic_max) throw ParseError("--dyadic-min exceeds --dyadic-max");
  return dyadic_range(c.dyadic_min, c.dyadic_max);
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + c.out + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_count(const RunConfig& c) {
  Loaded l = load(c);
  CountSeries s = count_series(l.relation, grid_for(c, c.cells), c.depth.value_or(8), count_options(c));
  emit(c, s.to_csv());
  return s.budget_hit() ? kBudget : kOk;
}

json grid_json(const GridEstimate& g) {
  return {{"n", g.n}, {"fekete", g.fekete}, {"slope", g.slope}, {"residual", g.residual}, {"exact", g.exact},
          {"budget", g.budget}, {"empty", g.empty}};
}

int cmd_entropy(const RunConfig& c) {
  Loaded l = load(c);
  std::string method = c.method;
  if (method == "auto") method = l.relation.is_finite() ? "transfer" : "slope";
  EntropyEstimate e;
  if (method == "transfer") {
    if (!l.relation.is_finite()) throw ParseError("--method transfer needs a finite relation");
    e = entropy_transfer(l.relation);
  } else {
    int m = c.depth.value_or(16);
    std::vector<CountSeries> fam;
    for (int n : dyadic_ns(c)) fam.push_back(count_series(l.relation, grid_for(c, n), m, count_options(c)));
    e = entropy_limit(std::move(fam), method == "fekete" ? EntropyMethod::FeketeInf : EntropyMethod::Slope);
  }
  json j;
  j["relation"] = l.name;
  j["method"] = to_string(e.method);
  j["value_nats"] = e.value;
  j["value_bits"] = e.bits();
  j["divergent"] = e.divergent;
  j["empty_product"] = e.empty_product;
  j["converged"] = e.converged;
  if (e.method == EntropyMethod::Transfer) j["spectral_radius"] = e.spectral_radius;
  j["per_grid"] = json::array();
  bool budget = false;
  json flags = json::array();
  for (const auto& g : e.per_grid) {
    j["per_grid"].push_back(grid_json(g));
    flags.push_back(g.budget);
    budget = budget || g.budget;
  }
  j["doubling_growth"] = e.doubling_growth;
  j["m_max"] = e.m_max;
  j["budget_flags"] = flags;
  emit(c, dump(j));
  return budget ? kBudget : kOk;
}

int cmd_dimension(const RunConfig& c) {
  Loaded l = load(c);
  int m = c.depth.value_or(2);
  if (c.mode != "partition") throw ParseError("dimension uses partition grids");
  RunConfig d = c;
  if (d.dyadic_max == 16 && d.dyadic_min == 2) d.dyadic_max = 64;
  DimensionEstimate e = box_dimension(l.relation, m, dyadic_ns(d), count_options(c), tol::kDimResidualCap);
  json j;
  j["relation"] = l.name;
  j["m"] = m;
  j["dimension"] = e.value ? json(*e.value) : json(nullptr);
  j["slope"] = e.slope;
  j["residual"] = e.residual;
  j["counts"] = json::array();
  for (const auto& [n, count] : e.counts) j["counts"].push_back({{"n", n}, {"count", count.get_str()}});
  j["budget"] = e.budget;
  emit(c, dump(j));
  return e.budget ? kBudget : kOk;
}

int cmd_dynamics(const RunConfig& c) {
  Loaded l = load(c);
  if (!l.relation.is_finite()) throw ParseError("dynamics needs a finite relation");
  DynamicsReport r = analyze(l.relation);
  WanderingPartition w = wandering_partition(l.relation);
  TransitionGraph tg(l.relation);
  json j;
  j["relation"] = l.name;
  j["nodes"] = r.nodes;
  j["components"] = r.components;
  j["strongly_connected"] = r.strongly_connected;
  json pc = json::object();
  for (const auto& [p, n] : r.periodic_counts) pc[std::to_string(p)] = n.get_str();
  j["periodic_counts"] = pc;
  auto labels = [&](const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(to_literal(tg.node(v)));
    return a;
  };
  j["recurrent"] = labels(r.recurrent_nodes);
  j["wandering"] = labels(w.wandering);
  j["dense_periodic"] = r.dense_periodic;
  j["devaney"] = r.devaney;
  j["criterion"] = "transition digraph; finite analogue of the continuum shift";
  if (tg.size() > 0) {
    Point start = tg.node(0);
    if (!c.start.empty()) {
      start.clear();
      std::istringstream in(c.start);
      for (std::string x; std::getline(in, x, ',');) start.push_back(parse_scalar(x));
    }
    auto policy = c.seed ? OrbitPolicy::RandomSeeded : OrbitPolicy::Lexicographic;
    OrbitStream s = orbit_stream(l.relation, start, policy, c.depth.value_or(12), c.seed.value_or(0));
    json coords = json::array();
    for (const auto& x : s.coords) coords.push_back(to_literal(x));
    j["orbit"] = {{"start", to_literal(start)},
                  {"policy", c.seed ? "random-seeded" : "lexicographic"},
                  {"seed", c.seed.value_or(0)},
                  {"coords", coords},
                  {"dead_end", s.dead_end}};
  }
  j["edge_list"] = tg.edge_list();
  emit(c, dump(j));
  return kOk;
}

int cmd_product(const RunConfig& c) {
  Loaded l = load(c);
  if (!l.relation.is_finite()) throw ParseError("product needs a finite relation");
  try {
    emit(c, star_power(l.relation, c.k, c.budget * 50).to_csv());
  } catch (const std::length_error& e) {
    std::cerr << "product: " << e.what() << "\n";
    return kBudget;
  }
  return kOk;
}

int cmd_export(const RunConfig& c) {
  Loaded l = load(c);
  emit(c, dump(relation_to_json(l.relation, l.name)));
  return kOk;
}

int cmd_suite(const RunConfig& c) {
  SuiteOptions o;
  o.count = count_options(c);
  auto rows = run_paper_suite(o);
  std::ostringstream os;
  int failed = 0;
  char line[512];
  std::snprintf(line, sizeof line, "%-26s %-28s %-24s %14s  %s\n", "fixture", "method", "expected", "measured", "result");
  os << line;
  for (const auto& r : rows) {
    failed += !r.pass;
    std::snprintf(line, sizeof line, "%-26s %-28s %-24s %14.9f  %s (%s)\n", r.fixture.c_str(), r.method.c_str(),
                  r.expected.c_str(), r.measured, r.pass ? "PASS" : "FAIL", r.detail.c_str());
    os << line;
  }
  os << rows.size() - failed << "/" << rows.size() << " fixtures match\n";
  emit(c, os.str());
  return failed ? kMismatch : kOk;
}

int cmd_list(const RunConfig& c) {
  std::ostringstream os;
  for (const auto& name : fixture_names()) {
    Fixture f = make_fixture(name);
    os << name << "\t" << (f.params.empty() ? "-" : f.params) << "\t" << to_string(f.expect.kind) << "\t"
       << f.expect.label << "\t" << f.summary << "\n";
  }
  emit(c, os.str());
  return kOk;
}

void relation_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--fixture", c.fixture, "built-in fixture, name or name:params");
  sub->add_option("--relation", c.relation_path, "relation config file (JSON)");
  sub->add_option("--ga-reading", c.ga_reading, "reading of the G_a family")->check(CLI::IsMember({"figure", "paper"}));
  sub->add_option("--out", c.out, "output path (default stdout)");
}

void grid_flags(CLI::App* sub, RunConfig& c) {
  sub->add_option("--cells", c.cells, "grid cells n")->check(CLI::Range(2, 1'000'000));
  sub->add_option("--dyadic-min", c.dyadic_min, "smallest n of the dyadic family")->check(CLI::Range(2, 1'000'000));
  sub->add_option("--dyadic-max", c.dyadic_max, "largest n of the dyadic family")->check(CLI::Range(2, 1'000'000));
  sub->add_option("--depth", c.depth, "chain depth m_max")->check(CLI::Range(1, 100'000));
  sub->add_option("--budget", c.budget, "frontier states per depth")
      ->check(CLI::Range(std::size_t{1000}, std::numeric_limits<std::size_t>::max()));
  sub->add_option("--mode", c.mode, "grid mode")->check(CLI::IsMember({"partition", "overlap"}));
  sub->add_option("--eps", c.eps, "overlap half-width as a rational literal");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy of closed relations via Mahavier products and grid-cover box counting"};
  app.require_subcommand(1);
  RunConfig c;

  auto* count = app.add_subcommand("count", "CSV box counts per depth");
  relation_flags(count, c), grid_flags(count, c);
  auto* entropy = app.add_subcommand("entropy", "JSON entropy estimate");
  relation_flags(entropy, c), grid_flags(entropy, c);
  entropy->add_option("--method", c.method)->check(CLI::IsMember({"auto", "transfer", "fekete", "slope"}));
  auto* dimension = app.add_subcommand("dimension", "JSON box-counting dimension of the m-fold product");
  relation_flags(dimension, c), grid_flags(dimension, c);
  auto* dynamics = app.add_subcommand("dynamics", "JSON vertex-shift report with edge list");
  relation_flags(dynamics, c);
  dynamics->add_option("--depth", c.depth, "orbit stream length")->check(CLI::Range(1, 100'000));
  dynamics->add_option("--start", c.start, "orbit start point, comma-separated (default: first point)");
  dynamics->add_option("--seed", c.seed, "seed for a random orbit stream (lexicographic without it)");
  auto* product = app.add_subcommand("product", "CSV of the k-fold Mahavier product");
  relation_flags(product, c);
  product->add_option("--k", c.k, "number of factors")->check(CLI::Range(1, 64));
  product->add_option("--budget", c.budget)->check(CLI::Range(std::size_t{1000}, std::numeric_limits<std::size_t>::max()));
  auto* exporter = app.add_subcommand("export", "JSON config of a relation");
  relation_flags(exporter, c);
  auto* suite = app.add_subcommand("paper-suite", "check every catalog fixture against its closed form");
  suite->add_option("--out", c.out);
  suite->add_option("--budget", c.budget)->check(CLI::Range(std::size_t{1000}, std::numeric_limits<std::size_t>::max()));
  auto* list = app.add_subcommand("list-fixtures", "catalog of built-in relations");
  list->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*count) return cmd_count(c);
    if (*entropy) return cmd_entropy(c);
    if (*dimension) return cmd_dimension(c);
    if (*dynamics) return cmd_dynamics(c);
    if (*product) return cmd_product(c);
    if (*exporter) return cmd_export(c);
    if (*suite) return cmd_suite(c);
    if (*list) return cmd_list(c);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
