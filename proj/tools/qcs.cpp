#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcs/constants.hpp"
#include "qcs/cyclic_bounds.hpp"
#include "qcs/digraph.hpp"
#include "qcs/error.hpp"
#include "qcs/funceq.hpp"
#include "qcs/gp.hpp"
#include "qcs/graph_io.hpp"
#include "qcs/maxsum.hpp"
#include "qcs/minsum.hpp"
#include "qcs/sums.hpp"

namespace {

using nlohmann::ordered_json;
using qcs::Digraph;

constexpr const char* kCiteMinsum =
    "min-sums of strongly connected digraphs attain their minimum at an ordered-partition "
    "critical point";
constexpr const char* kCiteMaxsum =
    "infimum of a graphic max-sum equals the sum of girths of the final strong components";
constexpr const char* kCiteGp =
    "monomial-quotient sums on strongly connected digraphs have a unique normalized minimizer";
constexpr const char* kCiteExtremal =
    "min-sum of a strongly connected digraph on n vertices exceeds e ln(n+1-ln(n+1))";
constexpr const char* kCiteKs =
    "Kalachev-Sadov: ln ln(r-ln r) < min over 0<x<=r-1 of (ln x + ln(r-x)/x)";
constexpr const char* kCiteCh =
    "Caccetta-Haggkvist conjecture: min out-degree k on n vertices forces girth <= ceil(n/k)";
constexpr const char* kCiteMavlo =
    "a/(b+cx) + b/(c+ax) + c/(a+bx) >= 3/(1+x), sharpening Mavlo's 3x/(1+x^3)";
constexpr const char* kCiteF =
    "F(x) = e ln x - A + e||b+ln x||^2/(2 ln x) + O(1/(ln x)^2), A ~ 1.704656, b ~ 0.69739";
constexpr const char* kCiteAmgm = "f(x) = min_n n x^(1/n) = e ln x + e||ln x||^2/(2 ln x) + O(1/(ln x)^2)";
constexpr const char* kCiteShallit = "Shallit: min g_n = 3n - C + o(1), C ~ 1.3694514";
constexpr const char* kCiteAnstar = "uniform minimum of variable-window Diananda sums: A_{n,*} = F(n)";

// 15 significant digits.
double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

ordered_json num(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return round15(v);
}

ordered_json nums(std::span<const double> v) {
  ordered_json out = ordered_json::array();
  for (double x : v) out.push_back(num(x));
  return out;
}

ordered_json ids(const Digraph& g, std::span<const std::size_t> vs) {
  ordered_json out = ordered_json::array();
  for (std::size_t v : vs) out.push_back(g.id(v));
  return out;
}

ordered_json by_vertex(const Digraph& g, std::span<const double> x) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < x.size() && v < g.size(); ++v) out[g.id(v)] = num(x[v]);
  return out;
}

ordered_json result(const std::string& command, ordered_json input) {
  ordered_json r;
  r["command"] = command;
  r["input"] = std::move(input);
  r["value"] = nullptr;
  r["attained"] = nullptr;
  r["certificate"] = ordered_json::object();
  r["citations"] = ordered_json::array();
  return r;
}

struct GraphArgs {
  std::string path;
  std::string format = "auto";
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("-i,--input", args.path, "Graph file, '-' for stdin")->required();
  cmd->add_option("--format", args.format, "auto, edges or json")
      ->check(CLI::IsMember({"auto", "edges", "json"}));
}

qcs::ParsedGraph load_graph(const GraphArgs& args) {
  std::string text;
  if (args.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(args.path);
    if (!in) throw qcs::ValidationError("cannot open " + args.path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  qcs::GraphFormat fmt = qcs::detect_format(text);
  if (args.format == "edges") fmt = qcs::GraphFormat::edge_list;
  if (args.format == "json") fmt = qcs::GraphFormat::json;
  return qcs::parse_graph(text, fmt);
}

ordered_json graph_input(const GraphArgs& args, const qcs::ParsedGraph& pg) {
  return {{"file", args.path},
          {"vertices", pg.graph.size()},
          {"edges", pg.graph.edge_count()},
          {"weighted", pg.weighted}};
}

void write_csv(const std::string& path, const qcs::FuncEqTable& table) {
  std::ofstream out(path);
  if (!out) throw qcs::ValidationError("cannot write " + path);
  table.write_csv(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and minimize quasi-cyclic sums"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  app.add_option("--seed", seed, "Seed for every randomized path")->capture_default_str();
  app.fallthrough();
  app.add_option("--threads", threads, "Worker thread cap")->check(CLI::PositiveNumber);

  GraphArgs girth_args, comp_args, minsum_args, maxsum_args, gp_args;
  auto* girth_cmd = app.add_subcommand("girth", "Shortest directed cycle");
  add_graph_options(girth_cmd, girth_args);

  auto* comp_cmd = app.add_subcommand("components", "Strong components and condensation");
  add_graph_options(comp_cmd, comp_args);

  auto* minsum_cmd = app.add_subcommand("minsum", "Exact minimum of the graphic min-sum");
  add_graph_options(minsum_cmd, minsum_args);
  bool with_oracle = false;
  minsum_cmd->add_flag("--oracle", with_oracle, "Also run the numeric oracle");

  auto* maxsum_cmd = app.add_subcommand("maxsum", "Infimum of the graphic max-sum");
  add_graph_options(maxsum_cmd, maxsum_args);
  double epsilon = 1e-3;
  maxsum_cmd->add_option("--epsilon", epsilon, "Witness slack")->capture_default_str();

  auto* game_cmd = app.add_subcommand("game", "Max-sum number game bound");
  std::size_t people = 40, outdegree = 12;
  double game_threshold = 4.9;
  game_cmd->add_option("--people", people)->capture_default_str();
  game_cmd->add_option("--outdegree", outdegree)->capture_default_str();
  game_cmd->add_option("--threshold", game_threshold)->capture_default_str();

  auto* gp_cmd = app.add_subcommand("gp", "Minimize a weighted monomial-quotient sum");
  add_graph_options(gp_cmd, gp_args);
  std::string pin_text;
  gp_cmd->add_option("--pin", pin_text, "VERTEX=VALUE normalization");

  auto* shapiro_cmd = app.add_subcommand("shapiro", "Shapiro-Diananda cyclic p-sum minimum");
  std::size_t sh_n = 0, sh_k = 0;
  std::string sh_p = "1";
  shapiro_cmd->add_option("--n", sh_n)->required();
  shapiro_cmd->add_option("--k", sh_k)->required();
  shapiro_cmd->add_option("--p", sh_p, "Power order: -inf, 0, inf or a real")->capture_default_str();

  auto* mavlo_cmd = app.add_subcommand("mavlo", "Random check of the sharp Mavlo bound");
  std::size_t samples = 100000;
  mavlo_cmd->add_option("--samples", samples)->capture_default_str();

  auto* funceq_cmd = app.add_subcommand("funceq", "Functional equations and their minimizers");
  std::string which;
  double fx = 0.0, tol = 1e-6;
  std::size_t fn = 0;
  std::string csv_path;
  std::optional<double> threshold;
  funceq_cmd->add_option("which", which, "F, f, shallit or anstar")
      ->required()
      ->check(CLI::IsMember({"F", "f", "shallit", "anstar"}));
  funceq_cmd->add_option("--x", fx);
  funceq_cmd->add_option("--n", fn);
  funceq_cmd->add_option("--tol", tol)->capture_default_str();
  funceq_cmd->add_option("--csv", csv_path, "Write the F table as CSV");
  funceq_cmd->add_option("--threshold", threshold, "Report whether the value can be below this");

  auto* extremal_cmd = app.add_subcommand("extremal", "Extremal min-sum over n vertices");
  std::size_t ex_n = 40;
  double ex_threshold = 9.8;
  extremal_cmd->add_option("--n", ex_n)->capture_default_str();
  extremal_cmd->add_option("--threshold", ex_threshold)->capture_default_str();

  auto* ks_cmd = app.add_subcommand("ks", "Gap in the logarithmic inequality");
  double ks_r = 2.0;
  ks_cmd->add_option("--r", ks_r)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    ordered_json out;
    if (girth_cmd->parsed()) {
      const auto pg = load_graph(girth_args);
      const Digraph& g = pg.graph.base();
      out = result("girth", graph_input(girth_args, pg));
      if (const auto cycle = qcs::shortest_cycle(g)) {
        out["value"] = cycle->size();
        out["certificate"]["cycle"] = ids(g, *cycle);
      } else {
        out["value"] = "acyclic";
      }
    } else if (comp_cmd->parsed()) {
      const auto pg = load_graph(comp_args);
      const Digraph& g = pg.graph.base();
      const auto d = qcs::scc(g);
      out = result("components", graph_input(comp_args, pg));
      out["value"] = d.components.size();
      ordered_json comps = ordered_json::array();
      for (std::size_t c = 0; c < d.components.size(); ++c) {
        comps.push_back({{"vertices", ids(g, d.components[c])}, {"final", bool(d.final[c])}});
      }
      ordered_json cond = ordered_json::array();
      for (const auto& e : d.condensation.edges()) cond.push_back({e.from, e.to});
      out["certificate"]["components"] = comps;
      out["certificate"]["condensation"] = cond;
    } else if (minsum_cmd->parsed()) {
      const auto pg = load_graph(minsum_args);
      const Digraph& g = pg.graph.base();
      qcs::MinSumOptions opts;
      opts.threads = threads;
      const auto r = qcs::minsum_exact(g, opts);
      out = result("minsum", graph_input(minsum_args, pg));
      out["value"] = num(r.report.value);
      out["attained"] = r.report.attained;
      out["certificate"]["status"] = qcs::to_string(r.report.status);
      if (r.certificate) {
        ordered_json blocks = ordered_json::array();
        for (const auto& b : r.certificate->partition.blocks) blocks.push_back(ids(g, b));
        out["certificate"]["blocks"] = blocks;
        out["certificate"]["block_values"] = nums(r.certificate->block_values);
        out["certificate"]["x"] = by_vertex(g, r.report.minimizer);
      }
      out["certificate"]["candidates"] = r.candidates;
      out["certificate"]["accepted"] = r.accepted;
      if (with_oracle) {
        qcs::OracleOptions o;
        o.seed = seed;
        out["certificate"]["oracle"] = num(qcs::minsum_oracle(g, o));
      }
      out["citations"].push_back(kCiteMinsum);
      if (qcs::is_strongly_connected(g)) {
        out["certificate"]["lower_bound"] = num(qcs::extremal_lower_bound(g.size()));
        out["citations"].push_back(kCiteExtremal);
      }
    } else if (maxsum_cmd->parsed()) {
      const auto pg = load_graph(maxsum_args);
      const Digraph& g = pg.graph.base();
      const auto r = qcs::maxsum_infimum(g);
      out = result("maxsum", graph_input(maxsum_args, pg));
      out["value"] = r.value;
      out["attained"] = r.attainment == qcs::MaxSumAttainment::attained;
      ordered_json finals = ordered_json::array();
      for (std::size_t c = 0; c < r.final_components.size(); ++c) {
        finals.push_back({{"vertices", ids(g, r.final_components[c])}, {"girth", r.girths[c]}});
      }
      out["certificate"]["final_components"] = finals;
      out["certificate"]["epsilon"] = num(epsilon);
      const auto w = qcs::maxsum_witness(g, epsilon);
      out["certificate"]["witness"] = by_vertex(g, w);
      out["certificate"]["witness_value"] = num(qcs::max_sum(g, w));
      out["citations"].push_back(kCiteMaxsum);
    } else if (game_cmd->parsed()) {
      const auto b = qcs::game_bound(people, outdegree);
      out = result("game", {{"people", people}, {"outdegree", outdegree},
                            {"threshold", num(game_threshold)}});
      out["value"] = b.value;
      out["certificate"]["conditional"] = b.conditional;
      out["certificate"]["answer"] = static_cast<double>(b.value) < game_threshold ? "yes" : "no";
      out["citations"].push_back(kCiteMaxsum);
      out["citations"].push_back(kCiteCh);
    } else if (gp_cmd->parsed()) {
      const auto pg = load_graph(gp_args);
      const Digraph& g = pg.graph.base();
      std::optional<qcs::Pin> pin;
      if (!pin_text.empty()) {
        const auto eq = pin_text.find('=');
        if (eq == std::string::npos) throw qcs::ValidationError("--pin expects VERTEX=VALUE");
        const auto v = g.index_of(pin_text.substr(0, eq));
        if (!v) throw qcs::ValidationError("unknown pin vertex " + pin_text.substr(0, eq));
        pin = qcs::Pin{*v, std::stod(pin_text.substr(eq + 1))};
      }
      const auto spec = qcs::build_quotient_sum(pg.graph, pin);
      const auto r = qcs::minimize(spec);
      out = result("gp", graph_input(gp_args, pg));
      out["value"] = num(r.value);
      out["attained"] = r.attained;
      out["certificate"]["status"] = qcs::to_string(r.status);
      out["certificate"]["minimizer"] = by_vertex(g, r.minimizer);
      if (!r.recession_direction.empty()) {
        out["certificate"]["recession_direction"] = by_vertex(g, r.recession_direction);
      }
      out["certificate"]["iterations"] = r.iterations;
      out["citations"].push_back(kCiteGp);
    } else if (shapiro_cmd->parsed()) {
      const auto p = qcs::parse_power_order(sh_p);
      qcs::DianandaOptions opts;
      opts.seed = seed;
      const auto r = qcs::minimize_diananda(sh_n, sh_k, p, opts);
      out = result("shapiro", {{"n", sh_n}, {"k", sh_k}, {"p", sh_p}});
      out["value"] = num(r.report.value);
      out["attained"] = r.report.attained;
      out["certificate"]["kind"] = qcs::to_string(r.kind);
      out["certificate"]["x"] = nums(r.report.minimizer);
      if (!r.citation.empty()) out["citations"].push_back(r.citation);
    } else if (mavlo_cmd->parsed()) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> logu(-6.0, 6.0);
      double worst_margin = std::numeric_limits<double>::infinity();
      double worst_residual = 0.0;
      std::size_t violations = 0;
      for (std::size_t s = 0; s < samples; ++s) {
        const double a = std::exp(logu(rng)), b = std::exp(logu(rng)), c = std::exp(logu(rng));
        const double x = std::exp(logu(rng));
        const double margin = qcs::mavlo_lhs(a, b, c, x) - qcs::mavlo_bounds(x).sharp;
        worst_margin = std::min(worst_margin, margin);
        if (margin < -1e-12) ++violations;
        worst_residual = std::max(worst_residual, qcs::georgiev_identity_residual(a, b, c, x));
      }
      out = result("mavlo", {{"samples", samples}, {"seed", seed}});
      out["value"] = num(worst_margin);
      out["certificate"]["violations"] = violations;
      out["certificate"]["max_identity_residual"] = num(worst_residual);
      out["citations"].push_back(kCiteMavlo);
    } else if (funceq_cmd->parsed()) {
      ordered_json input = {{"which", which}};
      if (which == "F") {
        if (!(fx >= 0.0)) throw qcs::ValidationError("--x must be nonnegative");
        input["x"] = num(fx);
        input["tol"] = num(tol);
        out = result("funceq", input);
        const auto table = qcs::build_F_table(std::max(fx, 1.0), tol);
        const double v = table(fx);
        out["value"] = num(v);
        out["attained"] = true;
        out["certificate"]["argmin"] = num(table.argmin(fx));
        out["certificate"]["per_decade"] = table.per_decade();
        out["certificate"]["refinement_change"] = num(table.refinement_change());
        if (fx > 0.0) {
          const auto s = qcs::staircase_F(fx);
          out["certificate"]["chain"] = nums(s.chain);
          out["certificate"]["chain_value"] = num(s.value);
        }
        if (threshold) out["certificate"]["answer"] = v < *threshold ? "yes" : "no";
        if (!csv_path.empty()) write_csv(csv_path, table);
        out["citations"].push_back(kCiteF);
      } else if (which == "f") {
        if (!(fx > 0.0)) throw qcs::ValidationError("--x must be positive");
        input["x"] = num(fx);
        out = result("funceq", input);
        const auto r = qcs::amgm_f(fx);
        out["value"] = num(r.value);
        out["attained"] = true;
        out["certificate"]["n"] = r.n;
        out["citations"].push_back(kCiteAmgm);
      } else if (which == "shallit") {
        if (fn < 1) throw qcs::ValidationError("--n must be positive");
        input["n"] = fn;
        out = result("funceq", input);
        const auto r = qcs::shallit_min(fn);
        out["value"] = num(r.report.value);
        out["attained"] = r.report.attained;
        out["certificate"]["C_n"] = num(r.c_n);
        out["certificate"]["x"] =
            nums(std::span<const double>(r.report.minimizer).subspan(1));
        out["citations"].push_back(kCiteShallit);
      } else {
        if (fn < 1) throw qcs::ValidationError("--n must be positive");
        input["n"] = fn;
        input["tol"] = num(tol);
        out = result("funceq", input);
        const auto table = qcs::build_F_table(static_cast<double>(fn), tol);
        const double v = qcs::a_n_star(fn, table);
        out["value"] = num(v);
        out["attained"] = true;
        if (threshold) out["certificate"]["answer"] = v < *threshold ? "yes" : "no";
        if (!csv_path.empty()) write_csv(csv_path, table);
        out["citations"].push_back(kCiteAnstar);
        out["citations"].push_back(kCiteF);
      }
    } else if (extremal_cmd->parsed()) {
      const auto r = qcs::extremal_minsum_value(ex_n);
      const double bound = qcs::extremal_lower_bound(ex_n);
      out = result("extremal", {{"n", ex_n}, {"threshold", num(ex_threshold)}});
      out["value"] = num(r.value);
      out["attained"] = true;
      out["certificate"]["k"] = r.k;
      out["certificate"]["lower_bound"] = num(bound);
      out["certificate"]["answer"] =
          r.value < ex_threshold ? "yes" : (bound >= ex_threshold ? "no" : "unknown");
      out["citations"].push_back(kCiteExtremal);
    } else if (ks_cmd->parsed()) {
      const auto r = qcs::ks_gap(ks_r);
      out = result("ks", {{"r", num(ks_r)}});
      out["value"] = num(r.gap);
      out["attained"] = true;
      out["certificate"]["argmin"] = num(r.argmin);
      out["certificate"]["minimum"] = num(r.minimum);
      out["citations"].push_back(kCiteKs);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  } catch (const qcs::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
