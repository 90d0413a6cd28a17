// rectcolor: generate, color, pack and verify rectangle families.
//
// Exit codes: 0 success, 1 invalid input or failed verification, 2 usage
// error, 3 budget exhausted or solver failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rectcolor/cliques.hpp"
#include "rectcolor/coloring.hpp"
#include "rectcolor/errors.hpp"
#include "rectcolor/hierarchy.hpp"
#include "rectcolor/io.hpp"
#include "rectcolor/mwisr.hpp"
#include "rectcolor/oracles.hpp"

using namespace rectcolor;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Coloring run_algorithm(const Instance& inst, const std::string& algo) {
  const auto all = inst.all_indices();
  if (algo == "hier") return hierarchical_coloring(inst);
  if (algo == "agb") return agb_coloring(inst, all);
  if (algo == "corner") return corner_coloring(inst, all);
  if (algo == "sparse") return degeneracy_greedy(inst, all);
  if (algo == "warmup-cc") return warmup_color_cc(inst, all);
  return warmup_color_vertical(inst, all);
}

std::string pair_text(const Instance& inst, std::pair<int, int> p) {
  return "'" + inst.rect(p.first).id + "' and '" + inst.rect(p.second).id + "'";
}

struct Options {
  std::string kind = "uniform", weights = "unit", input, output, svg, algo, method = "approx";
  std::string coloring_file, set_file;
  int n = 0;
  std::uint64_t seed = 0;
  long grid = 10000;
  double feas_tol = kDefaultFeasTol, opt_tol = kDefaultOptTol;
};

int cmd_gen(const Options& o) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(o.kind);
  spec.n = o.n;
  spec.seed = o.seed;
  spec.grid = o.grid;
  spec.weights = o.weights == "random" ? WeightMode::UniformRandom : WeightMode::Unit;
  save_instance(generate(spec), o.output);
  return kOk;
}

int cmd_omega(const Options& o) {
  std::cout << clique_number(load_instance(o.input)) << "\n";
  return kOk;
}

int cmd_color(const Options& o) {
  const Instance inst = perturb(load_instance(o.input));
  const Coloring col = run_algorithm(inst, o.algo);
  json colors = json::object();
  for (int i = 0; i < inst.size(); ++i) colors[inst.rect(i).id] = col.color[i];
  json doc = {{"algorithm", o.algo},
              {"num_colors", col.num_colors},
              {"omega", clique_number(inst)},
              {"colors", colors}};
  write_text(o.output, doc.dump(2) + "\n");
  if (!o.svg.empty()) write_text(o.svg, render_svg(inst, &col));
  return kOk;
}

int cmd_mwisr(const Options& o) {
  const Instance inst = load_instance(o.input, {.drop_zero_weights = true});
  json doc;
  std::vector<int> chosen;
  if (o.method == "exact") {
    const MwisSolution s = exact_mwis(inst);
    chosen = s.chosen;
    doc = {{"w_star", to_string(s.weight)},
           {"m", 0},
           {"num_colors", 0},
           {"weight", to_string(s.weight)},
           {"certified_lower_bound", to_string(s.weight)}};
  } else {
    const ApproxResult r = approximate_mwis(inst, o.feas_tol, o.opt_tol);
    chosen = r.chosen;
    doc = {{"w_star", to_string(r.w_star)},
           {"m", r.m},
           {"num_colors", r.multiset_colors},
           {"weight", to_string(r.weight)},
           {"certified_lower_bound", to_string(r.certified_lower_bound)}};
  }
  json ids = json::array();
  for (int i : chosen) ids.push_back(inst.rect(i).id);
  doc["chosen"] = ids;
  write_text(o.output, doc.dump(2) + "\n");
  if (!o.svg.empty()) write_text(o.svg, render_svg(inst, nullptr, chosen));
  return kOk;
}

int cmd_verify(const Options& o) {
  const Instance inst = load_instance(o.input);
  Violation bad;
  if (!o.coloring_file.empty()) {
    const json doc = read_json(o.coloring_file);
    const json& colors = doc.contains("colors") ? doc["colors"] : doc;
    if (!colors.is_object()) throw ParseError(o.coloring_file + ": expected an object of colors");
    Coloring col;
    col.color.assign(inst.size(), -1);
    for (const auto& [id, value] : colors.items()) {
      auto idx = inst.index_of(id);
      if (!idx) throw UnknownId("unknown rectangle id '" + id + "'");
      if (!value.is_number_integer() || value.get<long long>() < 0)
        throw ParseError(o.coloring_file + ": color of '" + id + "' must be a non-negative integer");
      col.color[*idx] = value.get<int>();
    }
    bad = validate_coloring(inst, col);
  } else {
    const json doc = read_json(o.set_file);
    const json& list = doc.is_object() && doc.contains("chosen") ? doc["chosen"] : doc;
    if (!list.is_array()) throw ParseError(o.set_file + ": expected an id array");
    std::vector<std::string> ids;
    for (const json& v : list) {
      if (!v.is_string()) throw ParseError(o.set_file + ": ids must be strings");
      ids.push_back(v.get<std::string>());
    }
    bad = validate_independent(inst, std::span<const std::string>(ids));
  }
  if (bad) {
    std::cerr << "violation: " << pair_text(inst, *bad) << " intersect\n";
    return kInvalid;
  }
  std::cout << "ok\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloring and packing of axis-parallel rectangles"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"uniform", "squares", "concentric", "vertical", "crossgrid"}));
  gen->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", o.seed)->required();
  gen->add_option("--grid", o.grid)->check(CLI::Range(4L, 1L << 40));
  gen->add_option("--weights", o.weights)->check(CLI::IsMember({"unit", "random"}));
  gen->add_option("-o,--output", o.output)->required();

  auto* omega = app.add_subcommand("omega", "Print the clique number");
  omega->add_option("-i,--input", o.input)->required();

  auto* color = app.add_subcommand("color", "Color an instance");
  color->add_option("-i,--input", o.input)->required();
  color->add_option("--algo", o.algo)
      ->required()
      ->check(CLI::IsMember({"hier", "agb", "corner", "sparse", "warmup-cc", "warmup-vertical"}));
  color->add_option("-o,--output", o.output)->required();
  color->add_option("--svg", o.svg);

  auto* mwisr = app.add_subcommand("mwisr", "Approximate or solve maximum weight independent set");
  mwisr->add_option("-i,--input", o.input)->required();
  mwisr->add_option("--method", o.method)->check(CLI::IsMember({"approx", "exact"}));
  mwisr->add_option("--feas-tol", o.feas_tol)->check(CLI::Range(0.0, 0.5));
  mwisr->add_option("--opt-tol", o.opt_tol)->check(CLI::Range(0.0, 0.5));
  mwisr->add_option("-o,--output", o.output)->required();
  mwisr->add_option("--svg", o.svg);

  auto* verify = app.add_subcommand("verify", "Check a coloring or an independent set");
  verify->add_option("-i,--input", o.input)->required();
  auto* by_color = verify->add_option("--coloring", o.coloring_file);
  auto* by_set = verify->add_option("--independent-set", o.set_file);
  by_color->excludes(by_set);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (*verify && o.coloring_file.empty() && o.set_file.empty()) {
    std::cerr << "verify needs --coloring or --independent-set\n";
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*omega) return cmd_omega(o);
    if (*color) return cmd_color(o);
    if (*mwisr) return cmd_mwisr(o);
    return cmd_verify(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const SolverFailure& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalBoundExceeded& e) {
    std::cerr << "internal bound exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
