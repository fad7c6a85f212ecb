// roughlat: approximations, rough set lattices and their algebraic checks from the command line.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughlat/algebra.hpp"
#include "roughlat/approximation.hpp"
#include "roughlat/error.hpp"
#include "roughlat/infosys.hpp"
#include "roughlat/io.hpp"

namespace rl = roughlat;
using rl::io::json;

namespace {

enum Exit : int { ok = 0, requirement_failed = 1, bad_input = 2, cap_exceeded = 3, incompatible = 4 };

struct RunConfig {
  std::string e_path;
  std::string t_path;
  std::string covering_path;
  std::vector<std::string> sets;
  bool all = false;
  bool force = false;
  std::size_t cap = rl::Limits{}.universe_cap;
  std::string format;
  std::string output;
  std::vector<std::string> require;
  std::string csv;
  std::vector<std::string> attributes;
  std::optional<std::size_t> k;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    rl::io::write_text_file(cfg.output, text);
  }
}

rl::Limits limits_of(const RunConfig& cfg) {
  rl::Limits l;
  l.universe_cap = cfg.cap;
  return l;
}

struct Inputs {
  rl::Equivalence e;
  rl::Tolerance t;
};

Inputs load_inputs(const RunConfig& cfg) {
  if (cfg.t_path.empty() == cfg.covering_path.empty())
    throw rl::InvalidInput("give exactly one of --t-relation and --covering");
  std::optional<rl::Tolerance> t;
  if (!cfg.t_path.empty()) {
    t.emplace(rl::io::read_relation(cfg.t_path));
  } else {
    t.emplace(rl::induced_tolerance(rl::io::read_covering(cfg.covering_path)));
  }
  if (cfg.e_path.empty()) return {rl::kernel(*t), *t};
  rl::Equivalence e(rl::io::read_relation(cfg.e_path));
  rl::require_same_universe(e, *t);
  return {e, *t};
}

// "1,3", "{1,3}", "∅", "" or, for one-character labels, "13".
rl::Subset parse_set(const rl::Universe& u, std::string text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  if (text.empty() || text == "∅") return {};
  if (text == "U" && !u.find("U")) return u.full();
  rl::Subset out;
  if (text.find(',') == std::string::npos && !u.find(text)) {
    for (char c : text) out.insert(u.index_of(std::string(1, c)));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw rl::InvalidInput("empty label in set '" + text + "'");
    out.insert(u.index_of(item.substr(b, e - b + 1)));
  }
  return out;
}

// Returns false (after printing the report) when T is not E-compatible and --force is absent.
bool check_compatibility(const RunConfig& cfg, const Inputs& in) {
  const rl::CompatibilityReport report = rl::is_compatible(in.e, in.t);
  if (report.compatible || cfg.force) return true;
  std::cerr << "T is not E-compatible (use --force to compute anyway)\n"
            << rl::io::compatibility_to_json(in.e.universe(), report).dump(2) << "\n";
  return false;
}

int cmd_approx(const RunConfig& cfg) {
  const Inputs in = load_inputs(cfg);
  if (!check_compatibility(cfg, in)) return incompatible;
  const rl::Universe& u = in.e.universe();
  std::vector<rl::Subset> sets;
  if (cfg.all) {
    rl::require_enumerable(u.size(), limits_of(cfg));
    sets = rl::io::all_subsets_canonical(u.size());
  }
  for (const auto& s : cfg.sets) sets.push_back(parse_set(u, s));
  if (sets.empty()) throw rl::InvalidInput("give --set or --all");
  const auto rows = rl::io::approximation_rows(in.e, in.t, std::move(sets));
  if (cfg.format == "json") {
    emit(cfg, rl::io::approx_rows_to_json(u, rows).dump(2) + "\n");
  } else if (cfg.format == "table" || cfg.format.empty()) {
    emit(cfg, rl::io::render_approx_table(u, rows));
  } else {
    throw rl::InvalidInput("approx supports --format table or json");
  }
  return ok;
}

int cmd_lattice(const RunConfig& cfg) {
  const Inputs in = load_inputs(cfg);
  if (!check_compatibility(cfg, in)) return incompatible;
  const rl::Universe& u = in.e.universe();
  const rl::AnalyzedPairs a = rl::analyze(in.e, in.t, limits_of(cfg));
  if (cfg.format == "json") {
    emit(cfg, rl::io::lattice_to_json(u, a.order, &a.report).dump(2) + "\n");
  } else if (cfg.format == "dot" || cfg.format.empty()) {
    emit(cfg, rl::io::lattice_to_dot(u, a.order, &a.report));
  } else if (cfg.format == "table") {
    std::string text;
    for (const auto& p : a.order.elements()) text += rl::io::render_pair(u, p) + "\n";
    emit(cfg, text + "\n" + rl::io::render_algebra_table(u, a.order, a.report));
  } else {
    throw rl::InvalidInput("unknown --format " + cfg.format);
  }
  return ok;
}

const std::map<std::string, const rl::Verdict rl::AlgebraReport::*>& verdict_names() {
  static const std::map<std::string, const rl::Verdict rl::AlgebraReport::*> names = {
      {"lattice", &rl::AlgebraReport::is_lattice},
      {"distributive", &rl::AlgebraReport::is_distributive},
      {"completely-distributive", &rl::AlgebraReport::completely_distributive},
      {"complete-sublattice", &rl::AlgebraReport::is_complete_sublattice},
      {"csub", &rl::AlgebraReport::csub_holds},
      {"csub-circ", &rl::AlgebraReport::csub_circ_holds},
      {"pseudocomplemented", &rl::AlgebraReport::pseudocomplements_exist},
      {"regular", &rl::AlgebraReport::is_regular_double_p},
      {"stone", &rl::AlgebraReport::is_stone},
      {"double-stone", &rl::AlgebraReport::is_double_stone},
      {"heyting", &rl::AlgebraReport::is_heyting},
      {"self-dual", &rl::AlgebraReport::is_self_dual},
  };
  return names;
}

// "name" must hold; "no-name" must fail.
bool requirement_met(const rl::AlgebraReport& r, const std::string& req) {
  const bool negated = req.rfind("no-", 0) == 0;
  const std::string name = negated ? req.substr(3) : req;
  if (name == "compatible") return r.compatibility.compatible != negated;
  const auto& names = verdict_names();
  const auto it = names.find(name);
  if (it == names.end()) throw rl::InvalidInput("unknown property '" + name + "'");
  const rl::Verdict& v = r.*(it->second);
  return negated ? v.fails() : v.holds();
}

int cmd_verify(const RunConfig& cfg) {
  const Inputs in = load_inputs(cfg);
  const rl::Universe& u = in.e.universe();
  const rl::AnalyzedPairs a = rl::analyze(in.e, in.t, limits_of(cfg));
  for (const auto& req : cfg.require) requirement_met(a.report, req);  // validates names before output
  if (cfg.format == "json" || cfg.format.empty()) {
    emit(cfg, rl::io::algebra_report_to_json(u, a.order, a.report).dump(2) + "\n");
  } else if (cfg.format == "table") {
    emit(cfg, rl::io::render_algebra_table(u, a.order, a.report));
  } else {
    throw rl::InvalidInput("verify supports --format json or table");
  }
  int code = ok;
  for (const auto& req : cfg.require)
    if (!requirement_met(a.report, req)) {
      std::cerr << "requirement not met: " << req << "\n";
      code = requirement_failed;
    }
  return code;
}

int cmd_infosys(const RunConfig& cfg) {
  const rl::InformationSystem s = rl::load_csv(cfg.csv);
  std::vector<std::string> names = cfg.attributes;
  if (names.empty())
    for (const auto& a : s.attributes()) names.push_back(a.name);
  const std::vector<std::size_t> b = rl::resolve_attributes(s, names);
  const bool all_numeric = std::all_of(b.begin(), b.end(), [&](std::size_t i) {
    return s.attributes()[i].kind == rl::AttributeKind::numeric;
  });

  const rl::Equivalence e = rl::ind(s, b);
  std::vector<std::pair<std::string, rl::Tolerance>> relations;
  relations.emplace_back("ind", rl::Tolerance(e));
  relations.emplace_back("wind", rl::wind(s, b));
  if (all_numeric) relations.emplace_back("sim", rl::sim(s, b));
  if (cfg.k) relations.emplace_back("graded", rl::graded_tol(s, b, *cfg.k));

  const std::filesystem::path dir = cfg.output.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.output);
  std::filesystem::create_directories(dir);
  json report = json::object();
  std::string text;
  for (const auto& [name, t] : relations) {
    const auto path = dir / (name + ".json");
    rl::io::write_relation(path, t.relation());
    const bool compatible = rl::is_compatible(e, t).compatible;
    report[name] = {{"file", path.string()}, {"compatible_with_ind", compatible}};
    text += name + " compatible with ind: " + (compatible ? "true" : "false") + "  (" + path.string() + ")\n";
  }
  if (!all_numeric) text += "sim skipped: B contains symbolic attributes\n";
  std::cout << (cfg.format == "json" ? report.dump(2) + "\n" : text);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough set approximations and lattices for an equivalence E and a tolerance T"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto relation_options = [&](CLI::App* sub) {
    sub->add_option("--e-relation", cfg.e_path, "equivalence E as a relation file (default: ker T)")
        ->check(CLI::ExistingFile);
    sub->add_option("--t-relation", cfg.t_path, "tolerance T as a relation file")->check(CLI::ExistingFile);
    sub->add_option("--covering", cfg.covering_path, "covering inducing T")->check(CLI::ExistingFile);
    sub->add_option("--cap", cfg.cap, "largest universe for 2^|U| enumeration")->check(CLI::Range(1, 62));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };

  auto* approx = app.add_subcommand("approx", "lower E- and upper T-approximations of sets");
  relation_options(approx);
  approx->add_option("--set", cfg.sets, "set X, e.g. 1,3 or {1,3}; repeatable");
  approx->add_flag("--all", cfg.all, "every subset of U");
  approx->add_flag("--force", cfg.force, "compute even when T is not E-compatible");
  approx->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));

  auto* lattice = app.add_subcommand("lattice", "the ordered set of approximation pairs with its Hasse diagram");
  relation_options(lattice);
  lattice->add_flag("--force", cfg.force, "compute even when T is not E-compatible");
  lattice->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json", "table"}));

  auto* verify = app.add_subcommand("verify", "run the structural checks; exit 0 iff every --require holds");
  relation_options(verify);
  verify->add_option("--require", cfg.require, "property that must hold (prefix no- for must fail)");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "table"}));

  auto* infosys = app.add_subcommand("infosys", "build ind/wind/sim/graded relations from a CSV table");
  infosys->add_option("--csv", cfg.csv, "information system")->required()->check(CLI::ExistingFile);
  infosys->add_option("--attributes", cfg.attributes, "attribute subset B (default: all)")->delimiter(',');
  infosys->add_option("--k", cfg.k, "agreement count for the graded tolerance")->check(CLI::PositiveNumber);
  infosys->add_option("--output", cfg.output, "directory for the relation files (default: .)");
  infosys->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*approx) return cmd_approx(cfg);
    if (*lattice) return cmd_lattice(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_infosys(cfg);
  } catch (const rl::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const rl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const rl::IncompatibleError& e) {
    std::cerr << e.what() << "\n";
    return incompatible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
}
