#include "roughlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "roughlat/approximation.hpp"
#include "roughlat/error.hpp"

namespace roughlat::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing \"") + key + "\" field");
  return j.at(key);
}

UniversePtr universe_from_json(const json& j) {
  const json& labels = member(j, "universe");
  if (!labels.is_array()) throw InvalidInput("\"universe\" must be an array of labels");
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (!l.is_string()) throw InvalidInput("universe labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return Universe::make(std::move(out));
}

std::size_t label_index(const Universe& u, const json& l) {
  if (!l.is_string()) throw InvalidInput("labels must be strings");
  return u.index_of(l.get<std::string>());
}

std::string status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not_applicable";
  }
  internal_fault("unknown status");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

json subset_to_json(const Universe& u, Subset x) {
  json out = json::array();
  for (std::size_t i : x) out.push_back(u.label(i));
  return out;
}

Subset subset_from_json(const Universe& u, const json& j) {
  if (!j.is_array()) throw InvalidInput("a set must be an array of labels");
  Subset out;
  for (const auto& l : j) out.insert(label_index(u, l));
  return out;
}

json relation_to_json(const Relation& r) {
  const Universe& u = r.universe();
  json pairs = json::array();
  for (auto [x, y] : r.pairs()) pairs.push_back({u.label(x), u.label(y)});
  return {{"universe", u.labels()}, {"pairs", std::move(pairs)}};
}

Relation relation_from_json(const json& j) {
  UniversePtr u = universe_from_json(j);
  const json& pairs = member(j, "pairs");
  if (!pairs.is_array()) throw InvalidInput("\"pairs\" must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput("each pair must be a two-element array");
    out.emplace_back(label_index(*u, p[0]), label_index(*u, p[1]));
  }
  return Relation::from_pairs(u, out);
}

json covering_to_json(const Covering& c) {
  json blocks = json::array();
  for (Subset b : c.members()) blocks.push_back(subset_to_json(c.universe(), b));
  return {{"universe", c.universe().labels()}, {"blocks", std::move(blocks)}};
}

Covering covering_from_json(const json& j) {
  UniversePtr u = universe_from_json(j);
  const json& blocks = member(j, "blocks");
  if (!blocks.is_array()) throw InvalidInput("\"blocks\" must be an array");
  std::vector<Subset> members;
  for (const auto& b : blocks) members.push_back(subset_from_json(*u, b));
  return Covering(u, std::move(members));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t row = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++row;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", row, col);
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

Relation read_relation(const std::filesystem::path& path) { return relation_from_json(read_json_file(path)); }
Covering read_covering(const std::filesystem::path& path) { return covering_from_json(read_json_file(path)); }

void write_relation(const std::filesystem::path& path, const Relation& r) {
  write_text_file(path, relation_to_json(r).dump(2) + "\n");
}

std::string render_set(const Universe& u, Subset x) {
  if (x.empty()) return "∅";
  if (x == u.full() && u.size() > 1) return "U";
  const bool compact = std::all_of(u.labels().begin(), u.labels().end(), [](const std::string& l) { return l.size() == 1; });
  std::string out = compact ? "" : "{";
  bool first = true;
  for (std::size_t i : x) {
    if (!compact && !first) out += ',';
    out += u.label(i);
    first = false;
  }
  if (!compact) out += '}';
  return out;
}

std::string render_pair(const Universe& u, const RoughPair& p) {
  return "(" + render_set(u, p.lower) + ", " + render_set(u, p.upper) + ")";
}

std::string pair_label(const Universe& u, const RoughPair& p) {
  return render_set(u, p.lower) + "|" + render_set(u, p.upper);
}

bool canonical_less(Subset a, Subset b) {
  if (a.count() != b.count()) return a.count() < b.count();
  // lowest differing element decides: the set containing it comes first
  const Subset diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  return a.contains(diff.first());
}

std::vector<Subset> all_subsets_canonical(std::size_t n) {
  if (n >= kMaxUniverse) throw CapExceeded("universe too large to list every subset");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(Subset::from_bits(m));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ApproxRow> approximation_rows(const Relation& lower_by, const Relation& upper_by, std::vector<Subset> sets) {
  require_same_universe(lower_by, upper_by);
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ApproxRow> rows;
  for (Subset x : sets) rows.push_back({x, {lower(lower_by, x), upper(upper_by, x)}});
  return rows;
}

std::string render_approx_table(const Universe& u, const std::vector<ApproxRow>& rows) {
  std::vector<std::string> left;
  std::size_t width = 1;
  for (const auto& r : rows) {
    left.push_back(render_set(u, r.x));
    // ∅ is three bytes but one column
    width = std::max(width, r.x.empty() ? std::size_t{1} : left.back().size());
  }
  std::ostringstream out;
  out << "X" << std::string(width - 1, ' ') << "  (X_E, X^T)\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t shown = rows[i].x.empty() ? 1 : left[i].size();
    out << left[i] << std::string(width - shown, ' ') << "  " << render_pair(u, rows[i].pair) << "\n";
  }
  return out.str();
}

json approx_rows_to_json(const Universe& u, const std::vector<ApproxRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"set", subset_to_json(u, r.x)},
                   {"lower", subset_to_json(u, r.pair.lower)},
                   {"upper", subset_to_json(u, r.pair.upper)}});
  return out;
}

json compatibility_to_json(const Universe& u, const CompatibilityReport& r) {
  json out = {{"compatible", r.compatible},
              {"kernel_inclusion", r.kernel_inclusion},
              {"cross_checked", r.cross_checked}};
  if (r.cross_checked) out["blocks_definable"] = r.blocks_definable;
  if (r.witness)
    out["witness"] = {{"x", u.label(r.witness->x)}, {"z", u.label(r.witness->z)}, {"y", u.label(r.witness->y)}};
  return out;
}

json verdict_to_json(const Universe& u, const OrderedSet& order, const Verdict& v) {
  json out = {{"status", status_name(v.status)}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  if (!v.witness.empty()) {
    json w = json::array();
    for (std::size_t i : v.witness) w.push_back(pair_label(u, order.element(i)));
    out["witness"] = std::move(w);
  }
  return out;
}

json algebra_report_to_json(const Universe& u, const OrderedSet& order, const AlgebraReport& r) {
  auto verdict = [&](const Verdict& v) { return verdict_to_json(u, order, v); };
  auto five = [&](const std::optional<std::array<std::size_t, 5>>& w) -> json {
    if (!w) return nullptr;
    json out = json::array();
    for (std::size_t i : *w) out.push_back(pair_label(u, order.element(i)));
    return out;
  };
  json self_dual = {{"status", status_name(r.is_self_dual.status)}};
  if (!r.is_self_dual.detail.empty()) self_dual["detail"] = r.is_self_dual.detail;
  if (r.is_self_dual.holds()) {
    json map = json::object();
    for (std::size_t x = 0; x < r.is_self_dual.witness.size(); ++x)
      map[pair_label(u, order.element(x))] = pair_label(u, order.element(r.is_self_dual.witness[x]));
    self_dual["map"] = std::move(map);
  }
  return {
      {"compatibility", compatibility_to_json(u, r.compatibility)},
      {"element_count", r.element_count},
      {"is_lattice", verdict(r.is_lattice)},
      {"is_distributive", verdict(r.is_distributive)},
      {"n5", five(r.n5)},
      {"m3", five(r.m3)},
      {"completely_distributive", verdict(r.completely_distributive)},
      {"is_complete_sublattice", verdict(r.is_complete_sublattice)},
      {"csub", verdict(r.csub_holds)},
      {"csub_circ", verdict(r.csub_circ_holds)},
      {"pseudocomplements_exist", verdict(r.pseudocomplements_exist)},
      {"is_regular_double_p", verdict(r.is_regular_double_p)},
      {"is_stone", verdict(r.is_stone)},
      {"is_double_stone", verdict(r.is_double_stone)},
      {"is_heyting", verdict(r.is_heyting)},
      {"is_self_dual", std::move(self_dual)},
  };
}

json lattice_to_json(const Universe& u, const OrderedSet& order, const AlgebraReport* report) {
  json elements = json::array();
  for (const RoughPair& p : order.elements())
    elements.push_back(
        {{"label", pair_label(u, p)}, {"lower", subset_to_json(u, p.lower)}, {"upper", subset_to_json(u, p.upper)}});
  json covers = json::array();
  for (auto [a, b] : order.covers()) covers.push_back({pair_label(u, order.element(a)), pair_label(u, order.element(b))});
  json out = {{"universe", u.labels()}, {"elements", std::move(elements)}, {"covers", std::move(covers)}};
  if (report) out["analysis"] = algebra_report_to_json(u, order, *report);
  return out;
}

std::string lattice_to_dot(const Universe& u, const OrderedSet& order, const AlgebraReport* report) {
  std::ostringstream out;
  out << "digraph RS {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  if (report) {
    std::string caption = std::to_string(order.size()) + " elements";
    caption += report->is_lattice.holds() ? ", lattice" : ", not a lattice";
    if (report->is_lattice.holds()) caption += report->is_distributive.holds() ? ", distributive" : ", not distributive";
    if (report->n5) caption += ", N5 present";
    if (report->m3) caption += ", M3 present";
    out << "  label=\"" << dot_escape(caption) << "\";\n";
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    out << "  n" << i << " [label=\"" << dot_escape(pair_label(u, order.element(i))) << "\"];\n";
  for (auto [a, b] : order.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string render_algebra_table(const Universe& u, const OrderedSet& order, const AlgebraReport& r) {
  std::ostringstream out;
  auto line = [&](const char* name, const Verdict& v) {
    out << name << ": ";
    switch (v.status) {
      case Status::holds: out << "yes"; break;
      case Status::fails: out << "no"; break;
      case Status::not_applicable: out << "n/a"; break;
    }
    if (!v.holds() && !v.detail.empty()) out << " (" << v.detail << ")";
    if (v.fails() && !v.witness.empty()) {
      out << " [";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        out << (i ? ", " : "") << render_pair(u, order.element(v.witness[i]));
      out << "]";
    }
    out << "\n";
  };
  out << "compatible: " << (r.compatibility.compatible ? "yes" : "no");
  if (r.compatibility.witness)
    out << " (x=" << u.label(r.compatibility.witness->x) << ", z=" << u.label(r.compatibility.witness->z)
        << ", y=" << u.label(r.compatibility.witness->y) << ")";
  out << "\nelements: " << r.element_count << "\n";
  line("lattice", r.is_lattice);
  line("distributive", r.is_distributive);
  auto five = [&](const char* name, const std::optional<std::array<std::size_t, 5>>& w) {
    if (!w) return;
    out << name << ":";
    for (std::size_t i : *w) out << " " << render_pair(u, order.element(i));
    out << "\n";
  };
  five("N5", r.n5);
  five("M3", r.m3);
  line("completely distributive", r.completely_distributive);
  line("complete sublattice", r.is_complete_sublattice);
  line("CSub", r.csub_holds);
  line("CSub°", r.csub_circ_holds);
  line("pseudocomplemented", r.pseudocomplements_exist);
  line("regular double p-algebra", r.is_regular_double_p);
  line("Stone", r.is_stone);
  line("double Stone", r.is_double_stone);
  line("Heyting", r.is_heyting);
  line("self-dual", r.is_self_dual);
  return out.str();
}

}  // namespace roughlat::io
