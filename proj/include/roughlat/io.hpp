#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "roughlat/algebra.hpp"
#include "roughlat/compatibility.hpp"
#include "roughlat/relation.hpp"
#include "roughlat/rough_lattice.hpp"

namespace roughlat::io {

using nlohmann::json;

// Relation files: { "universe": [labels], "pairs": [[a, b], ...] }. No closure is implied.
// Covering files: { "universe": [labels], "blocks": [[labels], ...] }.

json subset_to_json(const Universe& u, Subset x);
Subset subset_from_json(const Universe& u, const json& j);

json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j);
json covering_to_json(const Covering& c);
Covering covering_from_json(const json& j);

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse_json(std::string_view text);
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Relation read_relation(const std::filesystem::path& path);
Covering read_covering(const std::filesystem::path& path);
void write_relation(const std::filesystem::path& path, const Relation& r);

/// Compact set notation: "∅", "U" for the full universe, the concatenated labels when
/// every label is one character, "{a,b}" otherwise.
std::string render_set(const Universe& u, Subset x);
/// "(A, B)"
std::string render_pair(const Universe& u, const RoughPair& p);
/// "A|B", used for lattice node names.
std::string pair_label(const Universe& u, const RoughPair& p);

/// Subsets ordered by cardinality, then lexicographically by element index.
bool canonical_less(Subset a, Subset b);
std::vector<Subset> all_subsets_canonical(std::size_t n);

struct ApproxRow {
  Subset x;
  RoughPair pair;
};

/// Rows (X, (X_lower, X^upper)) for the given sets, in canonical order.
std::vector<ApproxRow> approximation_rows(const Relation& lower_by, const Relation& upper_by, std::vector<Subset> sets);
std::string render_approx_table(const Universe& u, const std::vector<ApproxRow>& rows);
json approx_rows_to_json(const Universe& u, const std::vector<ApproxRow>& rows);

json compatibility_to_json(const Universe& u, const CompatibilityReport& r);
json verdict_to_json(const Universe& u, const OrderedSet& order, const Verdict& v);
json algebra_report_to_json(const Universe& u, const OrderedSet& order, const AlgebraReport& r);

/// Elements and Hasse cover edges; the report, when given, is attached under "analysis".
json lattice_to_json(const Universe& u, const OrderedSet& order, const AlgebraReport* report = nullptr);
/// Hasse diagram, bottom-up, nodes named "A|B".
std::string lattice_to_dot(const Universe& u, const OrderedSet& order, const AlgebraReport* report = nullptr);
std::string render_algebra_table(const Universe& u, const OrderedSet& order, const AlgebraReport& r);

}  // namespace roughlat::io
