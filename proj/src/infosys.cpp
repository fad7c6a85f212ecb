#include "roughlat/infosys.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "roughlat/error.hpp"

namespace roughlat {

// --- Decimal ------------------------------------------------------------------

std::optional<Decimal> Decimal::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t whole = 0;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > kLimit / kScale) return std::nullopt;
    ++pos;
    ++digits;
  }
  std::int64_t fraction = 0;
  int fraction_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (++fraction_digits > kFractionDigits) return std::nullopt;
      fraction = fraction * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
    }
  }
  if (digits == 0 || pos != text.size()) return std::nullopt;
  for (int i = fraction_digits; i < kFractionDigits; ++i) fraction *= 10;
  std::int64_t scaled = whole * kScale + fraction;
  return Decimal(negative ? -scaled : scaled);
}

std::string Decimal::to_string() const {
  std::int64_t magnitude = scaled_ < 0 ? -scaled_ : scaled_;
  std::string frac = std::to_string(magnitude % kScale);
  frac.insert(0, kFractionDigits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (scaled_ < 0 ? "-" : "") + std::to_string(magnitude / kScale);
  if (!frac.empty()) out += "." + frac;
  return out;
}

Decimal distance(Decimal a, Decimal b) {
  // Parsed magnitudes are below max/4, so the difference cannot overflow.
  std::int64_t d = a.scaled_ - b.scaled_;
  return Decimal(d < 0 ? -d : d);
}

// --- InformationSystem -----------------------------------------------------------

InformationSystem::InformationSystem(UniversePtr universe, std::vector<Attribute> attributes,
                                     std::vector<std::vector<std::string>> values)
    : universe_(std::move(universe)), attributes_(std::move(attributes)), text_(std::move(values)) {
  if (text_.size() != universe_->size()) throw InvalidInput("value table has a row count different from the universe");
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (attributes_[a].name == attributes_[b].name)
        throw InvalidInput("duplicate attribute '" + attributes_[a].name + "'");
    if (attributes_[a].kind == AttributeKind::numeric && attributes_[a].threshold < Decimal{})
      throw InvalidInput("negative threshold for attribute '" + attributes_[a].name + "'");
  }
  numbers_.assign(text_.size(), std::vector<Decimal>(attributes_.size()));
  for (std::size_t x = 0; x < text_.size(); ++x) {
    if (text_[x].size() != attributes_.size())
      throw InvalidInput("object '" + universe_->label(x) + "' does not have one value per attribute");
    for (std::size_t a = 0; a < attributes_.size(); ++a) {
      if (attributes_[a].kind != AttributeKind::numeric) continue;
      auto d = Decimal::parse(text_[x][a]);
      if (!d)
        throw InvalidInput("non-numeric value '" + text_[x][a] + "' for numeric attribute '" + attributes_[a].name +
                           "' of object '" + universe_->label(x) + "'");
      numbers_[x][a] = *d;
    }
  }
}

std::size_t InformationSystem::attribute_index(std::string_view name) const {
  for (std::size_t a = 0; a < attributes_.size(); ++a)
    if (attributes_[a].name == name) return a;
  throw InvalidInput("unknown attribute '" + std::string(name) + "'");
}

bool InformationSystem::agree(std::size_t attribute, std::size_t x, std::size_t y) const {
  if (attributes_.at(attribute).kind == AttributeKind::numeric) return numbers_[x][attribute] == numbers_[y][attribute];
  return text_[x][attribute] == text_[y][attribute];
}

bool InformationSystem::similar(std::size_t attribute, std::size_t x, std::size_t y) const {
  const Attribute& a = attributes_.at(attribute);
  if (a.kind != AttributeKind::numeric) throw InvalidInput("attribute '" + a.name + "' is symbolic");
  return distance(numbers_[x][attribute], numbers_[y][attribute]) <= a.threshold;
}

std::vector<std::size_t> resolve_attributes(const InformationSystem& s, std::span<const std::string> names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    std::size_t a = s.attribute_index(n);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

namespace {

void require_nonempty(std::span<const std::size_t> attributes) {
  if (attributes.empty()) throw InvalidInput("attribute set B must be nonempty");
}

template <class Pred>
Relation relation_where(const InformationSystem& s, Pred pred) {
  const std::size_t n = s.universe().size();
  std::vector<Subset> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (pred(x, y)) rows[x].insert(y);
  return Relation(s.universe_ptr(), std::move(rows));
}

}  // namespace

Equivalence ind(const InformationSystem& s, std::span<const std::size_t> attributes) {
  require_nonempty(attributes);
  return Equivalence(relation_where(s, [&](std::size_t x, std::size_t y) {
    return std::all_of(attributes.begin(), attributes.end(), [&](std::size_t a) { return s.agree(a, x, y); });
  }));
}

Tolerance wind(const InformationSystem& s, std::span<const std::size_t> attributes) {
  require_nonempty(attributes);
  return Tolerance(relation_where(s, [&](std::size_t x, std::size_t y) {
    return std::any_of(attributes.begin(), attributes.end(), [&](std::size_t a) { return s.agree(a, x, y); });
  }));
}

Tolerance sim(const InformationSystem& s, std::span<const std::size_t> attributes) {
  require_nonempty(attributes);
  for (std::size_t a : attributes)
    if (s.attributes()[a].kind != AttributeKind::numeric)
      throw InvalidInput("sim(B) needs numeric attributes; '" + s.attributes()[a].name + "' is symbolic");
  return Tolerance(relation_where(s, [&](std::size_t x, std::size_t y) {
    return std::all_of(attributes.begin(), attributes.end(), [&](std::size_t a) { return s.similar(a, x, y); });
  }));
}

Tolerance graded_tol(const InformationSystem& s, std::span<const std::size_t> attributes, std::size_t k) {
  require_nonempty(attributes);
  if (k == 0 || k > attributes.size())
    throw InvalidInput("k must satisfy 0 < k <= |B| = " + std::to_string(attributes.size()));
  return Tolerance(relation_where(s, [&](std::size_t x, std::size_t y) {
    auto agreeing = std::count_if(attributes.begin(), attributes.end(), [&](std::size_t a) { return s.agree(a, x, y); });
    return static_cast<std::size_t>(agreeing) >= k;
  }));
}

// --- CSV ------------------------------------------------------------------------

namespace {

struct Cell {
  std::string text;
  std::size_t column;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// RFC 4180 style: comma separated, fields may be double-quoted, "" escapes a quote
// inside a quoted field, quoted fields may span lines.
std::vector<std::vector<Cell>> split_csv(std::string_view text) {
  std::vector<std::vector<Cell>> rows;
  std::vector<Cell> row;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  std::size_t line = 1;
  std::size_t column = 1;
  auto end_field = [&] {
    row.push_back({trim(field), column});
    field.clear();
    was_quoted = false;
    ++column;
  };
  auto end_row = [&] {
    end_field();
    bool blank = row.size() == 1 && row[0].text.empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
    column = 1;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"') {
      if (!trim(field).empty()) throw ParseError("quote inside an unquoted field", line, column);
      field.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
      ++line;
    } else {
      if (was_quoted && c != ' ' && c != '\t' && c != '\r')
        throw ParseError("characters after a closing quote", line, column);
      if (!was_quoted) field += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line, column);
  if (!field.empty() || !row.empty()) end_row();
  return rows;
}

bool is_threshold_row(const std::vector<Cell>& row) {
  std::string first = row.empty() ? std::string{} : row[0].text;
  std::transform(first.begin(), first.end(), first.begin(), [](unsigned char c) { return std::tolower(c); });
  return first.empty() || first == "epsilon";
}

}  // namespace

InformationSystem parse_csv(std::string_view text) {
  auto rows = split_csv(text);
  if (rows.empty()) throw ParseError("empty file: a header row is required", 1, 1);
  const auto& header = rows[0];
  const std::size_t width = header.size();
  if (width < 2) throw ParseError("header needs an object column and at least one attribute", 1, 1);

  std::vector<Attribute> attributes;
  for (std::size_t c = 1; c < width; ++c) {
    if (header[c].text.empty()) throw ParseError("empty attribute name", 1, c + 1);
    for (const auto& a : attributes)
      if (a.name == header[c].text) throw ParseError("duplicate attribute '" + header[c].text + "'", 1, c + 1);
    attributes.push_back({header[c].text, AttributeKind::symbolic, {}});
  }

  std::size_t first_object = 1;
  if (rows.size() > 1 && is_threshold_row(rows[1])) {
    const auto& eps = rows[1];
    if (eps.size() != width)
      throw ParseError("threshold row has " + std::to_string(eps.size()) + " cells, expected " + std::to_string(width), 2,
                       std::min(eps.size(), width) + 1);
    for (std::size_t c = 1; c < width; ++c) {
      if (eps[c].text.empty()) continue;
      auto d = Decimal::parse(eps[c].text);
      if (!d || *d < Decimal{}) throw ParseError("invalid threshold '" + eps[c].text + "'", 2, c + 1);
      attributes[c - 1].kind = AttributeKind::numeric;
      attributes[c - 1].threshold = *d;
    }
    first_object = 2;
  }

  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> values;
  for (std::size_t r = first_object; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::size_t line = r + 1;
    if (row.size() != width)
      throw ParseError("row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(width), line,
                       std::min(row.size(), width) + 1);
    if (row[0].text.empty()) throw ParseError("missing object label", line, 1);
    if (std::find(labels.begin(), labels.end(), row[0].text) != labels.end())
      throw ParseError("duplicate object label '" + row[0].text + "'", line, 1);
    std::vector<std::string> cells;
    for (std::size_t c = 1; c < width; ++c) {
      if (row[c].text.empty())
        throw ParseError("missing value for attribute '" + attributes[c - 1].name + "'", line, c + 1);
      if (attributes[c - 1].kind == AttributeKind::numeric && !Decimal::parse(row[c].text))
        throw ParseError("non-numeric value '" + row[c].text + "' under numeric attribute '" + attributes[c - 1].name + "'",
                         line, c + 1);
      cells.push_back(row[c].text);
    }
    labels.push_back(row[0].text);
    values.push_back(std::move(cells));
  }
  if (labels.size() > kMaxUniverse)
    throw ParseError("more than " + std::to_string(kMaxUniverse) + " objects", first_object + kMaxUniverse + 1, 1);
  return InformationSystem(Universe::make(std::move(labels)), std::move(attributes), std::move(values));
}

InformationSystem load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

}  // namespace roughlat
