#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughlat/relation.hpp"

namespace roughlat {

/// Exact fixed-point decimal with six fractional digits.
class Decimal {
 public:
  static constexpr int kFractionDigits = 6;
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Decimal() = default;
  /// Accepts [+-]digits[.digits] with at most six fractional digits.
  static std::optional<Decimal> parse(std::string_view text);
  static constexpr Decimal from_scaled(std::int64_t scaled) { return Decimal(scaled); }

  constexpr std::int64_t scaled() const { return scaled_; }
  std::string to_string() const;

  /// |a - b| as a decimal, computed without overflow for parsed values.
  friend Decimal distance(Decimal a, Decimal b);
  friend constexpr auto operator<=>(Decimal, Decimal) = default;

 private:
  explicit constexpr Decimal(std::int64_t scaled) : scaled_(scaled) {}
  std::int64_t scaled_ = 0;
};

enum class AttributeKind { symbolic, numeric };

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::symbolic;
  /// ε_a ≥ 0, only for numeric attributes.
  Decimal threshold;
};

/// Pawlak information system with a total value table.
class InformationSystem {
 public:
  /// values[object][attribute] as text; numeric cells are parsed and validated.
  InformationSystem(UniversePtr universe, std::vector<Attribute> attributes,
                    std::vector<std::vector<std::string>> values);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::span<const Attribute> attributes() const { return attributes_; }
  std::size_t attribute_index(std::string_view name) const;
  const std::string& text(std::size_t object, std::size_t attribute) const { return text_[object][attribute]; }

  /// a(x) = a(y): decimal equality for numeric attributes, exact trimmed-string equality otherwise.
  bool agree(std::size_t attribute, std::size_t x, std::size_t y) const;
  /// |a(x) − a(y)| ≤ ε_a; numeric attributes only.
  bool similar(std::size_t attribute, std::size_t x, std::size_t y) const;

 private:
  UniversePtr universe_;
  std::vector<Attribute> attributes_;
  std::vector<std::vector<std::string>> text_;
  std::vector<std::vector<Decimal>> numbers_;
};

/// Attribute selection by name; resolves against a system.
std::vector<std::size_t> resolve_attributes(const InformationSystem& s, std::span<const std::string> names);

/// ind(B) = { (x,y) | a(x) = a(y) for all a ∈ B }
Equivalence ind(const InformationSystem& s, std::span<const std::size_t> attributes);
/// wind(B) = { (x,y) | a(x) = a(y) for some a ∈ B }
Tolerance wind(const InformationSystem& s, std::span<const std::size_t> attributes);
/// sim(B) = { (x,y) | |a(x) − a(y)| ≤ ε_a for all a ∈ B }
Tolerance sim(const InformationSystem& s, std::span<const std::size_t> attributes);
/// x, y agree on at least k attributes of B.
Tolerance graded_tol(const InformationSystem& s, std::span<const std::size_t> attributes, std::size_t k);

/// Parses the CSV layout: header (object column, attribute names), an optional
/// threshold row whose first cell is empty or "epsilon" (blank cell = symbolic),
/// then one row per object.
InformationSystem parse_csv(std::string_view text);
InformationSystem load_csv(const std::filesystem::path& path);

}  // namespace roughlat
