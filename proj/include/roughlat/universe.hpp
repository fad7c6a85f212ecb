#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "roughlat/subset.hpp"

namespace roughlat {

/// Ordered finite set of labeled objects. Label order is fixed at creation and
/// drives every canonical ordering downstream.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  /// Labels "1", ..., "n".
  static std::shared_ptr<const Universe> numbered(std::size_t n);
  static std::shared_ptr<const Universe> make(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InvalidInput for an unknown label.
  std::size_t index_of(std::string_view label) const;

  Subset full() const { return Subset::prefix(size()); }
  Subset complement(Subset x) const { return full() - x; }
  bool contains(Subset x) const { return x.subset_of(full()); }

  Subset subset(std::span<const std::string> labels) const;
  Subset subset(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(Subset x) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

}  // namespace roughlat
