#include "roughlat/universe.hpp"

#include <cstdio>
#include <cstdlib>

#include "roughlat/error.hpp"

namespace roughlat {

void internal_fault(const std::string& what) {
  std::fprintf(stderr, "roughlat internal fault: %s\n", what.c_str());
  std::abort();
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxUniverse) {
    throw CapExceeded("universe has " + std::to_string(labels_.size()) + " elements; at most " +
                       std::to_string(kMaxUniverse) + " are supported");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidInput("empty element label at position " + std::to_string(i));
    if (!index_.emplace(labels_[i], i).second) throw InvalidInput("duplicate element label '" + labels_[i] + "'");
  }
}

std::shared_ptr<const Universe> Universe::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> labels) {
  return std::make_shared<const Universe>(std::move(labels));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InvalidInput("unknown element label '" + std::string(label) + "'");
}

Subset Universe::subset(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

Subset Universe::subset(std::initializer_list<std::string_view> labels) const {
  Subset s;
  for (auto l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> Universe::labels_of(Subset x) const {
  std::vector<std::string> out;
  for (std::size_t i : x) out.push_back(labels_.at(i));
  return out;
}

}  // namespace roughlat
