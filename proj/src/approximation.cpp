#include "roughlat/approximation.hpp"

#include <algorithm>
#include <cstdint>

#include "roughlat/error.hpp"

namespace roughlat {

void require_enumerable(std::size_t universe_size, const Limits& limits) {
  if (universe_size > limits.universe_cap || universe_size >= 63) {
    throw CapExceeded("universe of " + std::to_string(universe_size) + " elements exceeds the enumeration cap of " +
                      std::to_string(limits.universe_cap));
  }
}

namespace {

void require_member(const Relation& r, Subset x) {
  if (!r.universe().contains(x)) throw InvalidInput("subset refers to elements outside the relation's universe");
}

template <class Op>
std::vector<Subset> image_family(const Tolerance& t, const Limits& limits, Op op) {
  const std::size_t n = t.universe().size();
  require_enumerable(n, limits);
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<Subset> images(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t bits = 0; bits < count; ++bits) {
    images[static_cast<std::size_t>(bits)] = op(t.relation(), Subset::from_bits(static_cast<std::uint64_t>(bits)));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace

Subset lower(const Relation& r, Subset x) {
  require_member(r, x);
  Subset out;
  const auto rows = r.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].subset_of(x)) out.insert(i);
  return out;
}

Subset upper(const Relation& r, Subset x) {
  require_member(r, x);
  Subset out;
  const auto rows = r.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].intersects(x)) out.insert(i);
  return out;
}

bool is_definable(const Equivalence& e, Subset x) {
  require_member(e, x);
  for (std::size_t i : x)
    if (!e.class_of(i).subset_of(x)) return false;
  return true;
}

std::vector<Subset> definable_family(const Equivalence& e, const Limits& limits) {
  const auto classes = e.classes();
  require_enumerable(classes.size(), limits);
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << classes.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << classes.size()); ++pick) {
    Subset s;
    for (std::size_t i : Subset::from_bits(pick)) s |= classes[i];
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> upper_family(const Tolerance& t, const Limits& limits) {
  return image_family(t, limits, [](const Relation& r, Subset x) { return upper(r, x); });
}

std::vector<Subset> lower_family(const Tolerance& t, const Limits& limits) {
  return image_family(t, limits, [](const Relation& r, Subset x) { return lower(r, x); });
}

}  // namespace roughlat
