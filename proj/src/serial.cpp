#include "roughlat/serial.hpp"

#include <algorithm>
#include <cstdint>

namespace roughlat::serial {

namespace {

template <typename F>
std::vector<Subset> image_family(const Relation& r, const Limits& limits, F approx) {
  const std::size_t n = r.size();
  require_enumerable(n, limits);
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(approx(r, Subset::from_bits(m)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Subset> upper_family(const Tolerance& t, const Limits& limits) {
  return image_family(t.relation(), limits, [](const Relation& r, Subset x) { return upper(r, x); });
}

std::vector<Subset> lower_family(const Tolerance& t, const Limits& limits) {
  return image_family(t.relation(), limits, [](const Relation& r, Subset x) { return lower(r, x); });
}

std::vector<RoughPair> approximation_pairs(const Relation& lower_by, const Relation& upper_by, const Limits& limits) {
  require_same_universe(lower_by, upper_by);
  const std::size_t n = lower_by.size();
  require_enumerable(n, limits);
  std::vector<RoughPair> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Subset x = Subset::from_bits(m);
    out.push_back({lower(lower_by, x), upper(upper_by, x)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const OrderedSet& order) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !order.leq(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && order.leq(a, c) && order.leq(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

std::optional<std::array<std::size_t, 3>> distributivity_counterexample(const LatticeOps& lattice) {
  const std::size_t n = lattice.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!distributive_at(lattice, x, y, z)) return std::array<std::size_t, 3>{x, y, z};
  return std::nullopt;
}

}  // namespace roughlat::serial
