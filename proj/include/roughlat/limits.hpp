#pragma once

#include <cstddef>

namespace roughlat {

/// Guards for the exponential and polynomial scans. Exceeding a cap throws CapExceeded.
struct Limits {
  /// Largest |U| for which 2^|U| subsets are enumerated.
  std::size_t universe_cap = 20;
  /// Largest ordered set for which order bitsets and covers are materialized.
  std::size_t element_cap = 8192;
  /// Largest lattice for the O(n^3) scans (distributivity, N5/M3, Heyting).
  std::size_t analysis_cap = 512;
};

void require_enumerable(std::size_t universe_size, const Limits& limits);

}  // namespace roughlat
