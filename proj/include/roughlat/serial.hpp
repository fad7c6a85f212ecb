#pragma once

// Single-threaded reference versions of the OpenMP kernels. They are kept simple
// and are what the parallel kernels are tested and benchmarked against.

#include <optional>
#include <vector>

#include "roughlat/algebra.hpp"
#include "roughlat/approximation.hpp"
#include "roughlat/rough_lattice.hpp"

namespace roughlat::serial {

std::vector<Subset> upper_family(const Tolerance& t, const Limits& limits = {});
std::vector<Subset> lower_family(const Tolerance& t, const Limits& limits = {});

std::vector<RoughPair> approximation_pairs(const Relation& lower_by, const Relation& upper_by,
                                           const Limits& limits = {});

/// Hasse edges by direct transitive reduction: a ⋖ b iff a < b and no c with a < c < b.
std::vector<std::pair<std::size_t, std::size_t>> covers(const OrderedSet& order);

std::optional<std::array<std::size_t, 3>> distributivity_counterexample(const LatticeOps& lattice);

}  // namespace roughlat::serial
