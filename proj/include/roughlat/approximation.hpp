#pragma once

#include <vector>

#include "roughlat/limits.hpp"
#include "roughlat/relation.hpp"

namespace roughlat {

/// X_R = { x | R(x) ⊆ X }
Subset lower(const Relation& r, Subset x);
/// X^R = { x | R(x) ∩ X ≠ ∅ }
Subset upper(const Relation& r, Subset x);

/// X is a union of E-classes.
bool is_definable(const Equivalence& e, Subset x);

/// Def(E), all unions of E-classes, in mask order.
std::vector<Subset> definable_family(const Equivalence& e, const Limits& limits = {});

/// ℘(U)^T: the distinct upper approximations, in mask order. Parallel over the 2^|U| subsets.
std::vector<Subset> upper_family(const Tolerance& t, const Limits& limits = {});
/// ℘(U)_T: the distinct lower approximations, in mask order.
std::vector<Subset> lower_family(const Tolerance& t, const Limits& limits = {});

}  // namespace roughlat
