#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "roughlat/compatibility.hpp"
#include "roughlat/limits.hpp"
#include "roughlat/relation.hpp"

namespace roughlat {

/// (lower, upper) approximation pair, ordered coordinatewise.
struct RoughPair {
  Subset lower;
  Subset upper;

  bool leq(const RoughPair& o) const { return lower.subset_of(o.lower) && upper.subset_of(o.upper); }

  friend bool operator==(const RoughPair&, const RoughPair&) = default;
  /// Canonical order (lower mask, then upper mask). It is a linear extension of leq.
  friend auto operator<=>(const RoughPair&, const RoughPair&) = default;
};

/// Finite set of rough pairs under coordinatewise inclusion, with materialized
/// up-sets, down-sets and Hasse covers. Elements are deduplicated and stored in
/// canonical order, so index order is a linear extension of the order.
class OrderedSet {
 public:
  using Bits = boost::dynamic_bitset<>;

  explicit OrderedSet(std::vector<RoughPair> elements, const Limits& limits = {});

  std::size_t size() const { return elements_.size(); }
  const RoughPair& element(std::size_t i) const { return elements_.at(i); }
  std::span<const RoughPair> elements() const { return elements_; }
  std::optional<std::size_t> index_of(const RoughPair& p) const;
  bool contains(const RoughPair& p) const { return index_of(p).has_value(); }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  /// { b | a ≤ b }, including a.
  const Bits& up_set(std::size_t a) const { return up_[a]; }
  /// { b | b ≤ a }, including a.
  const Bits& down_set(std::size_t a) const { return down_[a]; }
  /// Hasse edges (a, b) with a ⋖ b, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Minimal elements of the common upper bounds of the family (all minimal elements when empty).
  std::vector<std::size_t> minimal_upper_bounds(std::span<const std::size_t> family) const;
  /// Maximal elements of the common lower bounds of the family.
  std::vector<std::size_t> maximal_lower_bounds(std::span<const std::size_t> family) const;
  std::vector<std::size_t> minimal_upper_bounds(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> maximal_lower_bounds(std::size_t a, std::size_t b) const;

  /// Least upper bound computed from the order alone; absent when it does not exist.
  std::optional<std::size_t> least_upper_bound(std::span<const std::size_t> family) const;
  std::optional<std::size_t> greatest_lower_bound(std::span<const std::size_t> family) const;

 private:
  Bits common_upper_bounds(std::span<const std::size_t> family) const;
  Bits common_lower_bounds(std::span<const std::size_t> family) const;

  std::vector<RoughPair> elements_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// RS(E,T) = { (X_E, X^T) | X ⊆ U } for an E-compatible T, with its provenance.
class RoughLattice {
 public:
  RoughLattice(CompatiblePair source, OrderedSet order) : source_(std::move(source)), order_(std::move(order)) {}

  const CompatiblePair& source() const { return source_; }
  const Equivalence& equivalence() const { return source_.equivalence(); }
  const Tolerance& tolerance() const { return source_.tolerance(); }
  const OrderedSet& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

 private:
  CompatiblePair source_;
  OrderedSet order_;
};

/// All distinct (X_{lower_by}, X^{upper_by}) over the 2^|U| subsets, in canonical order.
/// Parallel over subsets. No compatibility requirement.
std::vector<RoughPair> approximation_pairs(const Relation& lower_by, const Relation& upper_by, const Limits& limits = {});

/// (X_E, X^T)
RoughPair rough_pair(const CompatiblePair& et, Subset x);

RoughLattice enumerate_rs(const CompatiblePair& et, const Limits& limits = {});
/// Convenience: checks compatibility first, throwing IncompatibleError.
RoughLattice enumerate_rs(const Equivalence& e, const Tolerance& t, const Limits& limits = {});
/// RS(E) = RS(E,E)
RoughLattice enumerate_rs_e(const Equivalence& e, const Limits& limits = {});
/// RS(T) = { (X_T, X^T) }; in general not a lattice.
OrderedSet enumerate_rs_t(const Tolerance& t, const Limits& limits = {});

/// Pagliani's test for (A,B) ∈ RS(E): A ⊆ B and Σ_E ⊆ A ∪ B^c.
/// Throws InvalidInput unless both components are E-definable.
bool pagliani_member(const Equivalence& e, const RoughPair& p);

/// Σ_E(H) = ((⋂ (X^T)_T) ∖ ⋂ X_E) ∩ Σ_E, with empty intersections equal to U.
Subset sigma_h(const CompatiblePair& et, std::span<const Subset> family);

/// (⋃ X_E, ⋃ X^T)
RoughPair rs_join(const CompatiblePair& et, std::span<const Subset> family);
/// (⋂ X_E, ((⋂ (X^T)_T) ∖ Σ_E(H))^T)
RoughPair rs_meet(const CompatiblePair& et, std::span<const Subset> family);

}  // namespace roughlat
