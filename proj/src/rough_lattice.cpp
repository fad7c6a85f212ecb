#include "roughlat/rough_lattice.hpp"

#include <algorithm>
#include <cstdint>

#include "roughlat/approximation.hpp"
#include "roughlat/error.hpp"

namespace roughlat {

// --- OrderedSet --------------------------------------------------------------

OrderedSet::OrderedSet(std::vector<RoughPair> elements, const Limits& limits) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const std::size_t n = elements_.size();
  if (n > limits.element_cap) {
    throw CapExceeded("ordered set of " + std::to_string(n) + " elements exceeds the element cap of " +
                      std::to_string(limits.element_cap));
  }
  up_.assign(n, Bits(n));
  down_.assign(n, Bits(n));
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ai = 0; ai < count; ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    for (std::size_t b = a; b < n; ++b)
      if (elements_[a].leq(elements_[b])) up_[a].set(b);
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t bi = 0; bi < count; ++bi) {
    const auto b = static_cast<std::size_t>(bi);
    for (std::size_t a = 0; a <= b; ++a)
      if (up_[a].test(b)) down_[b].set(a);
  }

  // Scanning the strict up-set in index order (a linear extension), an element is a
  // cover iff no earlier cover lies below it.
  std::vector<std::vector<std::size_t>> upper_covers(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t ai = 0; ai < count; ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    Bits dominated(n);
    for (auto b = up_[a].find_next(a); b != Bits::npos; b = up_[a].find_next(b)) {
      if (dominated.test(b)) continue;
      upper_covers[a].push_back(b);
      dominated |= up_[b];
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : upper_covers[a]) covers_.emplace_back(a, b);
}

std::optional<std::size_t> OrderedSet::index_of(const RoughPair& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> OrderedSet::bottom() const {
  if (elements_.empty() || !up_.front().all()) return std::nullopt;
  return 0;
}

std::optional<std::size_t> OrderedSet::top() const {
  if (elements_.empty() || !down_.back().all()) return std::nullopt;
  return elements_.size() - 1;
}

OrderedSet::Bits OrderedSet::common_upper_bounds(std::span<const std::size_t> family) const {
  Bits s(size());
  s.set();
  for (std::size_t a : family) s &= up_.at(a);
  return s;
}

OrderedSet::Bits OrderedSet::common_lower_bounds(std::span<const std::size_t> family) const {
  Bits s(size());
  s.set();
  for (std::size_t a : family) s &= down_.at(a);
  return s;
}

std::vector<std::size_t> OrderedSet::minimal_upper_bounds(std::span<const std::size_t> family) const {
  const Bits s = common_upper_bounds(family);
  std::vector<std::size_t> out;
  for (auto u = s.find_first(); u != Bits::npos; u = s.find_next(u))
    if ((down_[u] & s).count() == 1) out.push_back(u);
  return out;
}

std::vector<std::size_t> OrderedSet::maximal_lower_bounds(std::span<const std::size_t> family) const {
  const Bits s = common_lower_bounds(family);
  std::vector<std::size_t> out;
  for (auto l = s.find_first(); l != Bits::npos; l = s.find_next(l))
    if ((up_[l] & s).count() == 1) out.push_back(l);
  return out;
}

std::vector<std::size_t> OrderedSet::minimal_upper_bounds(std::size_t a, std::size_t b) const {
  const std::size_t family[] = {a, b};
  return minimal_upper_bounds(family);
}

std::vector<std::size_t> OrderedSet::maximal_lower_bounds(std::size_t a, std::size_t b) const {
  const std::size_t family[] = {a, b};
  return maximal_lower_bounds(family);
}

std::optional<std::size_t> OrderedSet::least_upper_bound(std::span<const std::size_t> family) const {
  const Bits s = common_upper_bounds(family);
  auto u = s.find_first();
  if (u == Bits::npos || !s.is_subset_of(up_[u])) return std::nullopt;
  return u;
}

std::optional<std::size_t> OrderedSet::greatest_lower_bound(std::span<const std::size_t> family) const {
  const Bits s = common_lower_bounds(family);
  if (s.none()) return std::nullopt;
  std::size_t l = 0;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) l = i;
  if (!s.is_subset_of(down_[l])) return std::nullopt;
  return l;
}

// --- Enumeration ---------------------------------------------------------------

std::vector<RoughPair> approximation_pairs(const Relation& lower_by, const Relation& upper_by, const Limits& limits) {
  require_same_universe(lower_by, upper_by);
  const std::size_t n = lower_by.size();
  require_enumerable(n, limits);
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<RoughPair> pairs(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t bits = 0; bits < count; ++bits) {
    const Subset x = Subset::from_bits(static_cast<std::uint64_t>(bits));
    pairs[static_cast<std::size_t>(bits)] = {lower(lower_by, x), upper(upper_by, x)};
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

RoughPair rough_pair(const CompatiblePair& et, Subset x) {
  return {lower(et.equivalence(), x), upper(et.tolerance(), x)};
}

RoughLattice enumerate_rs(const CompatiblePair& et, const Limits& limits) {
  return RoughLattice(et, OrderedSet(approximation_pairs(et.equivalence(), et.tolerance(), limits), limits));
}

RoughLattice enumerate_rs(const Equivalence& e, const Tolerance& t, const Limits& limits) {
  return enumerate_rs(CompatiblePair(e, t), limits);
}

RoughLattice enumerate_rs_e(const Equivalence& e, const Limits& limits) {
  return enumerate_rs(CompatiblePair(e, Tolerance(e)), limits);
}

OrderedSet enumerate_rs_t(const Tolerance& t, const Limits& limits) {
  return OrderedSet(approximation_pairs(t, t, limits), limits);
}

// --- Characterizations and formulas ----------------------------------------------

bool pagliani_member(const Equivalence& e, const RoughPair& p) {
  if (!is_definable(e, p.lower) || !is_definable(e, p.upper))
    throw InvalidInput("Pagliani's characterization needs E-definable components");
  const Universe& u = e.universe();
  return p.lower.subset_of(p.upper) && sigma_e(e).subset_of(p.lower | u.complement(p.upper));
}

namespace {

struct MeetTerms {
  Subset lowers;        // ⋂ X_E
  Subset upper_closed;  // ⋂ (X^T)_T
};

MeetTerms meet_terms(const CompatiblePair& et, std::span<const Subset> family) {
  MeetTerms m{et.universe().full(), et.universe().full()};
  for (Subset x : family) {
    m.lowers &= lower(et.equivalence(), x);
    m.upper_closed &= lower(et.tolerance(), upper(et.tolerance(), x));
  }
  return m;
}

}  // namespace

Subset sigma_h(const CompatiblePair& et, std::span<const Subset> family) {
  const MeetTerms m = meet_terms(et, family);
  return (m.upper_closed - m.lowers) & et.sigma_e();
}

RoughPair rs_join(const CompatiblePair& et, std::span<const Subset> family) {
  RoughPair out;
  for (Subset x : family) {
    out.lower |= lower(et.equivalence(), x);
    out.upper |= upper(et.tolerance(), x);
  }
  return out;
}

RoughPair rs_meet(const CompatiblePair& et, std::span<const Subset> family) {
  const MeetTerms m = meet_terms(et, family);
  const Subset correction = (m.upper_closed - m.lowers) & et.sigma_e();
  return {m.lowers, upper(et.tolerance(), m.upper_closed - correction)};
}

}  // namespace roughlat
