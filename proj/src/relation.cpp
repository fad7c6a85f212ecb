#include "roughlat/relation.hpp"

#include <algorithm>
#include <functional>

#include "roughlat/error.hpp"

namespace roughlat {

Relation::Relation(UniversePtr universe, std::vector<Subset> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
  if (!universe_) throw InvalidInput("relation without a universe");
  if (rows_.size() != universe_->size()) {
    throw InvalidInput("relation has " + std::to_string(rows_.size()) + " rows for a universe of " +
                       std::to_string(universe_->size()));
  }
  for (Subset r : rows_) {
    if (!universe_->contains(r)) throw InvalidInput("relation row refers to elements outside the universe");
  }
}

Relation Relation::empty(UniversePtr universe) {
  std::vector<Subset> rows(universe->size());
  return Relation(std::move(universe), std::move(rows));
}

Relation Relation::identity(UniversePtr universe) {
  std::vector<Subset> rows;
  for (std::size_t x = 0; x < universe->size(); ++x) rows.push_back(Subset::singleton(x));
  return Relation(std::move(universe), std::move(rows));
}

Relation Relation::full(UniversePtr universe) {
  std::vector<Subset> rows(universe->size(), universe->full());
  return Relation(std::move(universe), std::move(rows));
}

Relation Relation::from_pairs(UniversePtr universe, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Subset> rows(universe->size());
  for (auto [x, y] : pairs) {
    if (x >= rows.size() || y >= rows.size()) throw InvalidInput("pair index outside the universe");
    rows[x].insert(y);
  }
  return Relation(std::move(universe), std::move(rows));
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (!rows_[x].contains(x)) return false;
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t y : rows_[x])
      if (!rows_[y].contains(x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t z : rows_[x])
      if (!rows_[z].subset_of(rows_[x])) return false;
  return true;
}

bool Relation::subset_of(const Relation& other) const {
  require_same_universe(*this, other);
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  return true;
}

bool Relation::same_universe(const Relation& other) const {
  return universe_ == other.universe_ || *universe_ == *other.universe_;
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (Subset r : rows_) n += r.count();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t y : rows_[x]) out.emplace_back(x, y);
  return out;
}

bool operator==(const Relation& a, const Relation& b) { return a.same_universe(b) && a.rows_ == b.rows_; }

Relation operator&(const Relation& a, const Relation& b) {
  require_same_universe(a, b);
  std::vector<Subset> rows(a.size());
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x] = a.rows_[x] & b.rows_[x];
  return Relation(a.universe_, std::move(rows));
}

Relation operator|(const Relation& a, const Relation& b) {
  require_same_universe(a, b);
  std::vector<Subset> rows(a.size());
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x] = a.rows_[x] | b.rows_[x];
  return Relation(a.universe_, std::move(rows));
}

void require_same_universe(const Relation& a, const Relation& b) {
  if (!a.same_universe(b)) throw InvalidInput("relations are defined on different universes");
}

Relation product(const Relation& r, const Relation& s) {
  require_same_universe(r, s);
  std::vector<Subset> rows(r.size());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t z : r.row(x)) rows[x] |= s.row(z);
  return Relation(r.universe_ptr(), std::move(rows));
}

Relation inverse(const Relation& r) {
  std::vector<Subset> rows(r.size());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y : r.row(x)) rows[y].insert(x);
  return Relation(r.universe_ptr(), std::move(rows));
}

Subset neighborhood(const Relation& r, std::string_view label) { return r.row(r.universe().index_of(label)); }

// --- Equivalence / Tolerance -------------------------------------------------

Equivalence::Equivalence(Relation relation) : relation_(std::move(relation)) {
  if (!relation_.is_reflexive()) throw InvalidInput("equivalence is not reflexive");
  if (!relation_.is_symmetric()) throw InvalidInput("equivalence is not symmetric");
  if (!relation_.is_transitive()) throw InvalidInput("equivalence is not transitive");
}

Equivalence Equivalence::identity(UniversePtr universe) { return Equivalence(Relation::identity(std::move(universe))); }

Equivalence Equivalence::full(UniversePtr universe) { return Equivalence(Relation::full(std::move(universe))); }

Equivalence Equivalence::from_classes(UniversePtr universe, std::span<const Subset> classes) {
  std::vector<Subset> rows(universe->size());
  Subset seen;
  for (Subset c : classes) {
    if (c.empty()) throw InvalidInput("empty equivalence class");
    if (c.intersects(seen)) throw InvalidInput("equivalence classes overlap");
    seen |= c;
    for (std::size_t x : c) {
      if (x >= rows.size()) throw InvalidInput("class member outside the universe");
      rows[x] = c;
    }
  }
  if (seen != universe->full()) throw InvalidInput("equivalence classes do not cover the universe");
  return Equivalence(Relation(std::move(universe), std::move(rows)));
}

std::vector<Subset> Equivalence::classes() const {
  std::vector<Subset> out;
  Subset seen;
  for (std::size_t x = 0; x < relation_.size(); ++x) {
    if (seen.contains(x)) continue;
    out.push_back(class_of(x));
    seen |= class_of(x);
  }
  return out;
}

Tolerance::Tolerance(Relation relation) : relation_(std::move(relation)) {
  if (!relation_.is_reflexive()) throw InvalidInput("tolerance is not reflexive");
  if (!relation_.is_symmetric()) throw InvalidInput("tolerance is not symmetric");
}

// --- Coverings and blocks ----------------------------------------------------

Covering::Covering(UniversePtr universe, std::vector<Subset> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  Subset all;
  for (Subset m : members_) {
    if (m.empty()) throw InvalidInput("covering has an empty member");
    if (!universe_->contains(m)) throw InvalidInput("covering member outside the universe");
    all |= m;
  }
  if (all != universe_->full()) throw InvalidInput("members do not cover the universe");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Equivalence kernel(const Tolerance& t) {
  const auto& r = t.relation();
  std::vector<Subset> rows(r.size());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = 0; y < rows.size(); ++y)
      if (r.row(x) == r.row(y)) rows[x].insert(y);
  return Equivalence(Relation(r.universe_ptr(), std::move(rows)));
}

namespace {

// Bron–Kerbosch with Tomita pivoting over bit masks. adjacency excludes self-loops.
void bron_kerbosch(const std::vector<Subset>& adjacency, Subset r, Subset p, Subset x, std::vector<Subset>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (std::size_t u : (p | x)) {
    std::size_t k = (p & adjacency[u]).count();
    if (!have_pivot || k > best) {
      pivot = u;
      best = k;
      have_pivot = true;
    }
  }
  for (std::size_t v : (p - adjacency[pivot])) {
    Subset nv = adjacency[v];
    bron_kerbosch(adjacency, r | Subset::singleton(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<Subset> blocks(const Tolerance& t) {
  const auto& r = t.relation();
  std::vector<Subset> adjacency(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    adjacency[x] = r.row(x);
    adjacency[x].erase(x);
  }
  std::vector<Subset> out;
  bron_kerbosch(adjacency, Subset{}, r.universe().full(), Subset{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> block_neighborhoods(const Tolerance& t) {
  const auto& r = t.relation();
  std::vector<Subset> out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    Subset n = r.row(x);
    // T(x) is a preblock iff every member's neighborhood contains it; it is then maximal,
    // since any element related to x already lies in T(x).
    bool preblock = true;
    for (std::size_t y : n) preblock = preblock && n.subset_of(r.row(y));
    if (preblock) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Tolerance induced_tolerance(const Covering& c) {
  std::vector<Subset> rows(c.universe().size());
  for (Subset b : c.members())
    for (std::size_t x : b) rows[x] |= b;
  return Tolerance(Relation(c.universe_ptr(), std::move(rows)));
}

IrredundancyResult is_irredundant(const Covering& c) {
  const auto members = c.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    Subset rest;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (j != i) rest |= members[j];
    if (rest == c.universe().full()) return {false, members[i]};
  }
  return {};
}

Equivalence covering_kernel_oracle(const Covering& c) {
  if (!is_irredundant(c).irredundant) throw HypothesisUnmet("covering is redundant");
  const std::size_t n = c.universe().size();
  std::vector<Subset> profile(n);  // bit i set iff x belongs to member i
  const auto members = c.members();
  if (members.size() > kMaxUniverse) {
    // An irredundant covering has a private element per member, so this cannot happen.
    internal_fault("irredundant covering with more members than elements");
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t x : members[i]) profile[x].insert(i);
  std::vector<Subset> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (profile[x] == profile[y]) rows[x].insert(y);
  return Equivalence(Relation(c.universe_ptr(), std::move(rows)));
}

std::optional<Covering> inducing_irredundant_covering(const Tolerance& t) {
  auto candidate = block_neighborhoods(t);
  Subset all;
  for (Subset b : candidate) all |= b;
  if (all != t.universe().full()) return std::nullopt;
  Covering c(t.universe_ptr(), std::move(candidate));
  if (!is_irredundant(c).irredundant) return std::nullopt;
  if (!(induced_tolerance(c) == t)) return std::nullopt;
  return c;
}

}  // namespace roughlat
