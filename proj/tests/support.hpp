#pragma once

// Fixtures, random generators and a naive std::set oracle shared by the test programs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "roughlat/approximation.hpp"
#include "roughlat/compatibility.hpp"
#include "roughlat/relation.hpp"
#include "roughlat/rough_lattice.hpp"

namespace doctest {
template <>
struct StringMaker<roughlat::Subset> {
  static String convert(roughlat::Subset s) {
    std::string out = "{";
    for (std::size_t i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
    return (out + "}").c_str();
  }
};
template <>
struct StringMaker<roughlat::RoughPair> {
  static String convert(const roughlat::RoughPair& p) {
    return String("(") + StringMaker<roughlat::Subset>::convert(p.lower) + ", " +
           StringMaker<roughlat::Subset>::convert(p.upper) + ")";
  }
};
}  // namespace doctest

namespace fixtures {

using namespace roughlat;

inline UniversePtr u4() { return Universe::numbered(4); }
inline UniversePtr u6() { return Universe::numbered(6); }

inline Subset set(const Universe& u, std::string_view compact) {
  Subset out;
  for (char c : compact) out.insert(u.index_of(std::string(1, c)));
  return out;
}

inline Equivalence classes(const UniversePtr& u, std::initializer_list<std::string_view> cls) {
  std::vector<Subset> parts;
  for (auto c : cls) parts.push_back(set(*u, c));
  return Equivalence::from_classes(u, parts);
}

inline Tolerance from_neighborhoods(const UniversePtr& u, std::initializer_list<std::string_view> rows) {
  std::vector<Subset> out;
  for (auto r : rows) out.push_back(set(*u, r));
  return Tolerance(Relation(u, out));
}

inline Tolerance from_covering(const UniversePtr& u, std::initializer_list<std::string_view> members) {
  std::vector<Subset> out;
  for (auto m : members) out.push_back(set(*u, m));
  return induced_tolerance(Covering(u, out));
}

// E with classes {1,2},{3},{4}; T(1)=123, T(2)=124, T(3)=134, T(4)=234.
inline Equivalence incompatible_e() { return classes(u4(), {"12", "3", "4"}); }
inline Tolerance incompatible_t() { return from_neighborhoods(u4(), {"123", "124", "134", "234"}); }
// covering {123, 124}; used with E = ker T
inline Tolerance two_block_t() { return from_covering(u4(), {"123", "124"}); }
// covering {1234, 3456}; used with E = ker T
inline Tolerance overlap_t() { return from_covering(u6(), {"1234", "3456"}); }
// E classes {1,2},{3},{4},{5,6}, paired with overlap_t
inline Equivalence overlap_split_e() { return classes(u6(), {"12", "3", "4", "56"}); }

inline RoughPair pair(const Universe& u, std::string_view lower, std::string_view upper) {
  auto parse = [&](std::string_view s) { return s == "U" ? u.full() : (s == "0" ? Subset{} : set(u, s)); };
  return {parse(lower), parse(upper)};
}

// ---- random instances --------------------------------------------------------------

using Rng = std::mt19937_64;

inline Equivalence random_equivalence(Rng& rng, const UniversePtr& u) {
  const std::size_t n = u->size();
  std::vector<std::size_t> label(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (auto& l : label) l = pick(rng);
  std::vector<Subset> rows(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (label[x] == label[y]) rows[x].insert(y);
  return Equivalence(Relation(u, rows));
}

inline Tolerance random_tolerance(Rng& rng, const UniversePtr& u, double density = 0.4) {
  const std::size_t n = u->size();
  std::bernoulli_distribution edge(density);
  std::vector<Subset> rows(n);
  for (std::size_t x = 0; x < n; ++x) {
    rows[x].insert(x);
    for (std::size_t y = x + 1; y < n; ++y)
      if (edge(rng)) {
        rows[x].insert(y);
        rows[y].insert(x);
      }
  }
  return Tolerance(Relation(u, rows));
}

// A random tolerance on the E-classes lifted to U, which is E-compatible by construction.
inline Tolerance random_compatible_tolerance(Rng& rng, const Equivalence& e, double density = 0.4) {
  const auto cls = e.classes();
  std::bernoulli_distribution edge(density);
  const std::size_t m = cls.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    adj[i][i] = true;
    for (std::size_t j = i + 1; j < m; ++j) adj[i][j] = adj[j][i] = edge(rng);
  }
  const std::size_t n = e.universe().size();
  std::vector<Subset> rows(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (adj[i][j])
        for (std::size_t x : cls[i]) rows[x] = rows[x] | cls[j];
  return Tolerance(Relation(e.universe_ptr(), rows));
}

// A random refinement of the given equivalence (split each class at random).
inline Equivalence random_refinement(Rng& rng, const Equivalence& f) {
  std::vector<Subset> parts;
  for (Subset c : f.classes()) {
    std::uniform_int_distribution<std::size_t> pieces(1, c.count());
    const std::size_t k = pieces(rng);
    std::vector<Subset> split(k);
    std::uniform_int_distribution<std::size_t> where(0, k - 1);
    for (std::size_t x : c) split[where(rng)].insert(x);
    for (Subset s : split)
      if (!s.empty()) parts.push_back(s);
  }
  return Equivalence::from_classes(f.universe_ptr(), parts);
}

// A random irredundant covering: random nonempty members, then removable ones pruned.
inline Covering random_irredundant_covering(Rng& rng, const UniversePtr& u) {
  const std::size_t n = u->size();
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<std::size_t> count(1, n);
  std::vector<Subset> members;
  Subset covered;
  const std::size_t want = count(rng);
  while (members.size() < want || covered != u->full()) {
    Subset s = Subset::from_bits(mask(rng));
    // bias towards small members so that singletons and overlaps both occur
    if (s.count() > 3 && std::bernoulli_distribution(0.5)(rng)) s = Subset::from_bits(s.bits() & (s.bits() - 1));
    members.push_back(s);
    covered = covered | s;
  }
  Covering c(u, members);
  for (auto r = is_irredundant(c); !r.irredundant; r = is_irredundant(c)) {
    std::vector<Subset> kept;
    for (Subset m : c.members())
      if (m != *r.removable) kept.push_back(m);
    c = Covering(u, kept);
  }
  return c;
}

// ---- naive oracle -------------------------------------------------------------------

using NaiveSet = std::set<std::size_t>;

inline NaiveSet to_naive(Subset s) { return NaiveSet(s.begin(), s.end()); }

inline NaiveSet naive_lower(const Relation& r, const NaiveSet& x) {
  NaiveSet out;
  for (std::size_t a = 0; a < r.size(); ++a) {
    bool inside = true;
    for (std::size_t b = 0; b < r.size(); ++b)
      if (r.related(a, b) && !x.count(b)) inside = false;
    if (inside) out.insert(a);
  }
  return out;
}

inline NaiveSet naive_upper(const Relation& r, const NaiveSet& x) {
  NaiveSet out;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b : x)
      if (r.related(a, b)) out.insert(a);
  return out;
}

// Brute-force least upper bound in an explicit list of pairs.
inline std::optional<RoughPair> brute_lub(const std::vector<RoughPair>& all, const std::vector<RoughPair>& family) {
  std::vector<RoughPair> ub;
  for (const auto& p : all)
    if (std::all_of(family.begin(), family.end(), [&](const RoughPair& f) { return f.leq(p); })) ub.push_back(p);
  for (const auto& c : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](const RoughPair& o) { return c.leq(o); })) return c;
  return std::nullopt;
}

inline std::optional<RoughPair> brute_glb(const std::vector<RoughPair>& all, const std::vector<RoughPair>& family) {
  std::vector<RoughPair> lb;
  for (const auto& p : all)
    if (std::all_of(family.begin(), family.end(), [&](const RoughPair& f) { return p.leq(f); })) lb.push_back(p);
  for (const auto& c : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](const RoughPair& o) { return o.leq(c); })) return c;
  return std::nullopt;
}

// Every equivalence on an n-element universe (set partitions via restricted growth strings).
inline std::vector<Equivalence> all_equivalences(const UniversePtr& u) {
  const std::size_t n = u->size();
  std::vector<Equivalence> out;
  std::vector<std::size_t> g(n, 0);
  while (true) {
    std::vector<Subset> rows(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (g[x] == g[y]) rows[x].insert(y);
    out.emplace_back(Relation(u, rows));
    // next restricted growth string
    std::size_t i = n;
    while (i-- > 1) {
      const std::size_t mx = *std::max_element(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(i));
      if (g[i] <= mx) {
        ++g[i];
        std::fill(g.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace fixtures
