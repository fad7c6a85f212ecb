#include "roughlat/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "roughlat/approximation.hpp"
#include "roughlat/error.hpp"

namespace roughlat {

namespace {

void require_analyzable(std::size_t n, const Limits& limits) {
  if (n > limits.analysis_cap)
    throw CapExceeded("lattice of " + std::to_string(n) + " elements exceeds the analysis cap of " +
                      std::to_string(limits.analysis_cap));
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

// --- LatticeOps ----------------------------------------------------------------

LatticeOps::LatticeOps(const OrderedSet& order, std::vector<std::uint32_t> join, std::vector<std::uint32_t> meet)
    : order_(order), n_(order.size()), join_(std::move(join)), meet_(std::move(meet)) {}

std::optional<LatticeOps> LatticeOps::build(const OrderedSet& order, const Limits& limits) {
  const std::size_t n = order.size();
  if (n == 0) return std::nullopt;
  require_analyzable(n, limits);
  std::vector<std::uint32_t> join(n * n);
  std::vector<std::uint32_t> meet(n * n);
  bool ok = true;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
  for (std::int64_t ai = 0; ai < count; ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    for (std::size_t b = 0; b < n && ok; ++b) {
      const std::size_t pair[] = {a, b};
      auto j = order.least_upper_bound(pair);
      auto m = order.greatest_lower_bound(pair);
      if (!j || !m) {
        ok = false;
        break;
      }
      join[a * n + b] = static_cast<std::uint32_t>(*j);
      meet[a * n + b] = static_cast<std::uint32_t>(*m);
    }
  }
  if (!ok) return std::nullopt;
  return LatticeOps(order, std::move(join), std::move(meet));
}

Verdict is_lattice(const OrderedSet& order, const Limits& limits) {
  if (order.size() == 0) return Verdict::no({}, "empty ordered set");
  require_analyzable(order.size(), limits);
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const std::size_t pair[] = {a, b};
      if (!order.least_upper_bound(pair)) return Verdict::no({a, b}, "pair has no least upper bound");
      if (!order.greatest_lower_bound(pair)) return Verdict::no({a, b}, "pair has no greatest lower bound");
    }
  return Verdict::yes();
}

// --- Distributivity ------------------------------------------------------------------

bool distributive_at(const LatticeOps& l, std::size_t x, std::size_t y, std::size_t z) {
  const bool meet_over_join = l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
  const bool join_over_meet = l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z));
  return meet_over_join && join_over_meet;
}

Verdict is_distributive(const LatticeOps& l, const Limits& limits) {
  const std::size_t n = l.size();
  require_analyzable(n, limits);
  // first failing (y, z) for each x; the least x with a failure gives the canonical witness
  std::vector<std::size_t> first_y(n, kNone);
  std::vector<std::size_t> first_z(n, kNone);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t xi = 0; xi < count; ++xi) {
    const auto x = static_cast<std::size_t>(xi);
    for (std::size_t y = 0; y < n && first_y[x] == kNone; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!distributive_at(l, x, y, z)) {
          first_y[x] = y;
          first_z[x] = z;
          break;
        }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (first_y[x] != kNone) return Verdict::no({x, first_y[x], first_z[x]}, "distributive law fails for (x, y, z)");
  return Verdict::yes();
}

std::optional<std::array<std::size_t, 5>> find_n5(const LatticeOps& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      if (!l.leq(a, c)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (l.leq(b, c) || l.leq(c, b) || l.leq(a, b) || l.leq(b, a)) continue;
        if (l.meet(a, b) == l.meet(c, b) && l.join(a, b) == l.join(c, b))
          return std::array<std::size_t, 5>{l.meet(a, b), a, c, b, l.join(a, b)};
      }
    }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 5>> find_m3(const LatticeOps& l) {
  const std::size_t n = l.size();
  auto incomparable = [&](std::size_t p, std::size_t q) { return !l.leq(p, q) && !l.leq(q, p); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!incomparable(a, b)) continue;
      const std::size_t lo = l.meet(a, b);
      const std::size_t hi = l.join(a, b);
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!incomparable(a, c) || !incomparable(b, c)) continue;
        if (l.meet(a, c) == lo && l.meet(b, c) == lo && l.join(a, c) == hi && l.join(b, c) == hi)
          return std::array<std::size_t, 5>{lo, a, b, c, hi};
      }
    }
  return std::nullopt;
}

// --- Complete sublattice and (CSub) ---------------------------------------------------

Verdict is_complete_sublattice(const RoughLattice& rs) {
  const OrderedSet& order = rs.order();
  const Relation& t = rs.tolerance();
  const Subset full = rs.equivalence().universe().full();
  if (!order.contains({Subset{}, Subset{}})) return Verdict::no({}, "ambient bottom (∅,∅) is missing");
  if (!order.contains({full, full})) return Verdict::no({}, "ambient top (U,U) is missing");
  const std::size_t n = order.size();
  std::vector<std::size_t> failing_b(n, kNone);
  std::vector<int> failing_kind(n, 0);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t ai = 0; ai < count; ++ai) {
    const auto a = static_cast<std::size_t>(ai);
    const RoughPair& p = order.element(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const RoughPair& q = order.element(b);
      const RoughPair ambient_meet{p.lower & q.lower, upper(t, lower(t, p.upper & q.upper))};
      const RoughPair ambient_join{p.lower | q.lower, p.upper | q.upper};
      int kind = !order.contains(ambient_meet) ? 1 : (!order.contains(ambient_join) ? 2 : 0);
      if (kind != 0) {
        failing_b[a] = b;
        failing_kind[a] = kind;
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (failing_b[a] != kNone)
      return Verdict::no({a, failing_b[a]}, failing_kind[a] == 1 ? "ambient meet of the pair is not in RS(E,T)"
                                                                 : "ambient join of the pair is not in RS(E,T)");
  return Verdict::yes();
}

CsubResult check_csub(const CompatiblePair& et) {
  const Tolerance& t = et.tolerance();
  auto covering = inducing_irredundant_covering(t);
  if (!covering) throw HypothesisUnmet("tolerance is not induced by an irredundant covering");
  const auto& block_sets = covering->members();
  const Subset sigma_e = et.sigma_e();
  const Subset candidates = sigma_e - et.sigma_t();
  const Subset outside = et.universe().complement(sigma_e);

  CsubResult r{true, true, std::nullopt};
  for (std::size_t x : candidates) {
    const Subset tx = t.neighborhood(x);
    bool some_below = false;
    bool some_equal = false;
    for (std::size_t y : outside) {
      some_below = some_below || t.neighborhood(y).subset_of(tx);
      some_equal = some_equal || t.neighborhood(y) == tx;
    }
    if (!some_below) r.below_condition = false;
    const bool is_block = std::binary_search(block_sets.begin(), block_sets.end(), tx);
    if (is_block && !some_equal && r.csub) {
      r.csub = false;
      r.failing_element = x;
    }
  }
  if (r.below_condition != r.csub) internal_fault("the T(y) ⊆ T(x) and T(y) = T(x) forms of (CSub) disagree");
  return r;
}

CsubCircResult check_csub_circ(const Equivalence& e, const Equivalence& f) {
  require_same_universe(e, f);
  if (!e.relation().subset_of(f.relation())) throw InvalidInput("(CSub°) needs E ⊆ F");
  CsubCircResult r{true, std::nullopt};
  for (std::size_t x = 0; x < f.relation().size(); ++x) {
    const Subset fx = f.class_of(x);
    if (fx.count() < 2) continue;
    bool found = false;
    for (std::size_t y : fx) found = found || e.class_of(y).count() >= 2;
    if (!found) {
      r = {false, x};
      break;
    }
  }
  const CsubResult via_tolerance = check_csub(CompatiblePair(e, Tolerance(f)));
  if (via_tolerance.csub != r.holds) internal_fault("(CSub°) and (CSub) disagree for equivalences E ⊆ F");
  return r;
}

// --- Pseudocomplements ---------------------------------------------------------------

namespace {

// Greatest element of a set, if the set has one.
std::optional<std::size_t> greatest_of(const OrderedSet& order, const OrderedSet::Bits& s) {
  if (s.none()) return std::nullopt;
  std::size_t g = 0;
  for (auto i = s.find_first(); i != OrderedSet::Bits::npos; i = s.find_next(i)) g = i;
  if (!s.is_subset_of(order.down_set(g))) return std::nullopt;
  return g;
}

std::optional<std::size_t> least_of(const OrderedSet& order, const OrderedSet::Bits& s) {
  auto l = s.find_first();
  if (l == OrderedSet::Bits::npos || !s.is_subset_of(order.up_set(l))) return std::nullopt;
  return l;
}

}  // namespace

std::optional<std::size_t> pseudocomplement(const LatticeOps& l, std::size_t a) {
  OrderedSet::Bits s(l.size());
  for (std::size_t b = 0; b < l.size(); ++b)
    if (l.meet(a, b) == l.bottom()) s.set(b);
  return greatest_of(l.order(), s);
}

std::optional<std::size_t> dual_pseudocomplement(const LatticeOps& l, std::size_t a) {
  OrderedSet::Bits s(l.size());
  for (std::size_t b = 0; b < l.size(); ++b)
    if (l.join(a, b) == l.top()) s.set(b);
  return least_of(l.order(), s);
}

std::optional<std::size_t> heyting_implication(const LatticeOps& l, std::size_t a, std::size_t b) {
  OrderedSet::Bits s(l.size());
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.leq(l.meet(a, x), b)) s.set(x);
  return greatest_of(l.order(), s);
}

RoughPseudocomplements rough_pseudocomplements(const CompatiblePair& et, const RoughPair& p) {
  const CsubResult csub = check_csub(et);  // throws when the covering hypothesis fails
  if (!csub.csub) throw HypothesisUnmet("(CSub) does not hold");
  const Universe& u = et.universe();
  const Relation& t = et.tolerance();
  const Subset b_up = upper(t, u.complement(p.upper));
  const Subset a_c = u.complement(p.lower);
  return {
      {lower(t, b_up), b_up},
      {a_c, upper(t, a_c)},
      {lower(t, p.upper), p.upper},
      {p.lower, upper(t, p.lower)},
  };
}

bool PseudocomplementTable::total() const {
  auto has = [](const auto& v) { return v.has_value(); };
  return std::all_of(star.begin(), star.end(), has) && std::all_of(plus.begin(), plus.end(), has);
}

PseudocomplementTable pseudocomplements(const LatticeOps& l) {
  PseudocomplementTable t;
  t.star.resize(l.size());
  t.plus.resize(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    t.star[a] = pseudocomplement(l, a);
    t.plus[a] = dual_pseudocomplement(l, a);
  }
  return t;
}

namespace {

std::optional<Verdict> missing_operation(const PseudocomplementTable& ops, bool need_plus) {
  for (std::size_t a = 0; a < ops.star.size(); ++a) {
    if (!ops.star[a]) return Verdict::no({a}, "element has no pseudocomplement");
    if (need_plus && !ops.plus[a]) return Verdict::no({a}, "element has no dual pseudocomplement");
  }
  return std::nullopt;
}

}  // namespace

Verdict is_regular_double_p(const LatticeOps& l, const PseudocomplementTable& ops) {
  if (auto missing = missing_operation(ops, true)) return *missing;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t a = 0; a < l.size(); ++a) {
    auto [it, inserted] = seen.emplace(std::pair{*ops.star[a], *ops.plus[a]}, a);
    if (!inserted) return Verdict::no({it->second, a}, "distinct elements share a* and a+");
  }
  return Verdict::yes();
}

Verdict is_stone(const LatticeOps& l, const PseudocomplementTable& ops, const Limits& limits) {
  if (auto missing = missing_operation(ops, false)) return *missing;
  Verdict d = is_distributive(l, limits);
  if (!d.holds()) return Verdict::no(d.witness, "lattice is not distributive");
  for (std::size_t a = 0; a < l.size(); ++a) {
    const std::size_t s = *ops.star[a];
    if (l.join(s, *ops.star[s]) != l.top()) return Verdict::no({a}, "a* ∨ a** ≠ 1");
  }
  return Verdict::yes();
}

Verdict is_double_stone(const LatticeOps& l, const PseudocomplementTable& ops, const Limits& limits) {
  if (auto missing = missing_operation(ops, true)) return *missing;
  Verdict stone = is_stone(l, ops, limits);
  if (!stone.holds()) return stone;
  for (std::size_t a = 0; a < l.size(); ++a) {
    const std::size_t p = *ops.plus[a];
    if (l.meet(p, *ops.plus[p]) != l.bottom()) return Verdict::no({a}, "a+ ∧ a++ ≠ 0");
  }
  return Verdict::yes();
}

Verdict is_heyting(const LatticeOps& l, const Limits& limits) {
  require_analyzable(l.size(), limits);
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (!heyting_implication(l, a, b)) return Verdict::no({a, b}, "no relative pseudocomplement a ⇒ b");
  return Verdict::yes();
}

// --- Self-duality ---------------------------------------------------------------------

namespace {

struct Signature {
  std::size_t down;
  std::size_t up;
  std::size_t height;
  std::size_t depth;
  auto operator<=>(const Signature&) const = default;
  Signature dual() const { return {up, down, depth, height}; }
};

class DualMapSearch {
 public:
  explicit DualMapSearch(const OrderedSet& order) : order_(order), n_(order.size()), image_(n_, kNone), used_(n_) {
    std::vector<std::size_t> height(n_, 0), depth(n_, 0);
    std::vector<std::vector<std::size_t>> below(n_);
    for (auto [a, b] : order.covers()) below[b].push_back(a);
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t a : below[b]) height[b] = std::max(height[b], height[a] + 1);
    std::vector<std::vector<std::size_t>> above(n_);
    for (auto [a, b] : order.covers()) above[a].push_back(b);
    for (std::size_t a = n_; a-- > 0;)
      for (std::size_t b : above[a]) depth[a] = std::max(depth[a], depth[b] + 1);
    sig_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x)
      sig_[x] = {order.down_set(x).count(), order.up_set(x).count(), height[x], depth[x]};
  }

  bool profiles_match() const {
    std::vector<Signature> a(sig_), b;
    for (const auto& s : sig_) b.push_back(s.dual());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search(std::size_t x = 0) {
    if (x == n_) return true;
    const Signature want = sig_[x].dual();
    for (std::size_t y = 0; y < n_; ++y) {
      if (used_[y] || sig_[y] != want || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (search(x + 1)) return true;
      used_[y] = false;
      image_[x] = kNone;
    }
    return false;
  }

  const std::vector<std::size_t>& image() const { return image_; }

 private:
  bool consistent(std::size_t x, std::size_t y) const {
    for (std::size_t w = 0; w < x; ++w) {
      const std::size_t fw = image_[w];
      if (order_.leq(w, x) != order_.leq(y, fw)) return false;
      if (order_.leq(x, w) != order_.leq(fw, y)) return false;
    }
    return true;
  }

  const OrderedSet& order_;
  std::size_t n_;
  std::vector<Signature> sig_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

Verdict is_self_dual(const OrderedSet& order) {
  DualMapSearch search(order);
  if (!search.profiles_match()) return Verdict::no({}, "level profile differs from the dual's");
  if (!search.search()) return Verdict::no({}, "no order-reversing bijection exists");
  return {Status::holds, search.image(), "dual isomorphism found"};
}

// --- Aggregate --------------------------------------------------------------------------

AnalyzedPairs analyze(const Equivalence& e, const Tolerance& t, const Limits& limits) {
  AnalyzedPairs out{OrderedSet(approximation_pairs(e, t, limits), limits), {}};
  AlgebraReport& r = out.report;
  const OrderedSet& order = out.order;
  r.compatibility = is_compatible(e, t);
  r.element_count = order.size();
  r.is_lattice = is_lattice(order, limits);

  const char* not_lattice = "not a lattice";
  r.is_distributive = r.completely_distributive = r.pseudocomplements_exist = r.is_regular_double_p = r.is_stone =
      r.is_double_stone = r.is_heyting = r.is_self_dual = Verdict::inapplicable(not_lattice);
  if (!r.compatibility.compatible) {
    r.is_complete_sublattice = r.csub_holds = r.csub_circ_holds = Verdict::inapplicable("T is not E-compatible");
  } else {
    CompatiblePair et(e, t);
    r.is_complete_sublattice = is_complete_sublattice(RoughLattice(et, order));
    try {
      const CsubResult c = check_csub(et);
      r.csub_holds = c.csub ? Verdict::yes() : Verdict::no({}, "(CSub) fails at element " + e.universe().label(*c.failing_element));
    } catch (const HypothesisUnmet& ex) {
      r.csub_holds = Verdict::inapplicable(ex.what());
    }
    if (t.relation().is_transitive()) {
      const Equivalence f(t.relation());
      const CsubCircResult c = check_csub_circ(e, f);
      r.csub_circ_holds =
          c.holds ? Verdict::yes() : Verdict::no({}, "(CSub°) fails at element " + e.universe().label(*c.failing_element));
    } else {
      r.csub_circ_holds = Verdict::inapplicable("T is not an equivalence");
    }
  }
  if (!r.is_lattice.holds()) return out;

  const auto lattice = LatticeOps::build(order, limits);
  if (!lattice) internal_fault("lattice check passed but join/meet tables are incomplete");
  r.is_distributive = is_distributive(*lattice, limits);
  if (r.is_distributive.holds()) {
    r.completely_distributive = Verdict::yes("finite distributive lattice: completely distributive and algebraic");
  } else {
    r.completely_distributive = Verdict::no(r.is_distributive.witness, "not distributive");
    r.n5 = find_n5(*lattice);
    r.m3 = find_m3(*lattice);
  }
  const PseudocomplementTable ops = pseudocomplements(*lattice);
  if (ops.total()) {
    r.pseudocomplements_exist = Verdict::yes();
  } else {
    for (std::size_t a = 0; a < ops.star.size(); ++a)
      if (!ops.star[a] || !ops.plus[a]) {
        r.pseudocomplements_exist = Verdict::no({a}, "element lacks a pseudocomplement or dual pseudocomplement");
        break;
      }
  }
  r.is_regular_double_p = is_regular_double_p(*lattice, ops);
  r.is_stone = is_stone(*lattice, ops, limits);
  r.is_double_stone = is_double_stone(*lattice, ops, limits);
  r.is_heyting = is_heyting(*lattice, limits);
  r.is_self_dual = is_self_dual(order);
  return out;
}

}  // namespace roughlat
