#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "roughlat/error.hpp"
#include "roughlat/serial.hpp"
#include "support.hpp"

using namespace roughlat;
using namespace fixtures;

namespace {

std::vector<std::size_t> indices_of(const OrderedSet& o, std::initializer_list<RoughPair> ps) {
  std::vector<std::size_t> out;
  for (const auto& p : ps) out.push_back(*o.index_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rough pairs for the two-block covering") {
  const Tolerance t = two_block_t();
  const CompatiblePair et(kernel(t), t);
  const Universe& u = t.universe();
  CHECK(rough_pair(et, set(u, "4")) == pair(u, "4", "124"));
  CHECK(rough_pair(et, set(u, "13")) == pair(u, "3", "U"));
  CHECK(rough_pair(et, Subset{}) == pair(u, "0", "0"));
  CHECK(rough_pair(et, u.full()) == pair(u, "U", "U"));
  CHECK_THROWS_AS(enumerate_rs(incompatible_e(), incompatible_t()), IncompatibleError);
}

TEST_CASE("enumeration sizes") {
  const Tolerance t32 = two_block_t();
  const RoughLattice rs32 = enumerate_rs(kernel(t32), t32);
  CHECK(rs32.size() == 11);
  CHECK(rs32.order().contains(pair(t32.universe(), "0", "0")));
  CHECK(rs32.order().contains(pair(t32.universe(), "U", "U")));

  const Tolerance t43 = overlap_t();
  CHECK(enumerate_rs(kernel(t43), t43).size() == 13);

  const auto id = Equivalence::identity(u4());
  const RoughLattice rs_id = enumerate_rs(id, Tolerance(id));
  CHECK(rs_id.size() == 16);
  for (const auto& p : rs_id.order().elements()) CHECK(p.lower == p.upper);

  CHECK(enumerate_rs_e(Equivalence::full(Universe::numbered(1))).size() == 2);
  const auto u2 = Universe::numbered(2);
  const RoughLattice full2 = enumerate_rs_e(Equivalence::full(u2));
  CHECK(full2.size() == 3);
  CHECK(full2.order().contains({Subset{}, u2->full()}));
  CHECK(enumerate_rs_e(Equivalence::identity(u4())).size() == 16);

  CHECK(enumerate_rs_t(Tolerance(Relation::identity(u4()))).size() == 16);
  CHECK(enumerate_rs_t(Tolerance(Relation::full(u4()))).size() == 3);
  const OrderedSet rs_t31 = enumerate_rs_t(incompatible_t());
  for (const auto& p : rs_t31.elements()) CHECK(p.lower.subset_of(p.upper));

  Limits tight;
  tight.universe_cap = 3;
  CHECK_THROWS_AS(enumerate_rs_e(id, tight), CapExceeded);
  tight = {};
  tight.element_cap = 4;
  CHECK_THROWS_AS(enumerate_rs_e(id, tight), CapExceeded);
}

TEST_CASE("bounds in the non-lattice ordered set") {
  const Equivalence e = incompatible_e();
  const Tolerance t = incompatible_t();
  const Universe& u = e.universe();
  const OrderedSet o(approximation_pairs(e, t));
  CHECK(o.size() == 12);
  const std::size_t a = *o.index_of(pair(u, "0", "123"));
  const std::size_t b = *o.index_of(pair(u, "0", "124"));
  CHECK(o.minimal_upper_bounds(a, b) == indices_of(o, {pair(u, "3", "U"), pair(u, "12", "U"), pair(u, "4", "U")}));
  const std::size_t c = *o.index_of(pair(u, "3", "U"));
  const std::size_t d = *o.index_of(pair(u, "4", "U"));
  CHECK(o.maximal_lower_bounds(c, d) == indices_of(o, {pair(u, "0", "123"), pair(u, "0", "124")}));
  const std::size_t ab[] = {a, b};
  CHECK_FALSE(o.least_upper_bound(ab));
}

TEST_CASE("order structure agrees with the serial reference") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const auto u = Universe::numbered(3 + trial % 4);
    const Equivalence e = random_equivalence(rng, u);
    const Tolerance t = random_compatible_tolerance(rng, e);
    const auto pairs = approximation_pairs(e, t);
    CHECK(pairs == serial::approximation_pairs(e, t));
    const OrderedSet o(pairs);
    CHECK(o.covers() == serial::covers(o));
    for (std::size_t i = 0; i < o.size(); ++i)
      for (std::size_t j = 0; j < o.size(); ++j) {
        CHECK(o.leq(i, j) == o.element(i).leq(o.element(j)));
        if (o.leq(i, j)) CHECK(i <= j);
      }
    CHECK(o.bottom() == std::optional<std::size_t>{0});
    CHECK(o.top() == std::optional<std::size_t>{o.size() - 1});
  }
}

TEST_CASE("Pagliani's characterization") {
  Rng rng(67);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 12; ++trial) {
      const Equivalence e = random_equivalence(rng, Universe::numbered(n));
      const RoughLattice rs = enumerate_rs_e(e);
      const auto def = definable_family(e);
      for (Subset a : def)
        for (Subset b : def) {
          const RoughPair p{a, b};
          CHECK(pagliani_member(e, p) == rs.order().contains(p));
        }
      CHECK(enumerate_rs(e, Tolerance(e)).order().elements().size() == rs.size());
    }
  const auto u = u4();
  const Equivalence e = classes(u, {"12", "3", "4"});
  CHECK(pagliani_member(Equivalence::full(u), {Subset{}, u->full()}));
  CHECK_FALSE(pagliani_member(e, {Subset{}, set(*u, "3")}));
  CHECK_THROWS_AS(pagliani_member(e, {Subset{}, set(*u, "1")}), InvalidInput);
  const Equivalence k43 = kernel(overlap_t());
  for (Subset a : definable_family(k43))
    for (Subset b : definable_family(k43))
      if (a.subset_of(b)) CHECK(pagliani_member(k43, {a, b}));
}

TEST_CASE("join and meet formulas on fixed instances") {
  const Tolerance t32 = two_block_t();
  const CompatiblePair et32(kernel(t32), t32);
  const Universe& u = t32.universe();
  CHECK(rs_join(et32, {}) == pair(u, "0", "0"));
  CHECK(rs_meet(et32, {}) == pair(u, "U", "U"));
  const Subset one[] = {set(u, "13")};
  CHECK(rs_join(et32, one) == rough_pair(et32, one[0]));
  CHECK(rs_meet(et32, one) == rough_pair(et32, one[0]));
  const Subset h[] = {set(u, "3"), set(u, "13"), set(u, "4")};
  CHECK(rs_meet(et32, h) == pair(u, "0", "0"));
  const RoughLattice rs32 = enumerate_rs(et32);
  const OrderedSet& o = rs32.order();
  const std::size_t idx[] = {*o.index_of(rough_pair(et32, h[0])), *o.index_of(rough_pair(et32, h[1])),
                             *o.index_of(rough_pair(et32, h[2]))};
  CHECK(o.element(*o.greatest_lower_bound(idx)) == rs_meet(et32, h));

  const CompatiblePair et42(overlap_split_e(), overlap_t());
  const Universe& u6 = et42.universe();
  const Subset h42[] = {set(u6, "3"), set(u6, "4")};
  CHECK(sigma_h(et42, h42) == set(u6, "34"));
  CHECK(rs_meet(et42, h42) == pair(u6, "0", "U"));
  const Subset whole[] = {u6.full()};
  CHECK(sigma_h(et42, whole) == Subset{});
  const CompatiblePair et43(kernel(overlap_t()), overlap_t());
  CHECK(sigma_h(et43, h42) == Subset{});
}

TEST_CASE("formulas equal the order-theoretic bounds on small random instances") {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const auto u = Universe::numbered(3 + trial % 3);
    const Equivalence e = random_equivalence(rng, u);
    const CompatiblePair et(e, random_compatible_tolerance(rng, e));
    const RoughLattice rs = enumerate_rs(et);
    const auto all = std::vector<RoughPair>(rs.order().elements().begin(), rs.order().elements().end());
    const std::size_t n = u->size();
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    for (int h = 0; h < 40; ++h) {
      std::vector<Subset> fam(static_cast<std::size_t>(h % 4));
      for (auto& x : fam) x = Subset::from_bits(mask(rng));
      std::vector<RoughPair> pairs;
      for (Subset x : fam) pairs.push_back(rough_pair(et, x));
      CHECK(sigma_h(et, fam).subset_of(et.sigma_e()));
      CHECK(rs_join(et, fam) == brute_lub(all, pairs));
      CHECK(rs_meet(et, fam) == brute_glb(all, pairs));
      RoughPair coordinate_union{};
      for (const auto& p : pairs) coordinate_union = {coordinate_union.lower | p.lower, coordinate_union.upper | p.upper};
      CHECK(rs.order().contains(coordinate_union));
      if (et.sigma_e().subset_of(et.sigma_t())) {
        CHECK(sigma_h(et, fam) == Subset{});
        Subset lo = u->full(), up = u->full();
        for (const auto& p : pairs) {
          lo = lo & p.lower;
          up = up & p.upper;
        }
        CHECK(rs_meet(et, fam) == RoughPair{lo, upper(et.tolerance(), lower(et.tolerance(), up))});
      }
    }
  }
}
