#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "roughlat/error.hpp"
#include "roughlat/io.hpp"
#include "support.hpp"

using namespace roughlat;
using namespace fixtures;

TEST_CASE("fixed instances") {
  const CompatibilityReport r31 = is_compatible(incompatible_e(), incompatible_t());
  CHECK_FALSE(r31.compatible);
  CHECK_FALSE(r31.kernel_inclusion);
  CHECK_FALSE(r31.blocks_definable);
  CHECK(r31.cross_checked);
  REQUIRE(r31.witness);
  // least failing triple: 1 E 2, 2 T 4, not 1 T 4
  CHECK(*r31.witness == CompatibilityWitness{0, 1, 3});

  const Tolerance t32 = two_block_t();
  const CompatibilityReport r32 = is_compatible(kernel(t32), t32);
  CHECK(r32.compatible);
  CHECK(r32.kernel_inclusion);
  CHECK(r32.blocks_definable);
  CHECK_FALSE(r32.witness);
  CHECK(kernel(t32) == incompatible_e());

  CHECK_THROWS_AS(CompatiblePair(incompatible_e(), incompatible_t()), IncompatibleError);
  try {
    CompatiblePair(incompatible_e(), incompatible_t());
  } catch (const IncompatibleError& e) {
    CHECK(e.report().witness.has_value());
  }
}

TEST_CASE("report serialization uses labels") {
  const auto j = io::compatibility_to_json(*u4(), is_compatible(incompatible_e(), incompatible_t()));
  CHECK(j["witness"]["x"] == "1");
  CHECK(j["witness"]["z"] == "2");
  CHECK(j["witness"]["y"] == "4");
  CHECK(j["compatible"] == false);
}

TEST_CASE("similarity extensions") {
  const Equivalence e = incompatible_e();
  CHECK(is_similarity_extension(e, e));
  CHECK(is_similarity_extension(e, two_block_t()));
  CHECK_FALSE(is_similarity_extension(e, incompatible_t()));
}

TEST_CASE("singleton unions") {
  const Equivalence e42 = overlap_split_e();
  const Tolerance t = overlap_t();
  CHECK(sigma_e(e42) == set(e42.universe(), "34"));
  CHECK(sigma_t(t) == Subset{});
  CHECK(sigma_t(two_block_t()) == Subset{});
  CHECK(sigma_e(Equivalence::identity(u4())) == u4()->full());
  CHECK(sigma_t(Tolerance(Relation::identity(u4()))) == u4()->full());
  CHECK(sigma_e(Equivalence::full(u4())) == Subset{});
  const CompatiblePair et(e42, t);
  CHECK(et.sigma_e() == set(e42.universe(), "34"));
  CHECK(et.sigma_t() == Subset{});
}

TEST_CASE("random pairs: characterizations and consequences") {
  Rng rng(41);
  int compatible_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto u = Universe::numbered(n);
    const Equivalence e = random_equivalence(rng, u);
    const Tolerance t = trial % 2 ? random_compatible_tolerance(rng, e) : random_tolerance(rng, u, 0.6);
    const CompatibilityReport r = is_compatible(e, t);  // aborts if the criteria disagree
    CHECK(r.compatible == r.kernel_inclusion);
    CHECK(r.compatible == r.blocks_definable);
    CHECK(r.witness.has_value() != r.compatible);
    CHECK(is_similarity_extension(e, t) == r.compatible);

    const Relation et = product(e, t);
    const Relation te = product(t, e);
    CHECK((et == t.relation()) == r.compatible);
    CHECK((te == t.relation()) == r.compatible);
    if (r.witness) {
      CHECK(e.relation().related(r.witness->x, r.witness->z));
      CHECK(t.relation().related(r.witness->z, r.witness->y));
      CHECK_FALSE(t.relation().related(r.witness->x, r.witness->y));
    }
    if (!r.compatible) continue;
    ++compatible_seen;
    CHECK(e.relation().subset_of(t));
    CHECK(sigma_t(t).subset_of(sigma_e(e)));
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(is_definable(e, t.neighborhood(x)));
      for (std::size_t y : e.class_of(x)) CHECK(t.neighborhood(x) == t.neighborhood(y));
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const Subset x = Subset::from_bits(m);
      const Subset up = upper(t, x);
      const Subset lo = lower(t, x);
      CHECK(is_definable(e, up));
      CHECK(is_definable(e, lo));
      CHECK(upper(e, up) == up);
      CHECK(upper(et, x) == up);
      CHECK(upper(te, x) == up);
      CHECK(upper(t, upper(e, x)) == up);
      CHECK(lower(e, lo) == lo);
      CHECK(lower(et, x) == lo);
      CHECK(lower(te, x) == lo);
      CHECK(lower(t, lower(e, x)) == lo);
      Subset up_classes, lo_classes;
      for (std::size_t y = 0; y < n; ++y) {
        if (t.neighborhood(y).intersects(x)) up_classes = up_classes | e.class_of(y);
        if (t.neighborhood(y).subset_of(x)) lo_classes = lo_classes | e.class_of(y);
      }
      CHECK(up == up_classes);
      CHECK(lo == lo_classes);
    }
  }
  CHECK(compatible_seen > 150);
}

TEST_CASE("the kernel is the greatest compatible equivalence") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = Universe::numbered(5);
    const Tolerance t = random_tolerance(rng, u, 0.5);
    const Equivalence k = kernel(t);
    CHECK(is_compatible(k, t).compatible);
    for (const Equivalence& e : all_equivalences(u))
      if (is_compatible(e, t).compatible) CHECK(e.relation().subset_of(k));
  }
}

TEST_CASE("equivalences: F is E-compatible iff E is contained in F") {
  const auto u = Universe::numbered(4);
  const auto all = all_equivalences(u);
  CHECK(all.size() == 15);
  for (const Equivalence& e : all) {
    CHECK(is_compatible(e, Tolerance(e)).compatible);
    for (const Equivalence& f : all) CHECK(is_compatible(e, Tolerance(f)).compatible == e.relation().subset_of(f));
  }
  CHECK(all_equivalences(Universe::numbered(5)).size() == 52);
}
