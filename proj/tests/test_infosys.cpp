#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "roughlat/error.hpp"
#include "roughlat/infosys.hpp"
#include "support.hpp"

using namespace roughlat;
using namespace fixtures;

namespace {

std::vector<std::size_t> all_of(const InformationSystem& s) {
  std::vector<std::size_t> b(s.attributes().size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = i;
  return b;
}

bool relates(const Relation& r, std::size_t x, std::size_t y) { return r.related(x - 1, y - 1); }

// a=(1,1,2,2), b=(1,2,1,2)
const char* kGrid = "obj,a,b\n1,1,1\n2,1,2\n3,2,1\n4,2,2\n";

}  // namespace

TEST_CASE("decimals are exact") {
  CHECK(Decimal::parse("0.1")->scaled() == 100000);
  CHECK(Decimal::parse("-2.5")->scaled() == -2500000);
  CHECK(Decimal::parse("+3")->scaled() == 3000000);
  CHECK_FALSE(Decimal::parse("1.0000001"));
  CHECK_FALSE(Decimal::parse("abc"));
  CHECK_FALSE(Decimal::parse("1e3"));
  CHECK_FALSE(Decimal::parse(""));
  CHECK(distance(*Decimal::parse("0.3"), *Decimal::parse("0.1")) == *Decimal::parse("0.2"));
  CHECK(distance(*Decimal::parse("0.1"), *Decimal::parse("0.3")) == *Decimal::parse("0.2"));
  CHECK(Decimal::parse("1.50")->to_string() == "1.5");
}

TEST_CASE("ind and wind on a 2x2 grid") {
  const InformationSystem s = parse_csv(kGrid);
  const auto b = all_of(s);
  CHECK(ind(s, b) == Equivalence::identity(s.universe_ptr()));
  const Tolerance w = wind(s, b);
  CHECK(relates(w, 1, 2));
  CHECK(relates(w, 1, 3));
  CHECK(relates(w, 2, 4));
  CHECK(relates(w, 3, 4));
  CHECK_FALSE(relates(w, 1, 4));
  CHECK_FALSE(relates(w, 2, 3));
  const std::vector<std::size_t> just_a{0};
  CHECK(wind(s, just_a) == Tolerance(ind(s, just_a)));
  CHECK_THROWS_AS(ind(s, std::vector<std::size_t>{}), InvalidInput);
  CHECK_THROWS_AS(wind(s, std::vector<std::size_t>{}), InvalidInput);
}

TEST_CASE("single-attribute extremes") {
  const InformationSystem s = parse_csv("o,d,c\nx,1,k\ny,2,k\nz,3,k\n");
  CHECK(ind(s, std::vector<std::size_t>{0}) == Equivalence::identity(s.universe_ptr()));
  CHECK(ind(s, std::vector<std::size_t>{1}) == Equivalence::full(s.universe_ptr()));
}

TEST_CASE("sim with thresholds") {
  const InformationSystem s = parse_csv("o,v\nepsilon,1\nx,0\ny,1\nz,3\n");
  const Tolerance t = sim(s, std::vector<std::size_t>{0});
  CHECK(relates(t, 1, 2));
  CHECK_FALSE(relates(t, 2, 3));
  CHECK_FALSE(relates(t, 1, 3));
  const InformationSystem wide = parse_csv("o,v\nepsilon,3\nx,0\ny,1\nz,3\n");
  CHECK(sim(wide, std::vector<std::size_t>{0}).relation() == Relation::full(wide.universe_ptr()));
  const InformationSystem zero = parse_csv("o,v,w\n,0,0\nx,0.5,1\ny,0.50,1\nz,3,1\n");
  CHECK(sim(zero, all_of(zero)) == Tolerance(ind(zero, all_of(zero))));
  const InformationSystem sym = parse_csv(kGrid);
  CHECK_THROWS_AS(sim(sym, all_of(sym)), InvalidInput);
}

TEST_CASE("graded tolerance") {
  const InformationSystem s = parse_csv("o,a,b,c\n1,1,5,7\n2,1,5,8\n3,2,5,8\n");
  const auto b = all_of(s);
  const Tolerance t = graded_tol(s, b, 2);
  CHECK(relates(t, 1, 2));
  CHECK(relates(t, 2, 3));  // b and c agree
  CHECK_FALSE(relates(t, 1, 3));
  CHECK(graded_tol(s, b, 3) == Tolerance(ind(s, b)));
  CHECK(graded_tol(s, b, 1) == wind(s, b));
  CHECK_THROWS_AS(graded_tol(s, b, 0), InvalidInput);
  CHECK_THROWS_AS(graded_tol(s, b, 4), InvalidInput);
}

TEST_CASE("CSV errors carry positions") {
  auto fails_at = [](const char* text, std::size_t row, std::size_t col) {
    try {
      parse_csv(text);
    } catch (const ParseError& e) {
      CHECK(e.row() == row);
      CHECK(e.column() == col);
      return;
    }
    FAIL("no parse error for: " << text);
  };
  fails_at("o,a\nx,1\ny\n", 3, 2);             // ragged
  fails_at("o,a,b\nx,1,\n", 2, 3);             // missing cell
  fails_at("o,a\nx,1\nx,2\n", 3, 1);           // duplicate label
  fails_at("o,a\n,0.5\nx,1\ny,big\n", 4, 2);   // non-numeric under numeric
  fails_at("o,a\nepsilon,-1\nx,1\n", 2, 2);    // negative threshold
  fails_at("o,a,a\nx,1,2\n", 1, 3);            // duplicate attribute
  fails_at("", 1, 1);
}

TEST_CASE("CSV details") {
  const InformationSystem s = parse_csv("name , colour\n\"a, b\" , red \nc,\"red\"\n");
  CHECK(s.universe().label(0) == "a, b");
  CHECK(s.agree(0, 0, 1));
  CHECK(s.attributes()[0].kind == AttributeKind::symbolic);
  CHECK(s.attribute_index("colour") == 0);
  CHECK_THROWS_AS(s.attribute_index("shape"), InvalidInput);
  const InformationSystem tiny = parse_csv("o,a\nx,1\n");
  CHECK(tiny.universe().size() == 1);
  CHECK(tiny.text(0, 0) == "1");

  const auto path = std::filesystem::temp_directory_path() / "roughlat_infosys_test.csv";
  std::ofstream(path) << "o,a\n,0\nx,1\ny,1\n";
  const InformationSystem loaded = load_csv(path);
  CHECK(loaded.attributes()[0].kind == AttributeKind::numeric);
  CHECK(sim(loaded, all_of(loaded)) == Tolerance(ind(loaded, all_of(loaded))));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_csv(path), InvalidInput);
}

TEST_CASE("random systems: identities, monotonicity and compatibility") {
  Rng rng(53);
  for (int trial = 0; trial < 250; ++trial) {
    std::uniform_int_distribution<std::size_t> objects(1, 6), attrs(1, 4), value(0, 2), eps(0, 2);
    const std::size_t n = objects(rng), m = attrs(rng);
    std::string csv = "o";
    for (std::size_t a = 0; a < m; ++a) csv += ",a" + std::to_string(a);
    csv += "\nepsilon";
    for (std::size_t a = 0; a < m; ++a) csv += "," + std::to_string(eps(rng)) + ".5";
    csv += "\n";
    for (std::size_t x = 0; x < n; ++x) {
      csv += "x" + std::to_string(x);
      for (std::size_t a = 0; a < m; ++a) csv += "," + std::to_string(value(rng) * 2);
      csv += "\n";
    }
    const InformationSystem s = parse_csv(csv);
    for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << m); ++bm) {
      std::vector<std::size_t> b;
      for (std::size_t a = 0; a < m; ++a)
        if (bm >> a & 1) b.push_back(a);
      const Equivalence e = ind(s, b);
      Relation meet = Relation::full(s.universe_ptr()), join = Relation::empty(s.universe_ptr());
      for (std::size_t a : b) {
        const std::vector<std::size_t> one{a};
        meet = meet & ind(s, one).relation();
        join = join | ind(s, one).relation();
        // monotonicity against the single attribute
        CHECK(e.relation().subset_of(ind(s, one)));
        CHECK(wind(s, one).relation().subset_of(wind(s, b)));
      }
      CHECK(e.relation() == meet);
      CHECK(wind(s, b).relation() == join);
      CHECK(is_compatible(e, wind(s, b)).compatible);
      CHECK(is_compatible(e, sim(s, b)).compatible);
      for (std::size_t k = 1; k <= b.size(); ++k) CHECK(is_compatible(e, graded_tol(s, b, k)).compatible);
    }
  }
}
