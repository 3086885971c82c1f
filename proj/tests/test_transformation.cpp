#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ptv/rng.hpp"
#include "ptv/transformation.hpp"

using namespace ptv;

TEST_CASE("literal codec") {
  SECTION("parses points and undefined entries") {
    const PartialTransformation t = parse_transformation("2,2,-", 3);
    CHECK(t.degree() == 3);
    CHECK(t.image(1) == 2);
    CHECK(t.image(2) == 2);
    CHECK_FALSE(t.defined(3));
  }

  SECTION("all-undefined literal is the zero map") {
    CHECK(parse_transformation("-,-", 2) == PartialTransformation::zero(2));
  }

  SECTION("rejects out-of-range entries with their position") {
    CHECK_THROWS_AS(parse_transformation("3,1", 2), ParseError);
    try {
      parse_transformation("3,1", 2);
    } catch (const ParseError& e) {
      CHECK(e.position() == 1);
    }
  }

  SECTION("rejects wrong token counts") {
    CHECK_THROWS_AS(parse_transformation("1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_transformation("1,2,3", 2), ParseError);
    try {
      parse_transformation("1,2,3", 2);
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
  }

  SECTION("rejects malformed tokens") {
    try {
      parse_transformation("1,x", 2);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_transformation("1,", 2), ParseError);
    CHECK_THROWS_AS(parse_transformation("1, 2", 2), ParseError);
  }

  SECTION("format inverts parse over the whole carrier") {
    for (int n = 1; n <= 3; ++n)
      for (const PartialTransformation& x : enumerate_all(n))
        CHECK(parse_transformation(format_transformation(x), n) == x);
  }
}

TEST_CASE("composition") {
  SECTION("applies left to right") {
    const PartialTransformation x{2, 0};
    const PartialTransformation y{0, 1};
    CHECK(compose(x, y) == PartialTransformation{1, 0});
  }

  SECTION("zero absorbs on both sides") {
    for (int n = 1; n <= 3; ++n) {
      const PartialTransformation zero = PartialTransformation::zero(n);
      for (const PartialTransformation& x : enumerate_all(n)) {
        CHECK(compose(x, zero) == zero);
        CHECK(compose(zero, x) == zero);
      }
    }
  }

  SECTION("identity is neutral") {
    const PartialTransformation id = PartialTransformation::identity(3);
    CHECK(compose(id, id) == id);
    const PartialTransformation x{3, 0, 2};
    CHECK(compose(id, x) == x);
    CHECK(compose(x, id) == x);
  }

  SECTION("degree mismatch is rejected") {
    CHECK_THROWS_AS(compose(PartialTransformation::zero(2), PartialTransformation::zero(3)),
                    std::invalid_argument);
  }

  SECTION("associative on random triples") {
    SplitMix64 rng(2024);
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t count = transformation_count(n);
      for (int i = 0; i < 1000; ++i) {
        const PartialTransformation x = nth_transformation(n, rng.below(count));
        const PartialTransformation y = nth_transformation(n, rng.below(count));
        const PartialTransformation z = nth_transformation(n, rng.below(count));
        REQUIRE(compose(compose(x, y), z) == compose(x, compose(y, z)));
      }
    }
  }
}

TEST_CASE("structural statistics") {
  SECTION("collapsing map") {
    const TransformationStats s = analyze(PartialTransformation{1, 1});
    CHECK(s.domain == std::vector<int>{1, 2});
    CHECK(s.image == std::vector<int>{1});
    CHECK(s.rank == 1);
    CHECK(s.z == 0);
    CHECK(s.fiber_size(1) == 2);
  }

  SECTION("partial map") {
    const TransformationStats s = analyze(PartialTransformation{1, 0});
    CHECK(s.domain == std::vector<int>{1});
    CHECK(s.rank == 1);
    CHECK(s.z == 1);
    CHECK(s.zset == std::vector<int>{2});
    CHECK(s.fiber_size(1) == 1);
  }

  SECTION("zero map") {
    const TransformationStats s = analyze(PartialTransformation::zero(3));
    CHECK(s.rank == 0);
    CHECK(s.z == 3);
    CHECK(s.fibers.empty());
  }

  SECTION("fibers partition the domain") {
    for (int n = 1; n <= 3; ++n)
      for (const PartialTransformation& a : enumerate_all(n)) {
        const TransformationStats s = analyze(a);
        REQUIRE(s.domain.size() + s.zset.size() == static_cast<std::size_t>(n));
        std::set<int> covered;
        std::size_t total = 0;
        for (const auto& [t, fiber] : s.fibers) {
          total += fiber.size();
          covered.insert(fiber.begin(), fiber.end());
        }
        REQUIRE(total == s.domain.size());
        REQUIRE(covered == std::set<int>(s.domain.begin(), s.domain.end()));
      }
  }
}

TEST_CASE("type vectors") {
  SECTION("identity has all singleton fibers") {
    CHECK(type_of(PartialTransformation::identity(3)).alpha == std::vector<int>{3, 0, 0});
  }

  SECTION("zero map has the empty type") {
    CHECK(type_of(PartialTransformation::zero(3)).alpha == std::vector<int>{0, 0, 0});
  }

  SECTION("one full fiber") {
    CHECK(type_of(PartialTransformation{2, 2, 2}).alpha == std::vector<int>{0, 0, 1});
  }

  SECTION("sums recover domain size and rank") {
    for (int n = 1; n <= 3; ++n)
      for (const PartialTransformation& a : enumerate_all(n)) {
        const TypeVector t = type_of(a);
        const TransformationStats s = analyze(a);
        REQUIRE(t.valid());
        REQUIRE(t.defined_points() == static_cast<int>(s.domain.size()));
        REQUIRE(t.rank() == s.rank);
        REQUIRE(t.z() == s.z);
      }
  }

  SECTION("formatting") {
    CHECK(format_type(type_of(PartialTransformation{1, 1})) == "(0,1)");
  }
}

TEST_CASE("enumeration") {
  SECTION("counts are (n+1)^n and elements are distinct") {
    for (int n = 1; n <= 4; ++n) {
      const std::vector<PartialTransformation> all = enumerate_all(n);
      REQUIRE(all.size() == transformation_count(n));
      for (std::size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1] < all[i]);
    }
  }

  SECTION("order runs from the constant-1 map to the zero map") {
    const std::vector<PartialTransformation> all = enumerate_all(2);
    CHECK(all.front() == PartialTransformation{1, 1});
    CHECK(all.back() == PartialTransformation::zero(2));
  }

  SECTION("index round-trips") {
    for (int n = 1; n <= 3; ++n)
      for (std::uint64_t i = 0; i < transformation_count(n); ++i)
        REQUIRE(index_of(nth_transformation(n, i)) == i);
  }

  SECTION("degree cap") {
    CHECK_THROWS_AS(enumerate_all(6), BudgetError);
    CHECK_NOTHROW(enumerate_all(6, 6));
  }
}
