#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "combsim/generators.hpp"
#include "combsim/pattern.hpp"
#include "test_util.hpp"

using namespace combsim;
using test::space3;
using test::space_from_pairs;

TEST_CASE("equality pattern groups pairs by distance") {
  SECTION("discrete 3-point space has one block") {
    EqualityPattern p = equality_pattern(discrete_space(3, Rational(1)));
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0] ==
          std::vector<PointPair>{{0, 1}, {0, 2}, {1, 2}});
  }
  SECTION("rectangle splits into the three side/diagonal blocks") {
    EqualityPattern p = equality_pattern(rectangle_example());
    REQUIRE(p.blocks.size() == 3);
    CHECK(p.blocks[0] == std::vector<PointPair>{{0, 1}, {2, 3}});
    CHECK(p.blocks[1] == std::vector<PointPair>{{0, 2}, {1, 3}});
    CHECK(p.blocks[2] == std::vector<PointPair>{{0, 3}, {1, 2}});
    CHECK(p.block_sizes() == std::vector<int>{2, 2, 2});
  }
  SECTION("isoceles triangle: two-block pattern") {
    // d(0,1) = d(1,2) = a, d(0,2) = b
    EqualityPattern p =
        equality_pattern(space3(Rational(1), Rational(2), Rational(1)));
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0] == std::vector<PointPair>{{0, 1}, {1, 2}});
    CHECK(p.blocks[1] == std::vector<PointPair>{{0, 2}});
  }
  SECTION("single point: empty pattern") {
    EqualityPattern p = equality_pattern(SemimetricSpace(1, {Rational(0)}));
    CHECK(p.n == 1);
    CHECK(p.blocks.empty());
  }
}

TEST_CASE("block count equals value count minus one") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    int blocks = 1 + static_cast<int>(rng() % m);
    SemimetricSpace s = random_space(n, blocks, rng());
    CHECK(equality_pattern(s).blocks.size() + 1 == s.value_set().size());
  }
}

TEST_CASE("make_pattern validates and canonicalizes") {
  SECTION("canonical order: size descending, then smallest pair") {
    EqualityPattern p = make_pattern(
        3, {{{0, 2}}, {{1, 2}, {0, 1}}});
    REQUIRE(p.blocks.size() == 2);
    CHECK(p.blocks[0] == std::vector<PointPair>{{0, 1}, {1, 2}});
    CHECK(p.blocks[1] == std::vector<PointPair>{{0, 2}});
  }
  SECTION("ties on size break by lexicographically smallest member") {
    EqualityPattern p = make_pattern(
        4, {{{0, 3}, {1, 2}}, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
    CHECK(p.blocks[0].front() == PointPair{0, 1});
    CHECK(p.blocks[1].front() == PointPair{0, 2});
    CHECK(p.blocks[2].front() == PointPair{0, 3});
  }
  SECTION("missing or duplicated pairs are rejected") {
    CHECK_THROWS_AS(make_pattern(3, {{{0, 1}, {0, 2}}}), ValidationError);
    CHECK_THROWS_AS(
        make_pattern(3, {{{0, 1}, {0, 2}, {1, 2}}, {{0, 1}}}),
        ValidationError);
    CHECK_THROWS_AS(make_pattern(3, {{{0, 1}, {0, 2}, {1, 2}}, {}}),
                    ValidationError);
    CHECK_THROWS_AS(make_pattern(2, {{{0, 1}, {1, 0}}}), ValidationError);
  }
}

TEST_CASE("pattern fingerprints") {
  CHECK(pattern_fingerprint(equality_pattern(discrete_space(3, Rational(2)))) ==
        "n=3;sizes=3;blocks=0-1,0-2,1-2");
  CHECK(pattern_fingerprint(equality_pattern(rectangle_example())) ==
        "n=4;sizes=2,2,2;blocks=0-1,2-3|0-2,1-3|0-3,1-2");
  CHECK(pattern_fingerprint(equality_pattern(strongly_rigid_space(4))) ==
        "n=4;sizes=1,1,1,1,1,1;blocks=0-1|0-2|0-3|1-2|1-3|2-3");

  // Equal patterns give equal strings; same sizes with different blocks don't.
  SemimetricSpace a = space3(Rational(1), Rational(1), Rational(2));
  SemimetricSpace b = space3(Rational(5), Rational(5), Rational(9));
  CHECK(pattern_fingerprint(equality_pattern(a)) ==
        pattern_fingerprint(equality_pattern(b)));
  SemimetricSpace c = space3(Rational(1), Rational(2), Rational(1));
  CHECK(equality_pattern(a).block_sizes() ==
        equality_pattern(c).block_sizes());
  CHECK(pattern_fingerprint(equality_pattern(a)) !=
        pattern_fingerprint(equality_pattern(c)));
}

TEST_CASE("subspace pattern equals the trace of the parent pattern") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    SemimetricSpace s =
        random_space(n, 1 + static_cast<int>(rng() % m), rng());

    // Random nonempty subset, kept in increasing order.
    std::vector<int> points;
    while (points.empty()) {
      points.clear();
      for (int i = 0; i < n; ++i) {
        if (rng() % 2 == 0) points.push_back(i);
      }
    }
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < points.size(); ++k) {
      position[static_cast<std::size_t>(points[k])] = static_cast<int>(k);
    }

    // Trace each parent block onto the subset and rebuild the pattern.
    std::vector<std::vector<PointPair>> traced;
    for (const auto& block : equality_pattern(s).blocks) {
      std::vector<PointPair> trace;
      for (const auto& [i, j] : block) {
        if (position[static_cast<std::size_t>(i)] >= 0 &&
            position[static_cast<std::size_t>(j)] >= 0) {
          int a = position[static_cast<std::size_t>(i)];
          int b = position[static_cast<std::size_t>(j)];
          trace.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
      if (!trace.empty()) traced.push_back(std::move(trace));
    }
    EqualityPattern expected =
        make_pattern(static_cast<int>(points.size()), std::move(traced));
    CHECK(equality_pattern(s.subspace(points)) == expected);
  }
}
