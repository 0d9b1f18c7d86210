#include <catch2/catch_amalgamated.hpp>

#include "combsim/group.hpp"
#include "test_util.hpp"

using namespace combsim;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(8) == 40320);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), DegreeTooLarge);
}

TEST_CASE("group construction validates the axioms") {
  SECTION("trivial group") {
    PermGroup g = group_from_elements({Permutation::identity(3)});
    CHECK(g.order() == 1);
    CHECK(g.degree() == 3);
  }
  SECTION("full symmetric group") {
    PermGroup g = group_from_elements(all_permutations(3));
    CHECK(g.order() == 6);
    CHECK(is_symmetric_group(g));
  }
  SECTION("order-2 subgroup") {
    PermGroup g = group_from_elements(
        {Permutation::identity(3), Permutation({2, 1, 0})});
    CHECK(g.order() == 2);
    CHECK_FALSE(is_symmetric_group(g));
  }
  SECTION("Klein four-group inside Sym(4)") {
    PermGroup g = group_from_elements(
        {Permutation::identity(4), Permutation({1, 0, 3, 2}),
         Permutation({2, 3, 0, 1}), Permutation({3, 2, 1, 0})});
    CHECK(g.order() == 4);
  }
  SECTION("duplicates collapse to set semantics") {
    PermGroup g = group_from_elements(
        {Permutation::identity(2), Permutation({1, 0}), Permutation({1, 0})});
    CHECK(g.order() == 2);
  }
  SECTION("identity plus one 3-cycle is not closed") {
    CHECK_THROWS_AS(group_from_elements(
                        {Permutation::identity(3), Permutation({1, 2, 0})}),
                    NotClosed);
  }
  SECTION("a non-closed set with inverses present reports a witness pair") {
    // Two transpositions generate a 3-cycle that is missing.
    CHECK_THROWS_MATCHES(
        group_from_elements({Permutation::identity(3), Permutation({1, 0, 2}),
                             Permutation({0, 2, 1})}),
        NotClosed,
        Catch::Matchers::MessageMatches(ContainsSubstring("missing")));
  }
  SECTION("missing identity") {
    CHECK_THROWS_AS(group_from_elements({Permutation({1, 0})}),
                    MissingIdentity);
    CHECK_THROWS_AS(group_from_elements({}), MissingIdentity);
  }
  SECTION("mixed degrees") {
    CHECK_THROWS_AS(group_from_elements(
                        {Permutation::identity(2), Permutation::identity(3)}),
                    DegreeMismatch);
  }
}

TEST_CASE("element order and membership") {
  PermGroup g = group_from_elements(all_permutations(3));
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
  CHECK(g.contains(Permutation({2, 0, 1})));
  CHECK(g.elements().front() == Permutation::identity(3));

  PermGroup klein = group_from_elements(
      {Permutation::identity(4), Permutation({1, 0, 3, 2}),
       Permutation({2, 3, 0, 1}), Permutation({3, 2, 1, 0})});
  CHECK(klein.contains(Permutation({2, 3, 0, 1})));
  CHECK_FALSE(klein.contains(Permutation({1, 2, 3, 0})));
}

TEST_CASE("is_symmetric_group checks order against degree factorial") {
  CHECK_FALSE(is_symmetric_group(group_from_elements({Permutation::identity(3)})));

  // Dihedral group of the square: order 8 inside Sym(4), 24 != 8.
  PermGroup d4 = group_from_elements(
      {Permutation::identity(4), Permutation({1, 2, 3, 0}),
       Permutation({2, 3, 0, 1}), Permutation({3, 0, 1, 2}),
       Permutation({3, 2, 1, 0}), Permutation({1, 0, 3, 2}),
       Permutation({0, 3, 2, 1}), Permutation({2, 1, 0, 3})});
  CHECK(d4.order() == 8);
  CHECK_FALSE(is_symmetric_group(d4));

  CHECK(is_symmetric_group(group_from_elements(all_permutations(4))));
  CHECK(is_symmetric_group(group_from_elements({Permutation::identity(1)})));
}
