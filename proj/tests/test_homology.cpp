#include <catch_amalgamated.hpp>

#include <bht.hpp>

using namespace bht;

namespace {

  AbelianGroupDesc group(std::vector<std::uint64_t> orders) {
    return AbelianGroupDesc(std::move(orders));
  }

}  // namespace

TEST_CASE("abelian group descriptions") {
  CHECK(group({}).trivial());
  CHECK(group({1, 1}).trivial());
  CHECK(group({6}) == group({2, 3}));
  CHECK_FALSE(group({4}) == group({2, 2}));
  CHECK(group({12}).primary() == std::vector<std::uint64_t>{3, 4});
  CHECK(group({2, 4}).to_string() == "Z_2 x Z_4");
  CHECK(group({}).to_string() == "0");
  CHECK(group({2, 4, 4}).order() == 32);
}

TEST_CASE("homology") {
  auto s = SpaceSpec::uniform(2, 3, 5);
  CHECK(homology(s, 0) == group({2}));
  CHECK(homology(s, 1) == group({2}));
  CHECK(homology(s, 2).trivial());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(homology(SpaceSpec::uniform(1, 2, 1), i).trivial());
  }
  for (int r = 1; r <= 3; ++r) {
    SpaceSpec m({3, 3, 5}, r);
    CHECK(homology(m, 0) == group({2}));
    CHECK(homology(m, 1) == group({2, 2}));
    CHECK(homology(m, 2) == group({2}));
    CHECK(homology(m, 3).trivial());
  }
  CHECK(homology(SpaceSpec({4, 7}, 1), 1) == group({3}));
}

TEST_CASE("abelianization") {
  CHECK(abelianization(SpaceSpec::uniform(1, 3, 1)) == group({2}));
  CHECK(abelianization(SpaceSpec::uniform(2, 7, 1)) == group({12}));
  CHECK(abelianization(SpaceSpec::uniform(3, 5, 1)) == group({2, 4, 4}));
  CHECK(abelianization(SpaceSpec::uniform(2, 2, 1)).trivial());
  CHECK(abelianization(SpaceSpec::uniform(1, 4, 2)).trivial());
  CHECK(abelianization(SpaceSpec::uniform(3, 4, 1)) == group({3, 3}));
  CHECK(abelianization(SpaceSpec::uniform(3, 7, 1)) == group({6, 6}));
  CHECK(abelianization(SpaceSpec({2, 3}, 1)).trivial());
  CHECK_THROWS_AS(abelianization(SpaceSpec({3, 5}, 1)), DomainError);
  CHECK_THROWS_AS(proper_characters(SpaceSpec({3, 5}, 1)), DomainError);
}

TEST_CASE("proper characters") {
  CHECK(proper_characters(SpaceSpec::uniform(1, 2, 1)).families.empty());
  auto c13 = proper_characters(SpaceSpec::uniform(1, 3, 1));
  CHECK(c13.families == std::vector<CharacterFamily>{{1, 2}});
  auto c27 = proper_characters(SpaceSpec::uniform(2, 7, 1));
  CHECK(c27.families == std::vector<CharacterFamily>{{1, 12}});
  auto c34 = proper_characters(SpaceSpec::uniform(3, 4, 1));
  CHECK(c34.families == std::vector<CharacterFamily>{{2, 3}});
  CHECK(c34.dual.order() == 9);
  auto c35 = proper_characters(SpaceSpec::uniform(3, 5, 1));
  CHECK(c35.families == std::vector<CharacterFamily>{{1, 2}, {2, 4}});
  CHECK(c35.count() == 3);
}

TEST_CASE("perfect") {
  CHECK(is_perfect(SpaceSpec({2, 3}, 1)));
  CHECK(is_perfect(SpaceSpec::uniform(2, 2, 1)));
  CHECK_FALSE(is_perfect(SpaceSpec::uniform(1, 3, 1)));
  CHECK_FALSE(is_perfect(SpaceSpec({3, 5}, 1)));
  CHECK(is_perfect(SpaceSpec({4, 6}, 2)));
}
