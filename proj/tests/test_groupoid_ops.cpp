#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "support.hpp"

using namespace bht;
using namespace testing;

TEST_CASE("compress") {
  auto s = compress(Clopen::full(V2), cyl(V2, {"0"}));
  CHECK(s.cells() == std::vector<Cell>{{brick({"e"}), brick({"00"})}});

  auto self = compress(cyl(V2, {"0"}), cyl(V2, {"0"}));
  CHECK(self.source() == cyl(V2, {"0"}));
  CHECK(subset_of(self.range(), cyl(V2, {"0"})));
  CHECK_FALSE(self.range() == cyl(V2, {"0"}));

  auto three = compress(cyl(V2, {"00", "011", "1"}), cyl(V2, {"1"}));
  CHECK(three.cells().size() == 3);
  for (auto const& b : three.ran_bricks()) {
    CHECK(b.words[0].size() == 3);  // depth 2 below the brick 1
  }
  CHECK_THROWS_AS(compress(Clopen(V2), cyl(V2, {"0"})), DomainError);
  CHECK_THROWS_AS(compress(cyl(V2, {"0"}), Clopen(V2)), DomainError);
}

TEST_CASE("doubling") {
  auto [b, c] = doubling_witness(Clopen::full(V2));
  CHECK(b.cells() == std::vector<Cell>{{brick({"e"}), brick({"00"})}});
  CHECK(disjoint(b.range(), c.range()));
  CHECK_FALSE(unite(b.range(), c.range()).is_full());

  auto [d, e] = doubling_witness(cyl(V3, {"1"}));
  CHECK(subset_of(d.range(), cyl(V3, {"10"})));
  CHECK(subset_of(e.range(), cyl(V3, {"11"})));
}

TEST_CASE("bisection between clopens of equal class") {
  auto s = bisection_between(cyl(V2, {"0"}), cyl(V2, {"1"}));
  CHECK(s.cells() == std::vector<Cell>{{brick({"0"}), brick({"1"})}});
  CHECK_THROWS_AS(bisection_between(cyl(V3, {"0"}), cyl(V3, {"1", "2"})), DomainError);
  auto t = bisection_between(cyl(V3, {"0"}), cyl(V3, {"10", "11", "12"}));
  CHECK(t.source() == cyl(V3, {"0"}));
  CHECK(t.range() == cyl(V3, {"1"}));
  // the three matched sub-bricks merge back into one cell
  CHECK(t.cells() == std::vector<Cell>{{brick({"0"}), brick({"1"})}});

  Rng rng(23);
  for (auto const& space : {V3, SpaceSpec({3, 5}, 2), SpaceSpec({4, 7}, 1), SpaceSpec({2, 3}, 1)}) {
    auto sp = oracle::of(space);
    for (int i = 0; i < 100; ++i) {
      auto x = random_clopen(space, rng, 5), y = random_clopen(space, rng, 5);
      if (x.empty() || y.empty()) {
        continue;
      }
      if (h0_class(x) != h0_class(y)) {
        CHECK_THROWS_AS(bisection_between(x, y), DomainError);
        continue;
      }
      auto b = bisection_between(x, y);
      CHECK(oracle::same_set(sp, b.dom_bricks(), x.bricks()));
      CHECK(oracle::same_set(sp, b.ran_bricks(), y.bricks()));
    }
  }
}

TEST_CASE("multisection") {
  auto m = multisection(cyl(V4, {"0"}), cyl(V4, {"1"}), cyl(V4, {"2"}));
  CHECK(identical(m.element, table(V4, {{"0", "1"}, {"1", "2"}, {"2", "0"}, {"3", "3"}})));
  CHECK_THROWS_AS(multisection(cyl(V4, {"0"}), cyl(V4, {"0"}), cyl(V4, {"2"})), DomainError);
  CHECK_THROWS_AS(multisection(cyl(V3, {"0"}), cyl(V3, {"10", "11"}), cyl(V3, {"2"})),
                  DomainError);

  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    auto g = random_multisection(V3, rng);
    auto o = order(g, 10);
    CHECK((o && *o == 3));
    auto p = random_point(V3, rng);
    CHECK(apply(g, apply(g, apply(g, p))) == p);
  }
}

TEST_CASE("vigor") {
  auto id = vigor_witness(cyl(V2, {"0"}), cyl(V2, {"00"}), cyl(V2, {"0"}));
  CHECK(is_identity(id));
  CHECK(classify_vigor(cyl(V2, {"0"}), cyl(V2, {"00"}), cyl(V2, {"0"})) == VigorCase::contained);

  auto x = cyl(V2, {"0"}), y1 = cyl(V2, {"00"}), y2 = cyl(V2, {"01"});
  CHECK(classify_vigor(x, y1, y2) == VigorCase::direct);
  auto g = vigor_witness(x, y1, y2);
  CHECK(order(g, 10) == 3u);
  CHECK(subset_of(closed_support(g), x));
  CHECK(oracle::maps_into(oracle::of(V2), oracle::cells_of(g), y1.bricks(), y2.bricks()));

  auto z2 = cyl(V2, {"000"});
  CHECK(classify_vigor(x, y1, z2) == VigorCase::two_step);
  auto h = vigor_witness(x, y1, z2);
  CHECK(subset_of(closed_support(h), x));
  CHECK(oracle::maps_into(oracle::of(V2), oracle::cells_of(h), y1.bricks(), z2.bricks()));

  CHECK_THROWS_AS(vigor_witness(Clopen::full(V2), y1, y2), DomainError);
  CHECK_THROWS_AS(vigor_witness(x, y1, Clopen(V2)), DomainError);
  CHECK_THROWS_AS(vigor_witness(x, x, y2), DomainError);
}

TEST_CASE("distinct conjugates") {
  auto swap = table(V2, {{"0", "1"}, {"1", "0"}});
  auto fam  = distinct_conjugates(swap, 3);
  REQUIRE(fam.members.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(equals(fam.members[i].value, conjugate(fam.members[i].conjugator, swap)));
    CHECK(subset_of(image(fam.members[i].value, fam.probe), fam.members[i].target));
    for (std::size_t j = 0; j < i; ++j) {
      CHECK_FALSE(equals(fam.members[i].value, fam.members[j].value));
      CHECK(disjoint(fam.members[i].target, fam.members[j].target));
    }
  }
  CHECK_THROWS_AS(distinct_conjugates(TableElement::identity(V2), 2), DomainError);
}

TEST_CASE("compressibility at 0^inf") {
  auto x0 = point(V2, "root:0 (0)");

  auto g = table(V2, {{"0", "0"}, {"10", "11"}, {"11", "10"}});
  auto w = compressibility_support(x0, g);
  REQUIRE(w.subbase_set);
  CHECK_FALSE(point_in(x0, *w.subbase_set));
  CHECK(subset_of(closed_support(g), *w.subbase_set));

  auto u1 = cyl(V2, {"10"}), u2 = cyl(V2, {"11"});
  auto w2 = compressibility_compress(x0, u1, u2);
  REQUIRE(w2.element);
  CHECK(x0.in(w2.neighbourhood));
  CHECK(disjoint(closed_support(*w2.element), Clopen(V2, {w2.neighbourhood})));
  CHECK(subset_of(image(*w2.element, u1), u2));

  auto v2 = cyl(V2, {"110"}), v3 = cyl(V2, {"111"});
  auto w3 = compressibility_separate(x0, u1, v2, v3);
  REQUIRE(w3.element);
  CHECK(x0.in(w3.neighbourhood));
  CHECK(disjoint(closed_support(*w3.element), Clopen(V2, {w3.neighbourhood})));
  CHECK(disjoint(image(*w3.element, u1), v3));
  CHECK(disjoint(closed_support(*w3.element), v2));

  CHECK_THROWS_AS(compressibility_support(x0, table(V2, {{"0", "1"}, {"1", "0"}})), DomainError);
  CHECK_THROWS_AS(compressibility_compress(x0, cyl(V2, {"0"}), u2), DomainError);
}
