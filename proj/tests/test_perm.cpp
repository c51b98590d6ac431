#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "pesol/perm.hpp"

using namespace pesol;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK(Permutation({2, 0, 1}).inverse() == Permutation({1, 2, 0}));
  CHECK(Permutation({1, 0, 3, 2}).cycle_type() == std::vector<int>{2, 2});
  CHECK(Permutation({1, 0, 2}).order() == 2);
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("composition") {
  Permutation id = Permutation::identity(3);
  Permutation c({1, 2, 0});
  CHECK(compose(id, c) == c);
  CHECK(compose(c, c.inverse()) == id);
  CHECK(compose(c, c) == Permutation({2, 0, 1}));
  CHECK_THROWS_AS(compose(c, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("group generation") {
  CHECK(PermGroup::generate(3, {}).order() == 1);
  CHECK(PermGroup::generate(3, {Permutation({1, 2, 0})}).order() == 3);

  // the fixed-point-free action of the Klein group on four points
  PermGroup klein = PermGroup::generate(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  CHECK(klein.order() == 4);
  CHECK(klein.contains(Permutation({3, 2, 1, 0})));
  for (int e = 1; e < klein.order(); ++e) {
    const Permutation& p = klein.elements()[e];
    for (int i = 0; i < 4; ++i) CHECK(p(i) != i);
  }
}

TEST_CASE("orbits") {
  CHECK(orbits(PermGroup::trivial(3)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(orbits(PermGroup::generate(3, {Permutation({1, 2, 0})})) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(orbits(PermGroup::generate(4, {Permutation({1, 0, 3, 2})})) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("semiregular and regular") {
  CHECK(is_semiregular(PermGroup::trivial(3)));
  CHECK_FALSE(is_semiregular(PermGroup::generate(3, {Permutation({1, 0, 2})})));
  CHECK(is_regular(PermGroup::generate(3, {Permutation({1, 2, 0})})));
  CHECK_FALSE(is_regular(PermGroup::trivial(2)));
}

TEST_CASE("block systems") {
  PermGroup four = PermGroup::generate(4, {Permutation({1, 2, 3, 0})});
  CHECK(is_block_system(four, {{0}, {1}, {2}, {3}}));
  CHECK(is_block_system(four, {{0, 1, 2, 3}}));
  CHECK(is_block_system(four, {{0, 2}, {1, 3}}));
  CHECK_FALSE(is_block_system(four, {{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(is_block_system(four, {{0, 1}, {1, 2, 3}}), std::invalid_argument);

  // a partition can pass for every generator yet fail for a power
  PermGroup g = PermGroup::generate(6, {Permutation({2, 4, 1, 5, 0, 3})});
  CHECK_FALSE(is_block_system(g, {{0, 1}, {2, 3}, {4, 5}}));
}

TEST_CASE("group isomorphism") {
  PermGroup c4 = PermGroup::generate(4, {Permutation({1, 2, 3, 0})});
  PermGroup klein = PermGroup::generate(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  auto self = group_iso(c4, c4);
  REQUIRE(self);
  CHECK(self->image.size() == 4);
  CHECK_FALSE(group_iso(c4, klein));

  // the two regular groups of order 6
  PermGroup c6 = PermGroup::generate(6, {Permutation({1, 2, 3, 4, 5, 0})});
  PermGroup s3 = PermGroup::generate(6, {Permutation({2, 3, 4, 5, 0, 1}),
                                         Permutation({1, 0, 5, 4, 3, 2})});
  REQUIRE(s3.order() == 6);
  CHECK_FALSE(group_iso(c6, s3));
  CHECK(group_iso(s3, s3));
}

TEST_CASE("group properties on random generators") {
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Permutation> gens;
    int count = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < count; ++k) gens.push_back(random_perm(n, rng));
    PermGroup g = PermGroup::generate(n, gens);

    // identity, closure under composition and inverse
    CHECK(g.elements()[0].is_identity());
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.contains(g.elements()[a].inverse()));
      for (int b = 0; b < g.order(); ++b)
        CHECK(g.contains(compose(g.elements()[a], g.elements()[b])));
    }

    int factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    CHECK(factorial % g.order() == 0);

    if (is_regular(g)) CHECK(g.order() == n);
    if (is_semiregular(g))
      for (const auto& orbit : orbits(g)) CHECK(static_cast<int>(orbit.size()) == g.order());
    CHECK(is_block_system(g, orbits(g)));
  }
}

TEST_CASE("inverse involution on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Permutation p = random_perm(n, rng);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(p.inverse().inverse() == p);
  }
}
