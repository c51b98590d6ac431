#include <doctest.h>

#include <stdexcept>

#include <sstream>
#include <string>

#include "pesol/algebra.hpp"
#include "pesol/construct.hpp"
#include "pesol/io.hpp"

using namespace pesol;

namespace {

Semigroup mod_addition(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return Semigroup(std::move(t));
}

}  // namespace

TEST_CASE("semigroup construction") {
  CHECK(is_left_zero(left_zero_semigroup(5)));
  CHECK_NOTHROW(mod_addition(3));
  try {
    Semigroup bad({{0, 1}, {0, 0}});
    FAIL("expected a rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(1,0,1)") != std::string::npos);
  }
}

TEST_CASE("weak commutativity") {
  CHECK(is_weak_commutative(mod_addition(4)));
  CHECK(is_weak_commutative(left_zero_semigroup(4)));
  Semigroup s3(GroupTable::semidirect_cyclic(3, 2).table());
  CHECK_FALSE(is_weak_commutative(s3));
}

TEST_CASE("left zero predicate") {
  CHECK(is_left_zero(left_zero_semigroup(3)));
  CHECK_FALSE(is_left_zero(mod_addition(2)));
}

TEST_CASE("automorphisms") {
  Semigroup z4 = mod_addition(4);
  CHECK(is_automorphism(z4, Permutation::identity(4)));
  CHECK(is_automorphism(z4, Permutation({0, 3, 2, 1})));        // x -> 3x
  CHECK_FALSE(is_automorphism(z4, Permutation({1, 2, 3, 0})));  // x -> x+1

  // on a left-zero semigroup every permutation works
  Semigroup lz = left_zero_semigroup(4);
  CHECK(is_automorphism(lz, Permutation({2, 0, 3, 1})));
}

TEST_CASE("congruences and quotients") {
  Semigroup z4 = mod_addition(4);
  Congruence singleton(z4, {{0}, {1}, {2}, {3}});
  CHECK(singleton.num_classes() == 4);
  CHECK_FALSE(singleton.quotient_is_left_zero());
  CHECK(quotient(z4, singleton).table() == z4.table());

  Congruence all(z4, {{0, 1, 2, 3}});
  CHECK(all.num_classes() == 1);
  CHECK(all.quotient_is_left_zero());  // trivial semigroup
  CHECK(quotient(z4, all).size() == 1);

  Congruence evens(z4, {{0, 2}, {1, 3}});
  CHECK(quotient(z4, evens).table() == mod_addition(2).table());

  CHECK_THROWS_AS(Congruence(z4, {{0, 1}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("left groups") {
  PermGroup c2 = PermGroup::generate(2, {Permutation({1, 0})});
  CHECK(left_group(1, c2).table() == mod_addition(2).table());
  CHECK(is_left_zero(left_group(2, PermGroup::trivial(1))));

  Semigroup lg = left_group(2, c2);
  CHECK(is_weak_commutative(lg));
  CHECK_FALSE(is_left_zero(lg));

  // the congruence by first component has a left-zero quotient
  Congruence by_e(lg, {{0, 1}, {2, 3}});
  CHECK(by_e.quotient_is_left_zero());
  CHECK(is_left_zero(quotient(lg, by_e)));
  CHECK(quotient(lg, by_e).size() == 2);

  // weak commutativity of E x G tracks commutativity of G
  PermGroup s3 = GroupTable::semidirect_cyclic(3, 2).regular_representation();
  CHECK_FALSE(is_weak_commutative(left_group(2, s3)));
}

TEST_CASE("semigroup files") {
  std::stringstream file("3\n0 1 2\n1 2 0\n2 0 1\n");
  Semigroup s = read_semigroup(file);
  CHECK(s.table() == mod_addition(3).table());
  std::stringstream bad("2\n0 1\n0 2\n");
  CHECK_THROWS(read_semigroup(bad));  // out-of-range entry
}

TEST_CASE("quotients stay associative") {
  Semigroup lg = left_group(3, PermGroup::generate(2, {Permutation({1, 0})}));
  Congruence by_e(lg, {{0, 1}, {2, 3}, {4, 5}});
  CHECK_NOTHROW(quotient(lg, by_e));  // Semigroup construction re-checks associativity
}
