#include <doctest.h>

#include <stdexcept>

#include "pesol/construct.hpp"
#include "pesol/retraction.hpp"

using namespace pesol;

TEST_CASE("retract basics") {
  RetractionData id3 = retract(identity_solution(3));
  CHECK(id3.quotient.size() == 1);
  CHECK(id3.classes == std::vector<std::vector<int>>{{0, 1, 2}});

  RetractionData c4 = retract(group_solution("C4"));
  CHECK(c4.quotient.size() == 4);
  CHECK(solutions_isomorphic(c4.quotient, group_solution("C4")));

  RetractionData cyc = retract(cyclic_solution(3, 2));
  CHECK(cyc.quotient.size() == 2);
  CHECK(solutions_isomorphic(cyc.quotient, group_solution("C2")));
}

TEST_CASE("retract requires a commutative non-degenerate solution") {
  Semigroup z2({{0, 1}, {1, 0}});
  Solution degenerate(endomorphism_tables(z2, {0, 0}));
  CHECK_THROWS_AS(retract(degenerate), std::invalid_argument);
}

TEST_CASE("irretractability") {
  CHECK_FALSE(is_irretractable(identity_solution(2)));
  for (const char* spec : {"C2", "C3", "C4", "C2xC2", "C6", "C3:C2", "C8", "C2xC2xC2"})
    CHECK(is_irretractable(group_solution(spec)));
  CHECK_FALSE(is_irretractable(cyclic_solution(2, 2)));
  CHECK_FALSE(is_irretractable(cyclic_solution(3, 2)));
}

TEST_CASE("cardinalities") {
  RetractCardinalities id4 = retract_cardinalities(identity_solution(4));
  CHECK(id4.retract_size == 1);
  CHECK(id4.group_order == 1);
  CHECK(id4.class_sizes == std::vector<int>{4});

  RetractCardinalities c6 = retract_cardinalities(group_solution("C6"));
  CHECK(c6.retract_size == 6);
  CHECK(c6.class_sizes == std::vector<int>(6, 1));

  RetractCardinalities cyc = retract_cardinalities(cyclic_solution(2, 3));
  CHECK(cyc.size == 6);
  CHECK(cyc.group_order == 3);
  CHECK(cyc.retract_size == 3);
  CHECK(cyc.class_sizes == std::vector<int>(3, 2));
}

TEST_CASE("retraction tower") {
  CHECK(retract_tower(group_solution("C4")).size() == 1);

  std::vector<Solution> tower = retract_tower(identity_solution(3));
  REQUIRE(tower.size() == 2);
  CHECK(tower[1].size() == 1);

  CHECK(retract_tower(cyclic_solution(2, 3)).size() == 2);
}

TEST_CASE("retract is idempotent up to isomorphism") {
  for (const Solution& sol :
       {identity_solution(4), cyclic_solution(2, 2), cyclic_solution(3, 2), xor_solution(2)}) {
    Solution once = retract(sol).quotient;
    Solution twice = retract(once).quotient;
    CHECK(solutions_isomorphic(once, twice));
  }
}

TEST_CASE("orbit subsolutions realize the retract") {
  // single orbit: the witness is essentially the identity
  CHECK(orbit_retract_isomorphisms(group_solution("C3")).size() == 1);

  std::vector<OrbitRetractWitness> witnesses = orbit_retract_isomorphisms(cyclic_solution(2, 2));
  CHECK(witnesses.size() == 2);

  CHECK(orbit_retract_isomorphisms(cyclic_solution(3, 2)).size() == 3);

  // non-left-zero input is rejected
  RawTables add_id{{{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}};
  CHECK_THROWS_AS(orbit_retract_isomorphisms(Solution(add_id)), std::invalid_argument);
}
