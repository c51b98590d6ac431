#include <doctest.h>

#include <stdexcept>

#include <random>
#include <sstream>

#include "pesol/construct.hpp"
#include "pesol/io.hpp"
#include "pesol/solution.hpp"

using namespace pesol;

namespace {

RawTables random_tables(int n, std::mt19937& rng) {
  RawTables t{std::vector<std::vector<int>>(n, std::vector<int>(n)),
              std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t.product[x][y] = static_cast<int>(rng() % n);
      t.theta[x][y] = static_cast<int>(rng() % n);
    }
  return t;
}

RawTables mod2_addition_with_shift_theta() {
  // product x+y mod 2, theta_x(y) = x+y: fails the composition identity
  return RawTables{{{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}};
}

}  // namespace

TEST_CASE("pentagon verifier on known tables") {
  CHECK_FALSE(pentagon_violation(identity_solution(3).tables()));
  CHECK_FALSE(pentagon_violation(xor_solution(2).tables()));

  // product = addition mod 2 with identity theta rows is a solution
  RawTables add_id{{{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}};
  CHECK_FALSE(pentagon_violation(add_id));

  // ... but with theta_x(y) = x+y it is not
  RawTables bad = mod2_addition_with_shift_theta();
  auto witness = pentagon_violation(bad);
  REQUIRE(witness);
  CHECK(*witness == Triple{0, 1, 0});
  EquationChecks eqs = component_equations(bad);
  CHECK_FALSE(eqs.associativity);
  REQUIRE(eqs.compatibility);
  CHECK(*eqs.compatibility == Triple{0, 1, 0});
  REQUIRE(eqs.composition);
  CHECK(*eqs.composition == Triple{0, 1, 0});

  CHECK_THROWS_AS(pentagon_violation(RawTables{{{0, 2}, {0, 0}}, {{0, 1}, {0, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("pentagon equals the three component identities") {
  std::mt19937 rng(99);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 2000; ++trial) {
      RawTables t = random_tables(n, rng);
      CHECK((pentagon_violation(t) == std::nullopt) == component_equations(t).all_ok());
    }
  // biased sampling: left-zero products with arbitrary theta hit the
  // composition identity specifically
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    RawTables t = random_tables(n, rng);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t.product[x][y] = x;
    EquationChecks eqs = component_equations(t);
    CHECK_FALSE(eqs.associativity);
    CHECK_FALSE(eqs.compatibility);
    CHECK((pentagon_violation(t) == std::nullopt) == !eqs.composition);
  }
}

TEST_CASE("solution construction rejects bad tables") {
  CHECK_THROWS_AS(Solution{mod2_addition_with_shift_theta()}, std::invalid_argument);
  CHECK_NOTHROW(Solution(RawTables{{{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}}));
}

TEST_CASE("profile flags") {
  SolutionProfile xor2 = profile(xor_solution(2));
  CHECK(xor2.commutative);
  CHECK(xor2.non_degenerate);
  CHECK(xor2.bijective);
  CHECK(xor2.involutive);
  CHECK_FALSE(xor2.idempotent);
  CHECK(xor2.left_zero_underlying);
  REQUIRE(xor2.group);
  PermGroup klein = resolve_group_spec("C2xC2").regular_representation();
  CHECK(group_iso(*xor2.group, klein));

  // identity solution: s itself is the identity map on pairs
  SolutionProfile id3 = profile(identity_solution(3));
  CHECK(id3.involutive);
  CHECK(id3.idempotent);
  CHECK(id3.left_zero_underlying);

  SolutionProfile c4 = profile(group_solution("C4"));
  CHECK(c4.commutative);
  CHECK(c4.non_degenerate);
  CHECK(c4.bijective);
  CHECK_FALSE(c4.involutive);

  // constant theta rows from an idempotent endomorphism: degenerate solution
  Semigroup z2({{0, 1}, {1, 0}});
  RawTables endo = endomorphism_tables(z2, {0, 0});
  SolutionProfile endo_prof = profile(Solution(endo));
  CHECK_FALSE(endo_prof.non_degenerate);
  CHECK_FALSE(endo_prof.group.has_value());
}

TEST_CASE("associated group") {
  CHECK(assoc_group(identity_solution(4)).order() == 1);
  PermGroup g3 = assoc_group(group_solution("C3"));
  CHECK(g3.order() == 3);
  CHECK(is_regular(g3));
  PermGroup g22 = assoc_group(cyclic_solution(2, 2));
  CHECK(g22.order() == 2);
  CHECK(orbits(g22).size() == 2);

  Semigroup z2({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(assoc_group(Solution(endomorphism_tables(z2, {0, 0}))),
                  std::invalid_argument);
}

TEST_CASE("subsolutions and restriction") {
  Solution c4 = group_solution("C4");
  std::vector<int> all{0, 1, 2, 3};
  CHECK(is_subsolution(c4, all));
  CHECK(restrict_solution(c4, all) == c4);
  CHECK(is_subsolution(c4, {0, 2}));
  CHECK_FALSE(is_subsolution(c4, {0, 1}));
  CHECK(solutions_isomorphic(restrict_solution(c4, {0, 2}), group_solution("C2")));
  CHECK_THROWS_AS(is_subsolution(c4, {}), std::invalid_argument);
  CHECK_THROWS_AS(restrict_solution(c4, {0, 1}), std::invalid_argument);

  // an orbit of a left-zero solution is a subsolution
  Solution cyc = cyclic_solution(2, 3);
  auto orbit_list = orbits(assoc_group(cyc));
  for (const auto& orbit : orbit_list) CHECK(is_subsolution(cyc, orbit));
}

TEST_CASE("solution isomorphism") {
  Solution c4 = group_solution("C4");
  auto self = solutions_isomorphic(c4, c4);
  REQUIRE(self);
  CHECK(is_solution_isomorphism(c4, c4, self->images()));

  CHECK_FALSE(solutions_isomorphic(c4, group_solution("C2xC2")));
  CHECK_FALSE(solutions_isomorphic(cyclic_solution(1, 4), cyclic_solution(2, 2)));

  // symmetry: the witness inverts
  Solution a = cyclic_solution(2, 2);
  Solution b = left_zero_action_solution(4, {Permutation({1, 0, 3, 2})}, {0, 2});
  auto fwd = solutions_isomorphic(a, b);
  REQUIRE(fwd);
  CHECK(is_solution_isomorphism(b, a, fwd->inverse().images()));
}

TEST_CASE("theta action consistency") {
  CHECK(theta_action_consistent(identity_solution(3)));
  CHECK(theta_action_consistent(group_solution("C3")));
  CHECK(theta_action_consistent(cyclic_solution(2, 3)));
  CHECK(theta_action_consistent(xor_solution(2)));
}

TEST_CASE("every orbit holds an identity theta row") {
  for (const Solution& sol :
       {group_solution("C4"), cyclic_solution(3, 2), xor_solution(2), identity_solution(3)}) {
    PermGroup g = assoc_group(sol);
    for (const auto& orbit : orbits(g)) {
      bool found = false;
      for (int z : orbit)
        if (Permutation(sol.theta_row(z)).is_identity()) found = true;
      CHECK(found);
    }
    CHECK(is_semiregular(g));
  }
}

TEST_CASE("pesol format round trip") {
  Solution sol = cyclic_solution(2, 3);
  std::stringstream buffer;
  write_solution(buffer, sol);
  std::string first = buffer.str();
  Solution back = read_solution(buffer);
  CHECK(back == sol);
  std::stringstream again;
  write_solution(again, back);
  CHECK(again.str() == first);

  std::stringstream json_buffer;
  write_solution(json_buffer, sol, Format::json);
  CHECK(read_solution(json_buffer) == sol);
}

TEST_CASE("format errors carry line numbers") {
  std::stringstream bad("PESOL 1\n2\n0 0\n1 1\n0 1\n0 oops\n");
  try {
    read_raw_tables(bad);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 6") != std::string::npos);
  }
  std::stringstream wrong_header("PENTA 1\n1\n0\n0\n");
  CHECK_THROWS_AS(read_raw_tables(wrong_header), std::runtime_error);
}
