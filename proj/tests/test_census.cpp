#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "pesol/census.hpp"
#include "pesol/construct.hpp"
#include "pesol/retraction.hpp"

using namespace pesol;

namespace {

std::vector<RawTables> entry_tables(const CensusResult& r) {
  std::vector<RawTables> out;
  for (const auto& e : r.entries) out.push_back(e.solution.tables());
  return out;
}

// equality of the two classifications up to isomorphism
bool same_classes(const CensusResult& a, const CensusResult& b) {
  if (a.entries.size() != b.entries.size()) return false;
  std::vector<char> hit(b.entries.size(), 0);
  for (const auto& ea : a.entries) {
    bool found = false;
    for (size_t j = 0; j < b.entries.size(); ++j) {
      if (hit[j]) continue;
      if (solutions_isomorphic(ea.solution, b.entries[j].solution)) {
        hit[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("census counts at small sizes") {
  CHECK(run_census(1).entries.size() == 1);
  CHECK(run_census(2).entries.size() == 2);
  CHECK(run_census(3).entries.size() == 2);
  CHECK(run_census(4).entries.size() == 4);
  CHECK(run_census(5).entries.size() == 2);
  CHECK(run_census(6).entries.size() == 5);
}

TEST_CASE("census entries are valid and deduplicated") {
  CensusResult r = run_census(4);
  for (const auto& e : r.entries) {
    SolutionProfile prof = profile(e.solution);
    CHECK(prof.commutative);
    CHECK(prof.non_degenerate);
    CHECK(prof.left_zero_underlying);
    CHECK(theta_action_consistent(e.solution));
  }
  for (size_t i = 0; i < r.entries.size(); ++i)
    for (size_t j = i + 1; j < r.entries.size(); ++j)
      CHECK_FALSE(solutions_isomorphic(r.entries[i].solution, r.entries[j].solution));
  long long raw = 0;
  for (const auto& e : r.entries) raw += e.raw_count;
  CHECK(raw == r.raw_total);
}

TEST_CASE("symmetry breaking does not change the classification") {
  for (int n = 1; n <= 4; ++n) {
    CensusOptions plain;
    plain.symmetry_breaking = false;
    CensusResult full = run_census(n, plain);
    CensusResult broken = run_census(n);
    CHECK(same_classes(full, broken));
    // the raw search space shrinks but never below one witness per class
    CHECK(full.raw_total >= broken.raw_total);
  }
}

TEST_CASE("census is order independent") {
  for (int n = 3; n <= 4; ++n) {
    CensusOptions forward;
    forward.symmetry_breaking = false;
    CensusOptions backward = forward;
    backward.index_order.resize(n);
    for (int i = 0; i < n; ++i) backward.index_order[i] = n - 1 - i;
    CensusResult a = run_census(n, forward);
    CensusResult b = run_census(n, backward);
    CHECK(a.raw_total == b.raw_total);
    CHECK(same_classes(a, b));
  }
}

TEST_CASE("parallel runs merge deterministically") {
  CensusOptions serial;
  CensusOptions parallel;
  parallel.jobs = 3;
  CHECK(entry_tables(run_census(6, serial)) == entry_tables(run_census(6, parallel)));
}

TEST_CASE("classification report") {
  ClassifyReport four = classify_census(run_census(4));
  CHECK(four.has_prediction);
  CHECK(four.matched);
  REQUIRE(four.expected.size() == 4);
  CHECK(std::find(four.expected.begin(), four.expected.end(), "identity") != four.expected.end());
  CHECK(std::find(four.expected.begin(), four.expected.end(), "group C4") != four.expected.end());
  CHECK(std::find(four.expected.begin(), four.expected.end(), "group C2xC2") !=
        four.expected.end());
  CHECK(std::find(four.expected.begin(), four.expected.end(), "cyclic(2,2)") !=
        four.expected.end());

  ClassifyReport five = classify_census(run_census(5));
  CHECK(five.has_prediction);
  CHECK(five.matched);
  CHECK(five.expected.size() == 2);

  ClassifyReport six = classify_census(run_census(6));
  CHECK(six.has_prediction);
  CHECK(six.matched);
  CHECK(six.expected.size() == 5);

  ClassifyReport one = classify_census(run_census(1));
  CHECK_FALSE(one.has_prediction);
}

TEST_CASE("audits pass at small sizes") {
  for (int n = 2; n <= 6; ++n) {
    CensusResult r = run_census(n);
    AuditReport report = audit_census(r);
    CHECK(report.ok());
    if (n == 6) CHECK(report.irretractable_count == 2);
    for (const auto& e : r.entries) {
      CHECK(theta_action_consistent(e.solution));
      // every orbit holds a point whose theta row is the identity
      for (const auto& orbit : orbits(assoc_group(e.solution))) {
        bool found = false;
        for (int z : orbit)
          if (Permutation(e.solution.theta_row(z)).is_identity()) found = true;
        CHECK(found);
      }
      // orbit subsolutions realize the retract
      CHECK(orbit_retract_isomorphisms(e.solution).size() ==
            static_cast<size_t>(e.orbit_count));
    }
  }
}

TEST_CASE("irretractable entries at size six") {
  CensusResult r = run_census(6);
  std::vector<std::string> tags;
  for (const auto& e : r.entries)
    if (e.irretractable) tags.push_back(e.group_tag);
  std::sort(tags.begin(), tags.end());
  CHECK(tags == std::vector<std::string>{"C3:C2", "C6"});
  for (const auto& e : r.entries)
    if (e.irretractable)
      CHECK(solutions_isomorphic(e.solution, group_solution(e.group_tag)));
}

TEST_CASE("census round trips through the extension decomposition") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& e : run_census(n).entries) {
      ExtensionData data = decompose_extension(e.solution);
      CHECK(solutions_isomorphic(extension_solution(data.pi), e.solution));
      CHECK(data.x_size * data.group.order() == n);
    }
}

TEST_CASE("budget limits") {
  CHECK_THROWS_AS(run_census(0), std::invalid_argument);
  CHECK_THROWS_AS(run_census(10), std::runtime_error);  // default budget is 9
  CensusOptions forced;
  forced.max_size = 10;
  CHECK_THROWS_AS(run_census(11, forced), std::runtime_error);  // engine ceiling
  CensusOptions bad_order;
  bad_order.index_order = {0, 0, 1};
  CHECK_THROWS_AS(run_census(3, bad_order), std::invalid_argument);
}
