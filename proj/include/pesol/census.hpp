#pragma once

#include <string>
#include <vector>

#include "pesol/solution.hpp"

namespace pesol {

struct CensusOptions {
  /// Restrict the first branched index to one theta per cycle type; complete
  /// because every class has a representative whose first theta row is the
  /// identity. Disable for cross-validation at small sizes.
  bool symmetry_breaking = true;
  /// Worker threads; the search space is partitioned by the value chosen at
  /// the first branched index, partitions are independent, and the merge is
  /// deterministic regardless of scheduling.
  int jobs = 1;
  /// Sizes above this are refused (the engine's hard ceiling is 10).
  int max_size = 9;
  /// Branch priority over indices; empty means 0,1,...,n-1.
  std::vector<int> index_order;
};

struct CensusEntry {
  Solution solution;
  int group_order = 1;
  std::string group_tag;
  int orbit_count = 0;
  bool irretractable = false;
  long long raw_count = 0;  // assignments of this isomorphism class seen by the search
};

struct CensusResult {
  int n = 0;
  std::vector<CensusEntry> entries;
  long long raw_total = 0;
};

/// Exhaustively enumerates the non-degenerate solutions on the left-zero
/// semigroup of size n up to isomorphism. Backtracking assigns theta rows in
/// branch-priority order and propagates theta_{theta_x(y)} = theta_y .
/// theta_x^-1 whenever both sides are determined; every completed assignment
/// is re-checked with the pentagon verifier before being recorded.
CensusResult run_census(int n, const CensusOptions& options = {});

struct ClassifyReport {
  bool has_prediction = false;  // n is p, pq or p^2 for primes p != q
  bool matched = false;
  std::vector<std::string> expected;  // names of the predicted solutions
  std::vector<int> matched_entry;     // per expected name, census entry index or -1
  std::vector<int> unmatched_entries; // census entries missed by the matching
};

/// Pairs the census with the known complete lists for sizes p, pq and p^2 via
/// isomorphism witnesses; other sizes yield has_prediction == false.
ClassifyReport classify_census(const CensusResult& result);

struct AuditReport {
  struct Failure {
    std::string check;
    int entry = -1;
  };
  std::vector<Failure> failures;
  int irretractable_count = 0;

  bool ok() const { return failures.empty(); }
};

/// Structural checks on every representative: semi-regular group action;
/// irretractable exactly when the action is regular; retract size equals the
/// group order and classes have size n/|G|; the retraction tower stabilizes
/// after at most one step; every irretractable representative carries a
/// verified isomorphism onto the group solution of its own group; and no
/// abstract group repeats among the irretractable representatives.
AuditReport audit_census(const CensusResult& result);

}  // namespace pesol
