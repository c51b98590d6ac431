#pragma once

#include <optional>
#include <vector>

#include "pesol/algebra.hpp"
#include "pesol/perm.hpp"

namespace pesol {

/// Unvalidated pair of square tables: entry (x,y) of `product` is x*y and row
/// x of `theta` is the image list of theta_x. The map they encode is
/// s(x,y) = (x*y, theta_x(y)).
struct RawTables {
  std::vector<std::vector<int>> product;
  std::vector<std::vector<int>> theta;

  int size() const { return static_cast<int>(product.size()); }
  friend bool operator==(const RawTables&, const RawTables&) = default;
};

struct Triple {
  int x = 0, y = 0, z = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Throws std::invalid_argument unless both tables are n x n (n >= 1) with
/// entries in {0..n-1}.
void validate_raw_tables(const RawTables& t);

/// Direct evaluation of s23 s13 s12 == s12 s23 over all n^3 triples, with
/// s12 = s x id, s23 = id x s and s13 = (tau x id)(id x s)(tau x id).
/// Returns the first violating triple, nullopt when the tables are a solution.
std::optional<Triple> pentagon_violation(const RawTables& t);

/// The three component identities, each with its first violating triple:
///   associativity   (x y) z == x (y z)
///   compatibility   theta_x(y) * theta_{x y}(z) == theta_x(y z)
///   composition     theta_{theta_x(y)} . theta_{x y} == theta_y  (as maps)
struct EquationChecks {
  std::optional<Triple> associativity;
  std::optional<Triple> compatibility;
  std::optional<Triple> composition;

  bool all_ok() const { return !associativity && !compatibility && !composition; }
};
EquationChecks component_equations(const RawTables& t);

/// A validated solution: construction checks the three component identities
/// eagerly and throws with the violating triple otherwise. Instances are
/// immutable and safe to share across threads.
class Solution {
 public:
  explicit Solution(RawTables t);
  Solution(std::vector<std::vector<int>> product, std::vector<std::vector<int>> theta);

  int size() const { return tables_.size(); }
  int product(int x, int y) const { return tables_.product[x][y]; }
  int theta(int x, int y) const { return tables_.theta[x][y]; }
  const std::vector<int>& theta_row(int x) const { return tables_.theta[x]; }
  const RawTables& tables() const { return tables_; }

  Semigroup underlying_semigroup() const { return Semigroup(tables_.product); }

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  RawTables tables_;
};

struct SolutionProfile {
  bool commutative = false;
  bool non_degenerate = false;
  bool bijective = false;
  bool involutive = false;
  bool idempotent = false;
  bool left_zero_underlying = false;
  std::optional<PermGroup> group;  // present iff non_degenerate
};

/// Exhaustive flag computation. Commutativity is evaluated both as the
/// operator identity s12 s13 == s13 s12 and via the characterization (weak
/// commutative product and theta_{x y} == theta_x); the two routes must agree.
SolutionProfile profile(const Solution& sol);

/// The subgroup of Sym({0..n-1}) generated by the theta rows. Throws if some
/// row is not a bijection.
PermGroup assoc_group(const Solution& sol);

/// T is closed under the product and under theta_x(y) for x, y in T.
bool is_subsolution(const Solution& sol, const std::vector<int>& subset);

/// Order-preserving re-indexing of a subsolution onto {0..|T|-1}.
Solution restrict_solution(const Solution& sol, const std::vector<int>& subset);

/// Witness search for a bijection phi with phi(x y) = phi(x) phi(y) and
/// phi(theta_x(y)) = theta_{phi x}(phi y); candidate images are ordered by
/// theta-row fingerprints and forced assignments are propagated eagerly.
std::optional<Permutation> solutions_isomorphic(const Solution& a, const Solution& b);

/// Verifies a concrete witness map.
bool is_solution_isomorphism(const Solution& a, const Solution& b, const std::vector<int>& phi);

/// theta_{g(z)} == theta_z . g^{-1} for every point z and every g in the
/// associated group. Requires a commutative non-degenerate solution.
bool theta_action_consistent(const Solution& sol);

}  // namespace pesol
