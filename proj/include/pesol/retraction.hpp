#pragma once

#include <vector>

#include "pesol/solution.hpp"

namespace pesol {

/// The quotient of a commutative non-degenerate solution by theta-row
/// equality. Classes are numbered by minimal member; the quotient's
/// underlying semigroup is always left-zero.
struct RetractionData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  Solution quotient;
};

/// Requires a commutative non-degenerate solution. Well-definedness of the
/// quotient tables is re-verified over all representatives; a failure there
/// signals an internal bug, not a user error.
RetractionData retract(const Solution& sol);

/// All theta rows pairwise distinct. Cross-checked against regularity of the
/// associated group; disagreement is an internal invariant failure.
bool is_irretractable(const Solution& sol);

struct RetractCardinalities {
  int size = 0;
  int group_order = 0;
  int retract_size = 0;
  std::vector<int> class_sizes;
};

/// Asserts |Ret(S,s)| == |G(S,s)| and that every class has size |S|/|G(S,s)|;
/// returns the witnessed numbers.
RetractCardinalities retract_cardinalities(const Solution& sol);

/// Iterates retraction to a fixpoint, input included. The tower stabilizes
/// after at most one proper step (asserted), so the result has length <= 2.
std::vector<Solution> retract_tower(const Solution& sol);

struct OrbitRetractWitness {
  std::vector<int> orbit;
  std::vector<int> iso;  // restricted index -> quotient class id
};

/// For a solution on a left-zero semigroup: for every orbit Z of the
/// associated group, the map z -> class(z) is an isomorphism from the orbit
/// subsolution onto the retract quotient. Each witness is verified.
std::vector<OrbitRetractWitness> orbit_retract_isomorphisms(const Solution& sol);

}  // namespace pesol
