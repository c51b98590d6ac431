#include "pesol/retraction.hpp"

#include <map>
#include <stdexcept>

#include "pesol/common.hpp"

namespace pesol {

namespace {

void require_commutative_nondegenerate(const Solution& sol, const char* op) {
  SolutionProfile p = profile(sol);
  if (!p.commutative || !p.non_degenerate)
    throw std::invalid_argument(std::string(op) + " needs a commutative non-degenerate solution");
}

std::vector<std::vector<int>> theta_classes(const Solution& sol) {
  std::map<std::vector<int>, std::vector<int>> by_row;
  for (int x = 0; x < sol.size(); ++x) by_row[sol.theta_row(x)].push_back(x);
  std::vector<std::vector<int>> parts;
  parts.reserve(by_row.size());
  for (auto& [row, members] : by_row) parts.push_back(members);
  return normalize_partition(sol.size(), std::move(parts));
}

}  // namespace

RetractionData retract(const Solution& sol) {
  require_commutative_nondegenerate(sol, "retract");
  const int n = sol.size();
  std::vector<std::vector<int>> classes = theta_classes(sol);
  std::vector<int> class_of = partition_class_map(n, classes);
  const int k = static_cast<int>(classes.size());

  std::vector<std::vector<int>> qp(k, std::vector<int>(k)), qt(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int x = classes[a].front(), y = classes[b].front();
      qp[a][b] = class_of[sol.product(x, y)];
      qt[a][b] = class_of[sol.theta(x, y)];
    }
  // well-definedness over all representatives, not just the minimal ones
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      internal_check(class_of[sol.product(x, y)] == qp[class_of[x]][class_of[y]],
                     "quotient product is not well-defined");
      internal_check(class_of[sol.theta(x, y)] == qt[class_of[x]][class_of[y]],
                     "quotient theta is not well-defined");
    }

  Solution quotient(std::move(qp), std::move(qt));
  SolutionProfile qprof = profile(quotient);
  internal_check(qprof.commutative && qprof.non_degenerate,
                 "retract must stay commutative and non-degenerate");
  internal_check(qprof.left_zero_underlying, "retract quotient semigroup must be left-zero");
  return RetractionData{std::move(classes), std::move(class_of), std::move(quotient)};
}

bool is_irretractable(const Solution& sol) {
  require_commutative_nondegenerate(sol, "is_irretractable");
  bool rows_distinct = static_cast<int>(theta_classes(sol).size()) == sol.size();
  bool regular = is_regular(assoc_group(sol));
  internal_check(rows_distinct == regular,
                 "distinct theta rows must coincide with a regular group action");
  return rows_distinct;
}

RetractCardinalities retract_cardinalities(const Solution& sol) {
  require_commutative_nondegenerate(sol, "retract_cardinalities");
  RetractionData data = retract(sol);
  PermGroup g = assoc_group(sol);
  RetractCardinalities out;
  out.size = sol.size();
  out.group_order = g.order();
  out.retract_size = data.quotient.size();
  for (const auto& cls : data.classes) out.class_sizes.push_back(static_cast<int>(cls.size()));
  internal_check(out.retract_size == out.group_order,
                 "retract size must equal the order of the associated group");
  for (size_t c = 0; c < out.class_sizes.size(); ++c)
    internal_check(out.class_sizes[c] * out.group_order == out.size,
                   "retract class " + std::to_string(c) + " has the wrong size");
  return out;
}

std::vector<Solution> retract_tower(const Solution& sol) {
  require_commutative_nondegenerate(sol, "retract_tower");
  std::vector<Solution> tower{sol};
  while (!is_irretractable(tower.back())) tower.push_back(retract(tower.back()).quotient);
  internal_check(tower.size() <= 2, "retraction must reach a fixpoint after one step");
  return tower;
}

std::vector<OrbitRetractWitness> orbit_retract_isomorphisms(const Solution& sol) {
  SolutionProfile p = profile(sol);
  if (!p.commutative || !p.non_degenerate || !p.left_zero_underlying)
    throw std::invalid_argument(
        "orbit_retract_isomorphisms needs a non-degenerate solution on a left-zero semigroup");
  RetractionData data = retract(sol);
  std::vector<OrbitRetractWitness> out;
  for (const auto& orbit : orbits(*p.group)) {
    Solution restricted = restrict_solution(sol, orbit);
    std::vector<int> witness(orbit.size());
    for (size_t i = 0; i < orbit.size(); ++i) witness[i] = data.class_of[orbit[i]];
    internal_check(is_solution_isomorphism(restricted, data.quotient, witness),
                   "orbit-to-retract map failed verification");
    out.push_back(OrbitRetractWitness{orbit, std::move(witness)});
  }
  return out;
}

}  // namespace pesol
