#pragma once

#include <string>
#include <vector>

#include "pesol/algebra.hpp"
#include "pesol/perm.hpp"
#include "pesol/solution.hpp"

namespace pesol {

/// A finite group as a validated Cayley table (associativity, two-sided
/// identity, inverses). Element ids are table indices.
class GroupTable {
 public:
  explicit GroupTable(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  int element_order(int a) const;
  bool is_abelian() const;
  bool is_elementary_abelian_2() const;
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Left translations x -> g x as a permutation group on the element ids.
  PermGroup regular_representation() const;

  GroupTable opposite() const;

  static GroupTable cyclic(int n);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  /// Z/p x| Z/q with (i,j)(i',j') = (i + a^j i', j + j'); requires q | p-1.
  /// The action multiplier is the smallest a > 1 with a^q = 1 (mod p).
  static GroupTable semidirect_cyclic(int p, int q);
  static GroupTable dihedral(int n);  // order 2n
  static GroupTable quaternion8();
  static GroupTable from_perm_group(const PermGroup& g);

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int identity_ = 0;
};

/// Group spec grammar: "C<n>" (cyclic), "x"-products of cyclics such as
/// "C2xC2xC2", "C<p>:C<q>" (see GroupTable::semidirect_cyclic), or a path to
/// a Cayley-table file (line 1: order, then the rows).
GroupTable resolve_group_spec(const std::string& spec);

/// Catalog tag of a small abstract group ("C6", "C2xC2", "C3:C2", "D4",
/// "Q8", ...). Complete through order 9, cyclic-only beyond; "?o<order>"
/// when no catalog entry matches.
std::string group_name(const PermGroup& g);

/// The solution s(g,h) = (g, g^-1 h) on the elements of G: left-zero product,
/// theta row g is left translation by g^-1. Output is asserted bijective,
/// irretractable, commutative and non-degenerate with associated group G.
Solution group_solution(const GroupTable& g);
Solution group_solution(const std::string& spec);

/// s(x,y) = (x,y): left-zero product, identity theta rows.
Solution identity_solution(int n);

/// The solution on m blocks of size n determined by a cyclic group: carrier
/// {x_{i,j} : i < m, j < n} flattened to i*n + j, alpha the simultaneous
/// forward shift of every block, theta_{x_{i,j}} = alpha^{(1-j) mod n}.
/// The associated group is cyclic of order n with m orbits (asserted).
Solution cyclic_solution(int m, int n);

/// s(x,y) = (x, x ^ y) on k-bit vectors; bijective and involutive (asserted).
Solution xor_solution(int k);

/// Builds a commutative non-degenerate solution from a weak commutative
/// semigroup, a congruence with left-zero quotient, and automorphism
/// generators whose group acts semi-regularly such that every orbit is a
/// transversal of the congruence and the congruence classes are blocks.
/// theta is the identity on the chosen class and g^-1 on its g-translate.
/// Every hypothesis is verified; a violation names the failed hypothesis.
Solution action_solution(const Semigroup& s, const Congruence& c,
                         const std::vector<Permutation>& generators, int base_class);

/// Left-zero specialization: a semi-regular permutation group plus one chosen
/// representative per orbit; theta at g(rep) is g^-1.
Solution left_zero_action_solution(int n, const std::vector<Permutation>& generators,
                                   const std::vector<int>& reps);

/// A family of bijections of X indexed by G x G satisfying
/// pi_{a^-1 b, a^-1 c} . pi_{a,c} == pi_{b,c}; the law is enforced at
/// construction and a violation reports the witnessing triple.
class Cocycle {
 public:
  Cocycle(GroupTable group, int x_size, std::vector<std::vector<Permutation>> pi);

  const GroupTable& group() const { return group_; }
  int x_size() const { return x_size_; }
  const Permutation& pi(int a, int b) const { return pi_[a][b]; }

 private:
  GroupTable group_;
  int x_size_;
  std::vector<std::vector<Permutation>> pi_;
};

struct SigmaFamily {
  std::vector<Permutation> sigma;  // one bijection of X per group element
};

/// pi_{a,b} = sigma_{a^-1 b} . sigma_b^-1 (the law then holds; still checked).
Cocycle sigma_cocycle(const GroupTable& g, int x_size, const SigmaFamily& sf);

/// The solution s((x,a),(y,b)) = ((x,a), (pi_{a,b}(y), a^-1 b)) on X x G with
/// (x,a) flattened to x*|G| + a; left-zero product. Asserted bijective,
/// commutative, non-degenerate, with retract isomorphic to the group solution
/// of G.
Solution extension_solution(const Cocycle& pi);

struct ExtensionData {
  int x_size;
  GroupTable group;
  Cocycle pi;
};

/// Inverse of extension_solution for a commutative non-degenerate solution on
/// a left-zero semigroup: the group is read off the associated group, points
/// are relabelled as X x G so that theta rows agree exactly on the G-fibers,
/// and the cocycle is read off the theta action. The round trip back through
/// extension_solution is verified.
ExtensionData decompose_extension(const Solution& sol);

/// Builds the cocycle from sigma and delegates to extension_solution; the
/// output is involutive exactly when G is an elementary abelian 2-group
/// (asserted).
Solution sigma_extension_solution(const GroupTable& g, int x_size, const SigmaFamily& sf);

struct GroupSolutionWitness {
  GroupTable group;
  Solution target;
  std::vector<int> phi;  // solution index -> element id of `group`
};

/// For an irretractable solution: the verified isomorphism onto the group
/// solution of its own associated group. Built through the opposite group
/// (phi(g(z)) = g^-1 with z the identity-theta point) and bridged back by the
/// inversion map, which is itself verified as a group isomorphism.
GroupSolutionWitness group_solution_witness(const Solution& sol);

/// s(x,y) = (x y, f(y)) for an idempotent endomorphism f; the result is a
/// solution (asserted via the pentagon checker) but generally degenerate, so
/// raw tables are returned.
RawTables endomorphism_tables(const Semigroup& s, const std::vector<int>& f);

/// s(x,y) = (f(x), g(y)) for idempotent commuting maps f, g; pentagon
/// property asserted, raw tables returned.
RawTables projection_tables(int n, const std::vector<int>& f, const std::vector<int>& g);

}  // namespace pesol
