#pragma once

#include <vector>

#include "pesol/perm.hpp"

namespace pesol {

/// A finite semigroup on {0..n-1} given by its Cayley table. Associativity is
/// checked at construction; the error reports the lexicographically first
/// violating triple.
class Semigroup {
 public:
  explicit Semigroup(std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(table_.size()); }
  int product(int x, int y) const { return table_[x][y]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
};

Semigroup left_zero_semigroup(int n);

/// (x y) z == (x z) y for all triples.
bool is_weak_commutative(const Semigroup& s);

/// x y == x for all pairs.
bool is_left_zero(const Semigroup& s);

/// p(x y) == p(x) p(y) for all pairs.
bool is_automorphism(const Semigroup& s, const Permutation& p);

/// The left group E x G with (e,f)(e',f') = (e, f f'), where E is a left-zero
/// semigroup of size e_size and G is a permutation group used as an abstract
/// group. (e, f) is flattened to e * |G| + f.
Semigroup left_group(int e_size, const PermGroup& g);

/// A product-compatible partition of a semigroup's carrier. Classes are
/// renumbered by minimal member; whether the quotient is left-zero is
/// computed once at construction.
class Congruence {
 public:
  Congruence(const Semigroup& s, std::vector<std::vector<int>> parts);

  int carrier_size() const { return static_cast<int>(class_of_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[x]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  bool quotient_is_left_zero() const { return quotient_left_zero_; }

 private:
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  bool quotient_left_zero_ = false;
};

/// Cayley table on class ids; class ids are ordered by minimal carrier
/// element.
Semigroup quotient(const Semigroup& s, const Congruence& c);

}  // namespace pesol
