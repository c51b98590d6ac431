#include "pesol/algebra.hpp"

#include <stdexcept>
#include <string>

#include "pesol/common.hpp"

namespace pesol {

namespace {

void validate_square(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("Cayley table entry " + std::to_string(v) + " out of range");
  }
}

}  // namespace

Semigroup::Semigroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  validate_square(table_);
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
          throw std::invalid_argument("not associative at (x,y,z)=(" + std::to_string(x) + "," +
                                      std::to_string(y) + "," + std::to_string(z) + ")");
}

Semigroup left_zero_semigroup(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = x;
  return Semigroup(std::move(t));
}

bool is_weak_commutative(const Semigroup& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.product(s.product(x, y), z) != s.product(s.product(x, z), y)) return false;
  return true;
}

bool is_left_zero(const Semigroup& s) {
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.product(x, y) != x) return false;
  return true;
}

bool is_automorphism(const Semigroup& s, const Permutation& p) {
  if (p.degree() != s.size())
    throw std::invalid_argument("is_automorphism: degree mismatch");
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (p(s.product(x, y)) != s.product(p(x), p(y))) return false;
  return true;
}

Semigroup left_group(int e_size, const PermGroup& g) {
  if (e_size < 1) throw std::invalid_argument("left_group: E must be non-empty");
  const int k = g.order();
  const int n = e_size * k;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int e = 0; e < e_size; ++e)
    for (int f = 0; f < k; ++f)
      for (int e2 = 0; e2 < e_size; ++e2)
        for (int f2 = 0; f2 < k; ++f2)
          table[e * k + f][e2 * k + f2] = e * k + g.mul(f, f2);
  return Semigroup(std::move(table));
}

Congruence::Congruence(const Semigroup& s, std::vector<std::vector<int>> parts) {
  const int n = s.size();
  classes_ = normalize_partition(n, std::move(parts));
  class_of_ = partition_class_map(n, classes_);

  // Compatibility against class representatives suffices: if every product
  // x*y lands in the class of rep(x)*rep(y), related pairs multiply into the
  // same class.
  std::vector<int> rep(classes_.size());
  for (size_t c = 0; c < classes_.size(); ++c) rep[c] = classes_[c].front();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int via_reps = class_of_[s.product(rep[class_of_[x]], rep[class_of_[y]])];
      if (class_of_[s.product(x, y)] != via_reps)
        throw std::invalid_argument(
            "partition is not a congruence: (" + std::to_string(x) + "," + std::to_string(y) +
            ") and representatives (" + std::to_string(rep[class_of_[x]]) + "," +
            std::to_string(rep[class_of_[y]]) + ") multiply into different classes");
    }

  quotient_left_zero_ = true;
  for (size_t a = 0; a < classes_.size() && quotient_left_zero_; ++a)
    for (size_t b = 0; b < classes_.size(); ++b)
      if (class_of_[s.product(rep[a], rep[b])] != static_cast<int>(a)) {
        quotient_left_zero_ = false;
        break;
      }
}

Semigroup quotient(const Semigroup& s, const Congruence& c) {
  if (c.carrier_size() != s.size())
    throw std::invalid_argument("quotient: congruence carrier size mismatch");
  const int k = c.num_classes();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[a][b] = c.class_of(s.product(c.classes()[a].front(), c.classes()[b].front()));
  return Semigroup(std::move(table));
}

}  // namespace pesol
