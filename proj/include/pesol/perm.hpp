#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace pesol {

/// A bijection of {0..n-1}; images()[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  /// Cycle lengths in decreasing order; fixed points contribute 1s.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// compose(p, q) applies q first: compose(p, q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// A finitely generated subgroup of Sym({0..n-1}) with its complete element
/// set, computed by breadth-first closure. elements()[0] is the identity.
class PermGroup {
 public:
  static PermGroup generate(int degree, const std::vector<Permutation>& generators);
  static PermGroup trivial(int degree) { return generate(degree, {}); }

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  std::optional<int> element_id(const Permutation& p) const;

  int mul(int a, int b) const;  // id of elements()[a] composed after elements()[b]
  int inv(int a) const;
  int element_order(int a) const { return orders_[a]; }

 private:
  PermGroup(int degree, std::vector<Permutation> gens, std::vector<Permutation> elems,
            std::map<std::vector<int>, int> index);

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> orders_;
};

/// Orbit partition of {0..degree-1}; classes sorted by minimal element.
std::vector<std::vector<int>> orbits(const PermGroup& g);

/// Every point has trivial stabilizer: no non-identity element fixes a point.
bool is_semiregular(const PermGroup& g);

/// Semi-regular and transitive; equivalently semi-regular with order == degree.
bool is_regular(const PermGroup& g);

/// True iff every group element maps every class of `parts` onto itself or
/// completely off itself. `parts` must partition {0..degree-1}.
bool is_block_system(const PermGroup& g, const std::vector<std::vector<int>>& parts);

/// Abstract group isomorphism witness: image[a] is the element id in `h` of
/// the image of element a of `g`.
struct GroupIso {
  std::vector<int> image;
};

/// Backtracking over generator images with element-order pruning; absence is
/// reported as nullopt, not an error.
std::optional<GroupIso> group_iso(const PermGroup& g, const PermGroup& h);

}  // namespace pesol
