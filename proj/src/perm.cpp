#include "pesol/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pesol/common.hpp"

namespace pesol {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation image " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("permutation repeats image " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  int ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()) + ")");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p(q(i));
  return Permutation(std::move(im));
}

PermGroup::PermGroup(int degree, std::vector<Permutation> gens, std::vector<Permutation> elems,
                     std::map<std::vector<int>, int> index)
    : degree_(degree),
      generators_(std::move(gens)),
      elements_(std::move(elems)),
      index_(std::move(index)) {
  orders_.reserve(elements_.size());
  for (const auto& e : elements_) orders_.push_back(e.order());
}

PermGroup PermGroup::generate(int degree, const std::vector<Permutation>& generators) {
  if (degree < 0) throw std::invalid_argument("group degree must be non-negative");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, int> index;
  index.emplace(elems[0].images(), 0);
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : generators) {
      Permutation w = compose(elems[qi], g);
      if (index.emplace(w.images(), static_cast<int>(elems.size())).second)
        elems.push_back(std::move(w));
    }
  }
  return PermGroup(degree, generators, std::move(elems), std::move(index));
}

bool PermGroup::contains(const Permutation& p) const { return element_id(p).has_value(); }

std::optional<int> PermGroup::element_id(const Permutation& p) const {
  auto it = index_.find(p.images());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PermGroup::mul(int a, int b) const {
  auto id = element_id(compose(elements_[a], elements_[b]));
  internal_check(id.has_value(), "group closure is missing a product");
  return *id;
}

int PermGroup::inv(int a) const {
  auto id = element_id(elements_[a].inverse());
  internal_check(id.has_value(), "group closure is missing an inverse");
  return *id;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  const int n = g.degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = 1;
    for (size_t qi = 0; qi < orbit.size(); ++qi)
      for (const auto& gen : g.generators()) {
        int img = gen(orbit[qi]);
        if (!seen[img]) {
          seen[img] = 1;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_semiregular(const PermGroup& g) {
  for (int e = 1; e < g.order(); ++e) {
    const Permutation& p = g.elements()[e];
    for (int i = 0; i < g.degree(); ++i)
      if (p(i) == i) return false;
  }
  return true;
}

bool is_regular(const PermGroup& g) { return g.order() == g.degree() && is_semiregular(g); }

bool is_block_system(const PermGroup& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> class_of = partition_class_map(g.degree(), parts);
  for (const auto& elem : g.elements()) {
    for (const auto& cls : parts) {
      int inside = 0;
      for (int b : cls)
        if (class_of[elem(b)] == class_of[cls.front()]) ++inside;
      if (inside != 0 && inside != static_cast<int>(cls.size())) return false;
    }
  }
  return true;
}

namespace {

// Greedy generating sequence: repeatedly adjoin the first element outside the
// current closure.
std::vector<int> generating_sequence(const PermGroup& g) {
  std::vector<int> gens;
  std::vector<char> closed(g.order(), 0);
  closed[0] = 1;
  int closed_count = 1;
  while (closed_count < g.order()) {
    int next = -1;
    for (int e = 1; e < g.order(); ++e)
      if (!closed[e]) {
        next = e;
        break;
      }
    gens.push_back(next);
    // re-close
    std::fill(closed.begin(), closed.end(), 0);
    closed[0] = 1;
    std::vector<int> queue{0};
    closed_count = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int k : gens) {
        int w = g.mul(queue[qi], k);
        if (!closed[w]) {
          closed[w] = 1;
          ++closed_count;
          queue.push_back(w);
        }
      }
  }
  return gens;
}

// Tries to extend gen images to a full homomorphism; returns the image map or
// empty on conflict/non-bijectivity.
std::vector<int> try_homomorphism(const PermGroup& g, const PermGroup& h,
                                  const std::vector<int>& gens, const std::vector<int>& imgs) {
  std::vector<int> phi(g.order(), -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int a = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      int b = g.mul(a, gens[k]);
      int image = h.mul(phi[a], imgs[k]);
      if (phi[b] == -1) {
        phi[b] = image;
        queue.push_back(b);
      } else if (phi[b] != image) {
        return {};
      }
    }
  }
  std::vector<char> used(h.order(), 0);
  for (int v : phi) {
    if (v == -1) return {};  // gens did not generate g (cannot happen)
    if (used[v]) return {};
    used[v] = 1;
  }
  return phi;
}

bool search_images(const PermGroup& g, const PermGroup& h, const std::vector<int>& gens,
                   std::vector<int>& imgs, size_t level, std::vector<int>& result) {
  if (level == gens.size()) {
    result = try_homomorphism(g, h, gens, imgs);
    return !result.empty();
  }
  int want = g.element_order(gens[level]);
  for (int cand = 0; cand < h.order(); ++cand) {
    if (h.element_order(cand) != want) continue;
    imgs[level] = cand;
    if (search_images(g, h, gens, imgs, level + 1, result)) return true;
  }
  return false;
}

}  // namespace

std::optional<GroupIso> group_iso(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<int> prof_g(g.order()), prof_h(h.order());
  for (int e = 0; e < g.order(); ++e) prof_g[e] = g.element_order(e);
  for (int e = 0; e < h.order(); ++e) prof_h[e] = h.element_order(e);
  std::sort(prof_g.begin(), prof_g.end());
  std::sort(prof_h.begin(), prof_h.end());
  if (prof_g != prof_h) return std::nullopt;

  if (g.order() == 1) return GroupIso{{0}};
  std::vector<int> gens = generating_sequence(g);
  std::vector<int> imgs(gens.size(), 0);
  std::vector<int> result;
  if (!search_images(g, h, gens, imgs, 0, result)) return std::nullopt;
  return GroupIso{std::move(result)};
}

}  // namespace pesol
