#include "pesol/construct.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pesol/common.hpp"
#include "pesol/retraction.hpp"

namespace pesol {

GroupTable::GroupTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative");
  identity_ = -1;
  for (int e = 0; e < n && identity_ == -1; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (table_[e][x] != x || table_[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) identity_ = e;
  }
  if (identity_ == -1) throw std::invalid_argument("group table has no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] == -1)
      throw std::invalid_argument("group table element " + std::to_string(a) + " has no inverse");
  }
}

int GroupTable::element_order(int a) const {
  int ord = 1;
  for (int cur = a; cur != identity_; cur = table_[cur][a]) ++ord;
  return ord;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool GroupTable::is_elementary_abelian_2() const {
  for (int a = 0; a < order(); ++a)
    if (a != identity_ && element_order(a) != 2) return false;
  return true;
}

PermGroup GroupTable::regular_representation() const {
  std::vector<Permutation> translations;
  translations.reserve(order());
  for (int g = 0; g < order(); ++g) translations.push_back(Permutation(table_[g]));
  return PermGroup::generate(order(), translations);
}

GroupTable GroupTable::opposite() const {
  std::vector<std::vector<int>> t(order(), std::vector<int>(order()));
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) t[a][b] = table_[b][a];
  return GroupTable(std::move(t));
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable(std::move(t));
}

GroupTable GroupTable::direct_product(const GroupTable& x, const GroupTable& y) {
  const int m = x.order(), k = y.order();
  std::vector<std::vector<int>> t(m * k, std::vector<int>(m * k));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < k; ++d)
          t[a * k + b][c * k + d] = x.mul(a, c) * k + y.mul(b, d);
  return GroupTable(std::move(t));
}

GroupTable GroupTable::semidirect_cyclic(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("semidirect factors must be positive");
  if (q == 1) return cyclic(p);
  if (p == 1) return cyclic(q);
  if ((p - 1) % q != 0)
    throw std::invalid_argument("C" + std::to_string(p) + ":C" + std::to_string(q) +
                                " requires q | p-1");
  int mult = -1;
  for (int a = 2; a < p; ++a) {
    long long pw = 1;
    for (int i = 0; i < q; ++i) pw = (pw * a) % p;
    if (pw == 1) {
      mult = a;
      break;
    }
  }
  if (mult == -1)
    throw std::invalid_argument("C" + std::to_string(p) + ":C" + std::to_string(q) +
                                ": no valid action multiplier");
  // powers of the multiplier
  std::vector<int> apow(q);
  apow[0] = 1;
  for (int j = 1; j < q; ++j) apow[j] = static_cast<int>((1LL * apow[j - 1] * mult) % p);
  std::vector<std::vector<int>> t(p * q, std::vector<int>(p * q));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      for (int i2 = 0; i2 < p; ++i2)
        for (int j2 = 0; j2 < q; ++j2)
          t[i * q + j][i2 * q + j2] = ((i + apow[j] * i2) % p) * q + (j + j2) % q;
  return GroupTable(std::move(t));
}

GroupTable GroupTable::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < n; ++j)
        for (int g = 0; g < 2; ++g) {
          int rot = f == 0 ? (i + j) % n : ((i - j) % n + n) % n;
          t[i * 2 + f][j * 2 + g] = rot * 2 + (f ^ g);
        }
  return GroupTable(std::move(t));
}

GroupTable GroupTable::quaternion8() {
  // axes 0..3 = e,i,j,k; element id = axis*2 + sign (0 plus, 1 minus)
  static constexpr int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 2; ++s)
      for (int b = 0; b < 4; ++b)
        for (int r = 0; r < 2; ++r)
          t[a * 2 + s][b * 2 + r] = axis_mul[a][b] * 2 + (s ^ r ^ sign_mul[a][b]);
  return GroupTable(std::move(t));
}

GroupTable GroupTable::from_perm_group(const PermGroup& g) {
  const int k = g.order();
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = g.mul(a, b);
  return GroupTable(std::move(t));
}

namespace {

bool parse_int(const std::string& s, size_t& pos, int& out) {
  size_t start = pos;
  long long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1'000'000) return false;
    ++pos;
  }
  if (pos == start) return false;
  out = static_cast<int>(v);
  return true;
}

// "C<n>", "C<a>xC<b>x...", "C<p>:C<q>"; returns nullopt when the string is
// not in the grammar at all.
std::optional<GroupTable> parse_grammar(const std::string& spec) {
  size_t pos = 0;
  std::vector<int> cyclics;
  bool semidirect = false;
  while (true) {
    if (pos >= spec.size() || spec[pos] != 'C') return std::nullopt;
    ++pos;
    int n = 0;
    if (!parse_int(spec, pos, n) || n < 1) return std::nullopt;
    cyclics.push_back(n);
    if (pos == spec.size()) break;
    if (spec[pos] == 'x' && !semidirect) {
      ++pos;
      continue;
    }
    if (spec[pos] == ':' && cyclics.size() == 1) {
      semidirect = true;
      ++pos;
      continue;
    }
    return std::nullopt;
  }
  if (semidirect) {
    if (cyclics.size() != 2) return std::nullopt;
    return GroupTable::semidirect_cyclic(cyclics[0], cyclics[1]);
  }
  GroupTable g = GroupTable::cyclic(cyclics[0]);
  for (size_t i = 1; i < cyclics.size(); ++i)
    g = GroupTable::direct_product(g, GroupTable::cyclic(cyclics[i]));
  return g;
}

GroupTable group_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("group spec: cannot open file '" + path + "'");
  int n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("group file '" + path + "': bad order line");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> table[i][j]))
        throw std::invalid_argument("group file '" + path + "': truncated table");
  return GroupTable(std::move(table));
}

}  // namespace

GroupTable resolve_group_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == 'C')
    if (auto parsed = parse_grammar(spec)) return *parsed;
  if (std::ifstream(spec).good()) return group_from_file(spec);
  throw std::invalid_argument("invalid group spec '" + spec +
                              "' (expected C<n>, C..xC.., C<p>:C<q> or a readable file)");
}

std::string group_name(const PermGroup& g) {
  const int o = g.order();
  std::vector<std::pair<std::string, GroupTable>> catalog;
  catalog.emplace_back("C" + std::to_string(o), GroupTable::cyclic(o));
  switch (o) {
    case 4:
      catalog.emplace_back("C2xC2", resolve_group_spec("C2xC2"));
      break;
    case 6:
      catalog.emplace_back("C3:C2", GroupTable::semidirect_cyclic(3, 2));
      break;
    case 8:
      catalog.emplace_back("C4xC2", resolve_group_spec("C4xC2"));
      catalog.emplace_back("C2xC2xC2", resolve_group_spec("C2xC2xC2"));
      catalog.emplace_back("D4", GroupTable::dihedral(4));
      catalog.emplace_back("Q8", GroupTable::quaternion8());
      break;
    case 9:
      catalog.emplace_back("C3xC3", resolve_group_spec("C3xC3"));
      break;
    default:
      break;
  }
  for (const auto& [name, table] : catalog)
    if (group_iso(g, table.regular_representation())) return name;
  return "?o" + std::to_string(o);
}

Solution group_solution(const GroupTable& g) {
  const int n = g.order();
  std::vector<std::vector<int>> p(n, std::vector<int>(n)), t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      p[x][y] = x;
      t[x][y] = g.mul(g.inv(x), y);
    }
  Solution sol(std::move(p), std::move(t));
  SolutionProfile prof = profile(sol);
  internal_check(prof.bijective && prof.commutative && prof.non_degenerate,
                 "group solution must be bijective, commutative and non-degenerate");
  internal_check(is_irretractable(sol), "group solution must be irretractable");
  internal_check(group_iso(*prof.group, g.regular_representation()).has_value(),
                 "group solution's associated group must realize the input group");
  return sol;
}

Solution group_solution(const std::string& spec) { return group_solution(resolve_group_spec(spec)); }

Solution identity_solution(int n) {
  if (n < 1) throw std::invalid_argument("identity solution needs n >= 1");
  std::vector<std::vector<int>> p(n, std::vector<int>(n)), t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      p[x][y] = x;
      t[x][y] = y;
    }
  return Solution(std::move(p), std::move(t));
}

Solution cyclic_solution(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("cyclic solution needs m, n >= 1");
  const int size = m * n;
  std::vector<int> shift(size);  // x_{i,j} -> x_{i,j+1}, block i occupies [i n, (i+1) n)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) shift[i * n + j] = i * n + (j + 1) % n;
  Permutation alpha(shift);

  std::vector<Permutation> alpha_pow;
  alpha_pow.push_back(Permutation::identity(size));
  for (int e = 1; e < n; ++e) alpha_pow.push_back(compose(alpha, alpha_pow.back()));

  std::vector<std::vector<int>> p(size, std::vector<int>(size)), t(size, std::vector<int>(size));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const Permutation& row = alpha_pow[((1 - j) % n + n) % n];
      for (int y = 0; y < size; ++y) {
        p[i * n + j][y] = i * n + j;
        t[i * n + j][y] = row(y);
      }
    }
  Solution sol(std::move(p), std::move(t));
  PermGroup g = assoc_group(sol);
  internal_check(g.order() == n, "cyclic solution group order");
  internal_check(static_cast<int>(orbits(g).size()) == m, "cyclic solution orbit count");
  return sol;
}

Solution xor_solution(int k) {
  if (k < 0 || k > 16) throw std::invalid_argument("xor solution needs 0 <= k <= 16");
  const int n = 1 << k;
  std::vector<std::vector<int>> p(n, std::vector<int>(n)), t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      p[x][y] = x;
      t[x][y] = x ^ y;
    }
  Solution sol(std::move(p), std::move(t));
  SolutionProfile prof = profile(sol);
  internal_check(prof.bijective && prof.involutive, "xor solution must be bijective and involutive");
  return sol;
}

Solution action_solution(const Semigroup& s, const Congruence& c,
                         const std::vector<Permutation>& generators, int base_class) {
  const int n = s.size();
  if (c.carrier_size() != n)
    throw std::invalid_argument("action_solution: congruence carrier size mismatch");
  if (!is_weak_commutative(s))
    throw std::invalid_argument("action_solution: hypothesis failed: semigroup is not weak commutative");
  if (!c.quotient_is_left_zero())
    throw std::invalid_argument("action_solution: hypothesis failed: quotient is not left-zero");
  for (const auto& gen : generators)
    if (gen.degree() != n || !is_automorphism(s, gen))
      throw std::invalid_argument("action_solution: hypothesis failed: generator is not an automorphism");
  PermGroup g = PermGroup::generate(n, generators);
  if (!is_semiregular(g))
    throw std::invalid_argument("action_solution: hypothesis failed: action is not semi-regular");
  std::vector<std::vector<int>> orbs = orbits(g);
  for (const auto& orbit : orbs) {
    std::vector<int> hits(c.num_classes(), 0);
    for (int x : orbit) ++hits[c.class_of(x)];
    for (int h : hits)
      if (h != 1)
        throw std::invalid_argument(
            "action_solution: hypothesis failed: an orbit is not a transversal of the congruence");
  }
  if (!is_block_system(g, c.classes()))
    throw std::invalid_argument(
        "action_solution: hypothesis failed: congruence classes are not a block system");
  if (base_class < 0 || base_class >= c.num_classes())
    throw std::invalid_argument("action_solution: base class id out of range");

  std::vector<std::vector<int>> theta(n);
  std::vector<char> set(n, 0);
  for (const auto& elem : g.elements()) {
    Permutation inverse = elem.inverse();
    for (int s0 : c.classes()[base_class]) {
      int x = elem(s0);
      if (set[x]) {
        internal_check(theta[x] == inverse.images(), "theta is not well-defined");
        continue;
      }
      theta[x] = inverse.images();
      set[x] = 1;
    }
  }
  for (int x = 0; x < n; ++x) internal_check(set[x], "theta assignment did not cover the carrier");

  // The block hypothesis is what makes theta constant on congruence classes
  // (translates of the base class must stay inside single classes); a
  // partition can pass the pairwise block test yet break this, so check it
  // directly.
  for (const auto& cls : c.classes())
    for (int x : cls)
      if (theta[x] != theta[cls.front()])
        throw std::invalid_argument(
            "action_solution: hypothesis failed: congruence classes are not a block system "
            "(theta differs inside the class of " +
            std::to_string(cls.front()) + ")");

  Solution sol(s.table(), std::move(theta));
  SolutionProfile prof = profile(sol);
  internal_check(prof.commutative && prof.non_degenerate,
                 "action solution must be commutative and non-degenerate");
  return sol;
}

Solution left_zero_action_solution(int n, const std::vector<Permutation>& generators,
                                   const std::vector<int>& reps) {
  PermGroup g = PermGroup::generate(n, generators);
  if (!is_semiregular(g))
    throw std::invalid_argument("left_zero_action_solution: action is not semi-regular");
  std::vector<std::vector<int>> orbs = orbits(g);
  if (reps.size() != orbs.size())
    throw std::invalid_argument("left_zero_action_solution: need exactly one representative per orbit");
  std::vector<int> orbit_of(n, -1);
  for (size_t i = 0; i < orbs.size(); ++i)
    for (int x : orbs[i]) orbit_of[x] = static_cast<int>(i);
  std::vector<char> orbit_hit(orbs.size(), 0);
  for (int r : reps) {
    if (r < 0 || r >= n)
      throw std::invalid_argument("left_zero_action_solution: representative out of range");
    if (orbit_hit[orbit_of[r]])
      throw std::invalid_argument("left_zero_action_solution: two representatives share an orbit");
    orbit_hit[orbit_of[r]] = 1;
  }

  std::vector<std::vector<int>> p(n, std::vector<int>(n)), theta(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) p[x][y] = x;
  for (const auto& elem : g.elements()) {
    Permutation inverse = elem.inverse();
    for (int r : reps) theta[elem(r)] = inverse.images();
  }
  Solution sol(std::move(p), std::move(theta));
  SolutionProfile prof = profile(sol);
  internal_check(prof.commutative && prof.non_degenerate,
                 "left-zero action solution must be commutative and non-degenerate");
  return sol;
}

Cocycle::Cocycle(GroupTable group, int x_size, std::vector<std::vector<Permutation>> pi)
    : group_(std::move(group)), x_size_(x_size), pi_(std::move(pi)) {
  const int k = group_.order();
  if (x_size_ < 1) throw std::invalid_argument("cocycle: X must be non-empty");
  if (static_cast<int>(pi_.size()) != k)
    throw std::invalid_argument("cocycle: table must have |G| rows");
  for (const auto& row : pi_) {
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("cocycle: table must have |G| columns");
    for (const auto& perm : row)
      if (perm.degree() != x_size_)
        throw std::invalid_argument("cocycle: permutation degree must be |X|");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        int ia = group_.inv(a);
        if (compose(pi_[group_.mul(ia, b)][group_.mul(ia, c)], pi_[a][c]) != pi_[b][c])
          throw std::invalid_argument("cocycle law violated at (a,b,c)=(" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
}

Cocycle sigma_cocycle(const GroupTable& g, int x_size, const SigmaFamily& sf) {
  const int k = g.order();
  if (static_cast<int>(sf.sigma.size()) != k)
    throw std::invalid_argument("sigma family must have one bijection per group element");
  for (const auto& s : sf.sigma)
    if (s.degree() != x_size)
      throw std::invalid_argument("sigma family: permutation degree must be |X|");
  std::vector<std::vector<Permutation>> pi;
  pi.reserve(k);
  for (int a = 0; a < k; ++a) {
    std::vector<Permutation> row;
    row.reserve(k);
    for (int b = 0; b < k; ++b)
      row.push_back(compose(sf.sigma[g.mul(g.inv(a), b)], sf.sigma[b].inverse()));
    pi.push_back(std::move(row));
  }
  return Cocycle(g, x_size, std::move(pi));
}

Solution extension_solution(const Cocycle& pi) {
  const GroupTable& g = pi.group();
  const int k = g.order();
  const int m = pi.x_size();
  const int n = m * k;  // (x, a) -> x*k + a
  std::vector<std::vector<int>> p(n, std::vector<int>(n)), t(n, std::vector<int>(n));
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < k; ++a)
      for (int y = 0; y < m; ++y)
        for (int b = 0; b < k; ++b) {
          int u = x * k + a, v = y * k + b;
          p[u][v] = u;
          t[u][v] = pi.pi(a, b)(y) * k + g.mul(g.inv(a), b);
        }
  Solution sol(std::move(p), std::move(t));
  SolutionProfile prof = profile(sol);
  internal_check(prof.bijective && prof.commutative && prof.non_degenerate,
                 "extension must be bijective, commutative and non-degenerate");
  internal_check(
      solutions_isomorphic(retract(sol).quotient, group_solution(g)).has_value(),
      "extension retract must be isomorphic to the group solution");
  return sol;
}

ExtensionData decompose_extension(const Solution& sol) {
  SolutionProfile prof = profile(sol);
  if (!prof.commutative || !prof.non_degenerate || !prof.left_zero_underlying)
    throw std::invalid_argument(
        "decompose_extension needs a non-degenerate solution on a left-zero semigroup");
  const int n = sol.size();
  const PermGroup& g = *prof.group;
  const int k = g.order();
  internal_check(n % k == 0, "group order must divide the carrier size");
  const int m = n / k;

  // Label u by a(u) = id of theta_u^-1 in the associated group; fibers of the
  // labelling are the retract classes and carry x-indices in carrier order.
  std::vector<int> a_label(n, -1), x_label(n, -1);
  std::vector<std::vector<int>> fiber(k);
  for (int u = 0; u < n; ++u) {
    auto id = g.element_id(Permutation(sol.theta_row(u)).inverse());
    internal_check(id.has_value(), "theta row missing from the associated group");
    a_label[u] = *id;
    x_label[u] = static_cast<int>(fiber[*id].size());
    fiber[*id].push_back(u);
  }
  for (int a = 0; a < k; ++a)
    internal_check(static_cast<int>(fiber[a].size()) == m, "theta fibers must have size n/|G|");

  std::vector<std::vector<Permutation>> pi(k);
  for (int a = 0; a < k; ++a) {
    Permutation row_a = g.elements()[a].inverse();  // the common theta row of fiber a
    for (int b = 0; b < k; ++b) {
      std::vector<int> images(m);
      int target = g.mul(g.inv(a), b);
      for (int y = 0; y < m; ++y) {
        int image = row_a(fiber[b][y]);
        internal_check(a_label[image] == target, "theta action crossed the wrong fiber");
        images[y] = x_label[image];
      }
      pi[a].emplace_back(std::move(images));
    }
  }
  Cocycle cocycle(GroupTable::from_perm_group(g), m, std::move(pi));

  // round trip: relabelling u -> (x_label(u), a_label(u)) is an exact witness
  Solution rebuilt = extension_solution(cocycle);
  std::vector<int> phi(n);
  for (int u = 0; u < n; ++u) phi[u] = x_label[u] * k + a_label[u];
  internal_check(is_solution_isomorphism(sol, rebuilt, phi),
                 "extension decomposition failed to round-trip");
  return ExtensionData{m, cocycle.group(), std::move(cocycle)};
}

Solution sigma_extension_solution(const GroupTable& g, int x_size, const SigmaFamily& sf) {
  Solution sol = extension_solution(sigma_cocycle(g, x_size, sf));
  internal_check(profile(sol).involutive == g.is_elementary_abelian_2(),
                 "sigma extension involutivity must match elementary abelian 2-groups");
  return sol;
}

GroupSolutionWitness group_solution_witness(const Solution& sol) {
  if (!is_irretractable(sol))
    throw std::invalid_argument("group_solution_witness needs an irretractable solution");
  PermGroup g = assoc_group(sol);
  const int n = sol.size();
  internal_check(g.order() == n, "irretractable solution must have a regular group");

  int z = -1;
  for (int u = 0; u < n && z == -1; ++u)
    if (Permutation(sol.theta_row(u)).is_identity()) z = u;
  internal_check(z != -1, "no point with identity theta row");

  // phi(e(z)) = inv(e) is an isomorphism onto the group solution of the
  // opposite group; inversion then carries it onto the group itself.
  GroupTable table = GroupTable::from_perm_group(g);
  GroupTable opposite = table.opposite();
  std::vector<int> phi_op(n, -1);
  for (int e = 0; e < g.order(); ++e) phi_op[g.elements()[e](z)] = g.inv(e);
  Solution target_op = group_solution(opposite);
  internal_check(is_solution_isomorphism(sol, target_op, phi_op),
                 "map onto the opposite group solution failed verification");

  for (int a = 0; a < table.order(); ++a)
    for (int b = 0; b < table.order(); ++b)
      internal_check(table.inv(opposite.mul(a, b)) == table.mul(table.inv(a), table.inv(b)),
                     "inversion is not an isomorphism from the opposite group");

  std::vector<int> phi(n);
  for (int u = 0; u < n; ++u) phi[u] = table.inv(phi_op[u]);
  Solution target = group_solution(table);
  internal_check(is_solution_isomorphism(sol, target, phi),
                 "composed witness failed verification");
  return GroupSolutionWitness{std::move(table), std::move(target), std::move(phi)};
}

RawTables endomorphism_tables(const Semigroup& s, const std::vector<int>& f) {
  const int n = s.size();
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("endomorphism map has the wrong size");
  for (int v : f)
    if (v < 0 || v >= n) throw std::invalid_argument("endomorphism map entry out of range");
  for (int x = 0; x < n; ++x)
    if (f[f[x]] != f[x])
      throw std::invalid_argument("map is not idempotent at " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[s.product(x, y)] != s.product(f[x], f[y]))
        throw std::invalid_argument("map is not an endomorphism at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
  RawTables t{s.table(), std::vector<std::vector<int>>(n)};
  for (int x = 0; x < n; ++x) t.theta[x] = f;
  internal_check(!pentagon_violation(t), "endomorphism tables must satisfy the pentagon identity");
  return t;
}

RawTables projection_tables(int n, const std::vector<int>& f, const std::vector<int>& g) {
  if (n < 1) throw std::invalid_argument("projection tables need n >= 1");
  auto check_map = [n](const std::vector<int>& m, const char* name) {
    if (static_cast<int>(m.size()) != n)
      throw std::invalid_argument(std::string(name) + " has the wrong size");
    for (int v : m)
      if (v < 0 || v >= n) throw std::invalid_argument(std::string(name) + " entry out of range");
    for (int x = 0; x < n; ++x)
      if (m[m[x]] != m[x])
        throw std::invalid_argument(std::string(name) + " is not idempotent");
  };
  check_map(f, "f");
  check_map(g, "g");
  for (int x = 0; x < n; ++x)
    if (f[g[x]] != g[f[x]]) throw std::invalid_argument("f and g do not commute");
  RawTables t{std::vector<std::vector<int>>(n, std::vector<int>(n)),
              std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      t.product[x][y] = f[x];
      t.theta[x][y] = g[y];
    }
  internal_check(!pentagon_violation(t), "projection tables must satisfy the pentagon identity");
  return t;
}

}  // namespace pesol
