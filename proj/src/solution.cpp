#include "pesol/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pesol/common.hpp"

namespace pesol {

namespace {

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + ")";
}

void check_table(const std::vector<std::vector<int>>& table, int n, const char* name) {
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument(std::string(name) + " table is not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument(std::string(name) + " table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(name) + " table entry " + std::to_string(v) +
                                    " out of range");
  }
}

}  // namespace

void validate_raw_tables(const RawTables& t) {
  const int n = t.size();
  if (n == 0) throw std::invalid_argument("empty tables");
  check_table(t.product, n, "product");
  check_table(t.theta, n, "theta");
}

std::optional<Triple> pentagon_violation(const RawTables& t) {
  validate_raw_tables(t);
  const auto& P = t.product;
  const auto& T = t.theta;
  const int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // left side: s23 s13 s12
        int a = P[x][y], b = T[x][y];            // s12
        int a2 = P[a][z], c2 = T[a][z];          // s13 acts on coordinates 1 and 3
        int b3 = P[b][c2], c3 = T[b][c2];        // s23
        // right side: s12 s23
        int e = P[y][z], f = T[y][z];            // s23
        int d2 = P[x][e], e2 = T[x][e];          // s12
        if (a2 != d2 || b3 != e2 || c3 != f) return Triple{x, y, z};
      }
  return std::nullopt;
}

EquationChecks component_equations(const RawTables& t) {
  validate_raw_tables(t);
  const auto& P = t.product;
  const auto& T = t.theta;
  const int n = t.size();
  EquationChecks out;
  for (int x = 0; x < n && !out.associativity; ++x)
    for (int y = 0; y < n && !out.associativity; ++y)
      for (int z = 0; z < n; ++z)
        if (P[P[x][y]][z] != P[x][P[y][z]]) {
          out.associativity = Triple{x, y, z};
          break;
        }
  for (int x = 0; x < n && !out.compatibility; ++x)
    for (int y = 0; y < n && !out.compatibility; ++y)
      for (int z = 0; z < n; ++z)
        if (P[T[x][y]][T[P[x][y]][z]] != T[x][P[y][z]]) {
          out.compatibility = Triple{x, y, z};
          break;
        }
  for (int x = 0; x < n && !out.composition; ++x)
    for (int y = 0; y < n && !out.composition; ++y)
      for (int z = 0; z < n; ++z)
        if (T[T[x][y]][T[P[x][y]][z]] != T[y][z]) {
          out.composition = Triple{x, y, z};
          break;
        }
  return out;
}

Solution::Solution(RawTables t) : tables_(std::move(t)) {
  EquationChecks checks = component_equations(tables_);
  if (checks.associativity)
    throw std::invalid_argument("product is not associative at " +
                                triple_str(*checks.associativity));
  if (checks.compatibility)
    throw std::invalid_argument("theta/product compatibility fails at " +
                                triple_str(*checks.compatibility));
  if (checks.composition)
    throw std::invalid_argument("theta composition identity fails at " +
                                triple_str(*checks.composition));
}

Solution::Solution(std::vector<std::vector<int>> product, std::vector<std::vector<int>> theta)
    : Solution(RawTables{std::move(product), std::move(theta)}) {}

PermGroup assoc_group(const Solution& sol) {
  const int n = sol.size();
  std::vector<Permutation> rows;
  rows.reserve(n);
  for (int x = 0; x < n; ++x) {
    try {
      rows.emplace_back(sol.theta_row(x));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("theta row " + std::to_string(x) + " is not a bijection");
    }
  }
  return PermGroup::generate(n, rows);
}

namespace {

bool row_is_bijection(const std::vector<int>& row) {
  std::vector<char> seen(row.size(), 0);
  for (int v : row) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool operator_commutativity(const RawTables& t) {
  const auto& P = t.product;
  const auto& T = t.theta;
  const int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // s12 s13 applied to (x,y,z)
        int a = P[x][z], c = T[x][z];
        int l0 = P[a][y], l1 = T[a][y], l2 = c;
        // s13 s12 applied to (x,y,z)
        int d = P[x][y], e = T[x][y];
        int r0 = P[d][z], r1 = e, r2 = T[d][z];
        if (l0 != r0 || l1 != r1 || l2 != r2) return false;
      }
  return true;
}

}  // namespace

SolutionProfile profile(const Solution& sol) {
  const int n = sol.size();
  const auto& P = sol.tables().product;
  const auto& T = sol.tables().theta;
  SolutionProfile out;

  bool op_commutative = operator_commutativity(sol.tables());
  bool weak_comm = is_weak_commutative(sol.underlying_semigroup());
  bool theta_const_on_products = true;
  for (int x = 0; x < n && theta_const_on_products; ++x)
    for (int y = 0; y < n; ++y)
      if (T[P[x][y]] != T[x]) {
        theta_const_on_products = false;
        break;
      }
  internal_check(op_commutative == (weak_comm && theta_const_on_products),
                 "the two commutativity criteria disagree");
  out.commutative = op_commutative;

  out.non_degenerate = true;
  for (int x = 0; x < n; ++x)
    if (!row_is_bijection(T[x])) {
      out.non_degenerate = false;
      break;
    }

  // bijectivity of s as injectivity of the pair map
  {
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    out.bijective = true;
    for (int x = 0; x < n && out.bijective; ++x)
      for (int y = 0; y < n; ++y) {
        size_t code = static_cast<size_t>(P[x][y]) * n + T[x][y];
        if (seen[code]) {
          out.bijective = false;
          break;
        }
        seen[code] = 1;
      }
  }

  out.involutive = true;
  out.idempotent = true;
  for (int x = 0; x < n && (out.involutive || out.idempotent); ++x)
    for (int y = 0; y < n; ++y) {
      int u = P[x][y], v = T[x][y];
      int uu = P[u][v], vv = T[u][v];
      if (uu != x || vv != y) out.involutive = false;
      if (uu != u || vv != v) out.idempotent = false;
      if (!out.involutive && !out.idempotent) break;
    }

  out.left_zero_underlying = is_left_zero(sol.underlying_semigroup());

  if (out.non_degenerate) out.group = assoc_group(sol);

  internal_check(!out.involutive || (out.commutative && out.non_degenerate),
                 "an involutive solution must be commutative and non-degenerate");
  if (out.left_zero_underlying) {
    internal_check(out.commutative, "a left-zero solution must be commutative");
    internal_check(out.bijective == out.non_degenerate,
                   "left-zero: bijectivity and non-degeneracy must coincide");
  }
  return out;
}

bool is_subsolution(const Solution& sol, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("subsolution test on an empty subset");
  std::vector<char> in(sol.size(), 0);
  for (int v : subset) {
    if (v < 0 || v >= sol.size())
      throw std::invalid_argument("subset element " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  for (int x : subset)
    for (int y : subset)
      if (!in[sol.product(x, y)] || !in[sol.theta(x, y)]) return false;
  return true;
}

Solution restrict_solution(const Solution& sol, const std::vector<int>& subset) {
  if (!is_subsolution(sol, subset))
    throw std::invalid_argument("subset is not a subsolution");
  std::vector<int> sorted(subset);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> pos(sol.size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> p(m, std::vector<int>(m)), t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      p[i][j] = pos[sol.product(sorted[i], sorted[j])];
      t[i][j] = pos[sol.theta(sorted[i], sorted[j])];
    }
  return Solution(std::move(p), std::move(t));
}

bool is_solution_isomorphism(const Solution& a, const Solution& b, const std::vector<int>& phi) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(phi.size()) != n) return false;
  std::vector<char> used(n, 0);
  for (int v : phi) {
    if (v < 0 || v >= n || used[v]) return false;
    used[v] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (phi[a.product(x, y)] != b.product(phi[x], phi[y])) return false;
      if (phi[a.theta(x, y)] != b.theta(phi[x], phi[y])) return false;
    }
  return true;
}

namespace {

// Relabelling-invariant fingerprint of a theta row: cycle type for bijective
// rows, sorted fiber sizes otherwise.
std::vector<int> row_fingerprint(const std::vector<int>& row) {
  if (row_is_bijection(row)) {
    std::vector<int> fp = Permutation(row).cycle_type();
    fp.insert(fp.begin(), 1);
    return fp;
  }
  std::vector<int> fibers(row.size(), 0);
  for (int v : row) ++fibers[v];
  std::sort(fibers.rbegin(), fibers.rend());
  fibers.insert(fibers.begin(), 0);
  return fibers;
}

struct IsoSearch {
  const RawTables& a;
  const RawTables& b;
  int n;
  std::vector<std::vector<int>> fpa, fpb;
  std::vector<int> phi;      // a-index -> b-index, -1 unset
  std::vector<int> mapped;   // a-indices in assignment order
  std::vector<int> used;     // b-index taken

  IsoSearch(const RawTables& ta, const RawTables& tb)
      : a(ta), b(tb), n(ta.size()), phi(n, -1), used(n, 0) {
    fpa.reserve(n);
    fpb.reserve(n);
    for (int i = 0; i < n; ++i) {
      fpa.push_back(row_fingerprint(a.theta[i]));
      fpb.push_back(row_fingerprint(b.theta[i]));
    }
  }

  bool assign(int x, int u) {
    if (phi[x] != -1) return phi[x] == u;
    if (used[u] || fpa[x] != fpb[u]) return false;
    phi[x] = u;
    used[u] = 1;
    mapped.push_back(x);
    return true;
  }

  // Propagates forced images through both tables; pairs among mapped points
  // are revisited as the mapped list grows.
  bool propagate(size_t from) {
    for (size_t qi = from; qi < mapped.size(); ++qi) {
      int x = mapped[qi];
      for (size_t qj = 0; qj <= qi; ++qj) {
        int y = mapped[qj];
        if (!assign(a.product[x][y], b.product[phi[x]][phi[y]])) return false;
        if (!assign(a.theta[x][y], b.theta[phi[x]][phi[y]])) return false;
        if (!assign(a.product[y][x], b.product[phi[y]][phi[x]])) return false;
        if (!assign(a.theta[y][x], b.theta[phi[y]][phi[x]])) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (mapped.size() > mark) {
      int x = mapped.back();
      mapped.pop_back();
      used[phi[x]] = 0;
      phi[x] = -1;
    }
  }

  bool dfs() {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (phi[i] == -1) {
        x = i;
        break;
      }
    if (x == -1) return true;
    for (int u = 0; u < n; ++u) {
      if (used[u] || fpa[x] != fpb[u]) continue;
      size_t mark = mapped.size();
      if (assign(x, u) && propagate(mark) && dfs()) return true;
      undo(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> solutions_isomorphic(const Solution& a, const Solution& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch search(a.tables(), b.tables());
  {
    auto ma = search.fpa;
    auto mb = search.fpb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }
  if (!search.dfs()) return std::nullopt;
  Permutation phi(search.phi);
  internal_check(is_solution_isomorphism(a, b, phi.images()),
                 "isomorphism search returned a bad witness");
  return phi;
}

bool theta_action_consistent(const Solution& sol) {
  SolutionProfile p = profile(sol);
  if (!p.commutative || !p.non_degenerate)
    throw std::invalid_argument("theta_action_consistent needs a commutative non-degenerate solution");
  const PermGroup& g = *p.group;
  for (int z = 0; z < sol.size(); ++z) {
    Permutation theta_z(sol.theta_row(z));
    for (const auto& elem : g.elements()) {
      const std::vector<int>& at_gz = sol.theta_row(elem(z));
      Permutation expected = compose(theta_z, elem.inverse());
      if (at_gz != expected.images()) return false;
    }
  }
  return true;
}

}  // namespace pesol
