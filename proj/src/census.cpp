#include "pesol/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "pesol/common.hpp"
#include "pesol/construct.hpp"
#include "pesol/retraction.hpp"

namespace pesol {

namespace {

// For a left-zero product the defining identities reduce to
//   theta_{theta_x(y)} = theta_y . theta_x^-1,
// so the value set of any complete non-degenerate assignment is closed under
// a b^-1, i.e. a subgroup, and theta_{g(z)} = theta_z g^-1 makes its action
// semi-regular. Every value is therefore the identity or fixed-point-free
// with one cycle length dividing n, which is the candidate domain below.
constexpr int kHardCeiling = 10;

using Arr = std::array<int8_t, kHardCeiling>;

struct Candidates {
  std::vector<Arr> perm;
  std::vector<Arr> inv;
};

Arr to_arr(const std::vector<int>& img) {
  Arr a{};
  for (size_t i = 0; i < img.size(); ++i) a[i] = static_cast<int8_t>(img[i]);
  return a;
}

Arr invert_arr(const Arr& a, int n) {
  Arr r{};
  for (int i = 0; i < n; ++i) r[a[i]] = static_cast<int8_t>(i);
  return r;
}

struct UniformGenerator {
  int n, d;
  std::vector<int> img;
  std::vector<char> used;
  std::vector<Arr>* out;

  void run() {
    img.assign(n, -1);
    used.assign(n, 0);
    next_cycle(0);
  }

  void next_cycle(int used_count) {
    if (used_count == n) {
      out->push_back(to_arr(img));
      return;
    }
    int p = 0;
    while (used[p]) ++p;
    used[p] = 1;
    extend(p, p, 1, used_count + 1);
    used[p] = 0;
  }

  void extend(int start, int prev, int len, int used_count) {
    if (len == d) {
      img[prev] = start;
      next_cycle(used_count);
      img[prev] = -1;
      return;
    }
    for (int q = 0; q < n; ++q) {
      if (used[q]) continue;
      used[q] = 1;
      img[prev] = q;
      extend(start, q, len + 1, used_count + 1);
      img[prev] = -1;
      used[q] = 0;
    }
  }
};

Candidates build_candidates(int n) {
  Candidates c;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  c.perm.push_back(to_arr(id));
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    UniformGenerator gen{n, d, {}, {}, &c.perm};
    gen.run();
  }
  c.inv.reserve(c.perm.size());
  for (const auto& p : c.perm) c.inv.push_back(invert_arr(p, n));
  return c;
}

// One block permutation per admissible cycle type: consecutive d-cycles.
std::vector<Arr> type_representatives(int n) {
  std::vector<Arr> reps;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  reps.push_back(to_arr(img));
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    for (int i = 0; i < n; ++i) img[i] = (i / d) * d + (i % d + 1) % d;
    reps.push_back(to_arr(img));
  }
  return reps;
}

class Searcher {
 public:
  Searcher(int n, const Candidates& cands, const std::vector<int>& order)
      : n_(n), cands_(cands), order_(order), theta_(n), theta_inv_(n), assigned_(n, 0) {}

  void run_from(const Arr& first_value) {
    set_theta(order_[0], first_value, invert_arr(first_value, n_));
    if (propagate(0)) search();
    undo_to(0);
  }

  std::vector<std::vector<int8_t>> results;

 private:
  void set_theta(int x, const Arr& h, const Arr& hinv) {
    theta_[x] = h;
    theta_inv_[x] = hinv;
    assigned_[x] = 1;
    trail_.push_back(x);
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      assigned_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  // theta_{theta_x(y)} = theta_y . theta_x^-1: checks or assigns the target.
  bool rule(int x, int y) {
    int t = theta_[x][y];
    if (assigned_[t]) {
      for (int i = 0; i < n_; ++i)
        if (theta_[t][i] != theta_[y][theta_inv_[x][i]]) return false;
      return true;
    }
    Arr w{};
    for (int i = 0; i < n_; ++i) w[i] = theta_[y][theta_inv_[x][i]];
    set_theta(t, w, invert_arr(w, n_));
    return true;
  }

  bool propagate(size_t from) {
    for (size_t qi = from; qi < trail_.size(); ++qi) {
      int u = trail_[qi];
      for (size_t qj = 0; qj <= qi; ++qj) {
        int v = trail_[qj];
        if (!rule(u, v)) return false;
        if (v != u && !rule(v, u)) return false;
      }
    }
    return true;
  }

  bool quick_ok(int x, const Arr& h, const Arr& hinv) const {
    int t = h[x];
    if (assigned_[t]) {
      for (int i = 0; i < n_; ++i)
        if (theta_[t][i] != i) return false;
    }
    for (int y : trail_) {
      int ty = h[y];
      if (!assigned_[ty]) continue;
      for (int i = 0; i < n_; ++i)
        if (theta_[ty][i] != theta_[y][hinv[i]]) return false;
    }
    return true;
  }

  void search() {
    // a pair (y assigned, x) with theta_y(x) assigned forces theta_x
    for (int oi = 0; oi < n_; ++oi) {
      int x = order_[oi];
      if (assigned_[x]) continue;
      for (int y : trail_) {
        int p = theta_[y][x];
        if (!assigned_[p]) continue;
        Arr h{};
        for (int i = 0; i < n_; ++i) h[i] = theta_[p][theta_[y][i]];
        size_t mark = trail_.size();
        set_theta(x, h, invert_arr(h, n_));
        if (propagate(mark)) search();
        undo_to(mark);
        return;
      }
    }
    int x = -1;
    for (int oi = 0; oi < n_; ++oi)
      if (!assigned_[order_[oi]]) {
        x = order_[oi];
        break;
      }
    if (x == -1) {
      record();
      return;
    }
    for (size_t ci = 0; ci < cands_.perm.size(); ++ci) {
      const Arr& h = cands_.perm[ci];
      const Arr& hinv = cands_.inv[ci];
      if (!quick_ok(x, h, hinv)) continue;
      size_t mark = trail_.size();
      set_theta(x, h, hinv);
      if (propagate(mark)) search();
      undo_to(mark);
    }
  }

  void record() {
    std::vector<int8_t> flat(static_cast<size_t>(n_) * n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) flat[static_cast<size_t>(x) * n_ + y] = theta_[x][y];
    results.push_back(std::move(flat));
  }

  int n_;
  const Candidates& cands_;
  std::vector<int> order_;
  std::vector<Arr> theta_, theta_inv_;
  std::vector<char> assigned_;
  std::vector<int> trail_;
};

Solution raw_to_solution(int n, const std::vector<int8_t>& flat) {
  std::vector<std::vector<int>> p(n, std::vector<int>(n)), t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      p[x][y] = x;
      t[x][y] = flat[static_cast<size_t>(x) * n + y];
    }
  return Solution(std::move(p), std::move(t));
}

// (group order, orbit count, sorted row cycle types, group element orders)
std::vector<int> fingerprint(const Solution& sol, const PermGroup& g) {
  std::vector<int> key{g.order(), 0};
  key[1] = static_cast<int>(orbits(g).size());
  std::vector<std::vector<int>> row_types;
  for (int x = 0; x < sol.size(); ++x) row_types.push_back(Permutation(sol.theta_row(x)).cycle_type());
  std::sort(row_types.begin(), row_types.end());
  for (const auto& ct : row_types) {
    key.push_back(-1);
    key.insert(key.end(), ct.begin(), ct.end());
  }
  std::vector<int> elem_orders;
  for (int e = 0; e < g.order(); ++e) elem_orders.push_back(g.element_order(e));
  std::sort(elem_orders.begin(), elem_orders.end());
  key.push_back(-2);
  key.insert(key.end(), elem_orders.begin(), elem_orders.end());
  return key;
}

}  // namespace

CensusResult run_census(int n, const CensusOptions& options) {
  if (n < 1) throw std::invalid_argument("census size must be at least 1");
  if (n > kHardCeiling)
    throw std::runtime_error("census size " + std::to_string(n) +
                             " is beyond the engine ceiling of " + std::to_string(kHardCeiling));
  if (n > options.max_size)
    throw std::runtime_error("census size " + std::to_string(n) +
                             " exceeds the configured budget of " +
                             std::to_string(options.max_size));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!options.index_order.empty()) {
    if (static_cast<int>(options.index_order.size()) != n)
      throw std::invalid_argument("index order must list every index once");
    partition_class_map(n, {options.index_order});  // permutation check
    order = options.index_order;
  }

  Candidates cands = build_candidates(n);
  std::vector<Arr> first_values =
      options.symmetry_breaking ? type_representatives(n) : cands.perm;

  std::vector<std::vector<std::vector<int8_t>>> per_task(first_values.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t task = next.fetch_add(1);
      if (task >= first_values.size()) break;
      Searcher searcher(n, cands, order);
      searcher.run_from(first_values[task]);
      per_task[task] = std::move(searcher.results);
    }
  };
  int jobs = std::clamp(options.jobs, 1, static_cast<int>(first_values.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  struct Rep {
    Solution sol;
    PermGroup group;
    long long count;
  };
  std::vector<Rep> reps;
  std::map<std::vector<int>, std::vector<size_t>> buckets;
  long long raw_total = 0;
  for (const auto& task_results : per_task)
    for (const auto& flat : task_results) {
      ++raw_total;
      Solution sol = raw_to_solution(n, flat);
      internal_check(!pentagon_violation(sol.tables()),
                     "census assignment failed the pentagon re-check");
      PermGroup g = assoc_group(sol);
      std::vector<int> key = fingerprint(sol, g);
      auto& bucket = buckets[key];
      bool matched = false;
      for (size_t ri : bucket)
        if (solutions_isomorphic(sol, reps[ri].sol)) {
          ++reps[ri].count;
          matched = true;
          break;
        }
      if (!matched) {
        bucket.push_back(reps.size());
        reps.push_back(Rep{std::move(sol), std::move(g), 1});
      }
    }

  CensusResult result;
  result.n = n;
  result.raw_total = raw_total;
  for (auto& rep : reps) {
    CensusEntry entry{rep.sol, rep.group.order(), group_name(rep.group),
                      static_cast<int>(orbits(rep.group).size()), is_irretractable(rep.sol),
                      rep.count};
    result.entries.push_back(std::move(entry));
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              if (a.group_order != b.group_order) return a.group_order < b.group_order;
              if (a.orbit_count != b.orbit_count) return a.orbit_count < b.orbit_count;
              return a.solution.tables().theta < b.solution.tables().theta;
            });
  return result;
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ClassifyReport classify_census(const CensusResult& result) {
  ClassifyReport report;
  const int n = result.n;
  std::vector<std::pair<std::string, Solution>> expected;
  std::vector<int> f = prime_factors(n);
  if (f.size() == 1) {
    expected.emplace_back("identity", identity_solution(n));
    expected.emplace_back("group C" + std::to_string(n), group_solution(GroupTable::cyclic(n)));
  } else if (f.size() == 2 && f[0] == f[1]) {
    const int p = f[0];
    expected.emplace_back("identity", identity_solution(n));
    expected.emplace_back("group C" + std::to_string(n), group_solution(GroupTable::cyclic(n)));
    expected.emplace_back("group C" + std::to_string(p) + "xC" + std::to_string(p),
                          group_solution(GroupTable::direct_product(GroupTable::cyclic(p),
                                                                    GroupTable::cyclic(p))));
    expected.emplace_back("cyclic(" + std::to_string(p) + "," + std::to_string(p) + ")",
                          cyclic_solution(p, p));
  } else if (f.size() == 2) {
    const int q = f[0], p = f[1];  // p > q
    expected.emplace_back("identity", identity_solution(n));
    expected.emplace_back("group C" + std::to_string(n), group_solution(GroupTable::cyclic(n)));
    if ((p - 1) % q == 0)
      expected.emplace_back("group C" + std::to_string(p) + ":C" + std::to_string(q),
                            group_solution(GroupTable::semidirect_cyclic(p, q)));
    expected.emplace_back("cyclic(" + std::to_string(p) + "," + std::to_string(q) + ")",
                          cyclic_solution(p, q));
    expected.emplace_back("cyclic(" + std::to_string(q) + "," + std::to_string(p) + ")",
                          cyclic_solution(q, p));
  } else {
    report.has_prediction = false;
    return report;
  }

  report.has_prediction = true;
  std::vector<char> hit(result.entries.size(), 0);
  bool ok = expected.size() == result.entries.size();
  for (auto& [name, sol] : expected) {
    report.expected.push_back(name);
    int found = -1;
    for (size_t e = 0; e < result.entries.size(); ++e) {
      if (hit[e]) continue;
      if (solutions_isomorphic(sol, result.entries[e].solution)) {
        found = static_cast<int>(e);
        hit[e] = 1;
        break;
      }
    }
    report.matched_entry.push_back(found);
    if (found == -1) ok = false;
  }
  for (size_t e = 0; e < result.entries.size(); ++e)
    if (!hit[e]) report.unmatched_entries.push_back(static_cast<int>(e));
  report.matched = ok && report.unmatched_entries.empty();
  return report;
}

AuditReport audit_census(const CensusResult& result) {
  AuditReport report;
  std::vector<int> irretractable_entries;
  for (size_t idx = 0; idx < result.entries.size(); ++idx) {
    const Solution& sol = result.entries[idx].solution;
    const int e = static_cast<int>(idx);
    PermGroup g = assoc_group(sol);
    if (!is_semiregular(g)) report.failures.push_back({"semi-regular action", e});

    std::map<std::vector<int>, int> distinct;
    for (int x = 0; x < sol.size(); ++x) distinct[sol.theta_row(x)] = 1;
    bool rows_distinct = static_cast<int>(distinct.size()) == sol.size();
    if (rows_distinct != is_regular(g))
      report.failures.push_back({"irretractable iff regular", e});

    try {
      retract_cardinalities(sol);
    } catch (const std::exception&) {
      report.failures.push_back({"retract cardinalities", e});
    }
    try {
      std::vector<Solution> tower = retract_tower(sol);
      if (tower.size() > 2) report.failures.push_back({"retraction tower", e});
    } catch (const std::exception&) {
      report.failures.push_back({"retraction tower", e});
    }

    if (rows_distinct) {
      ++report.irretractable_count;
      irretractable_entries.push_back(e);
      try {
        group_solution_witness(sol);
      } catch (const std::exception&) {
        report.failures.push_back({"group solution witness", e});
      }
    }
  }
  for (size_t i = 0; i < irretractable_entries.size(); ++i)
    for (size_t j = i + 1; j < irretractable_entries.size(); ++j) {
      PermGroup gi = assoc_group(result.entries[irretractable_entries[i]].solution);
      PermGroup gj = assoc_group(result.entries[irretractable_entries[j]].solution);
      if (group_iso(gi, gj))
        report.failures.push_back({"irretractable uniqueness", irretractable_entries[j]});
    }
  return report;
}

}  // namespace pesol
