#include "zdg/alliance.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

constexpr int8_t kUndecided = 0;
constexpr int8_t kIn = 1;
constexpr int8_t kOut = 2;

// Demand of a vertex toward members of S, by where the vertex itself sits.
int demand_inside(const ZeroDivisorGraph& g, AllianceKind kind, int v) {
  return kind == AllianceKind::Defensive ? g.degree[v] / 2 : 0;
}

int demand_outside(const ZeroDivisorGraph& g, AllianceKind kind, int v) {
  return kind == AllianceKind::Offensive ? g.degree[v] / 2 + 1 : 1;
}

bool holds(const ZeroDivisorGraph& g, const Bits& s, AllianceKind kind) {
  for (int v = 0; v < g.vertex_count; ++v) {
    int ds = Bits::and_count(g.adj[v], s);
    int need = s.test(v) ? demand_inside(g, kind, v) : demand_outside(g, kind, v);
    if (ds < need) return false;
  }
  return true;
}

Bits to_member_bits(const ZeroDivisorGraph& g, const std::vector<int>& members) {
  if (g.vertex_count == 0) {
    throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  }
  if (members.empty()) {
    throw Error(ErrorKind::EmptySubset, "alliance must be a nonempty set");
  }
  Bits s(g.vertex_count);
  for (int v : members) {
    if (v < 0 || v >= g.vertex_count) {
      throw std::out_of_range("vertex index out of range");
    }
    s.set(v);
  }
  return s;
}

// Drop members one at a time while the set stays valid, until stable.
void minimalize(const ZeroDivisorGraph& g, Bits& s, AllianceKind kind) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (!s.test(v)) continue;
      s.reset(v);
      if (holds(g, s, kind)) {
        changed = true;
      } else {
        s.set(v);
      }
    }
  }
}

Bits greedy_seed(const ZeroDivisorGraph& g, AllianceKind kind) {
  const int n = g.vertex_count;
  Bits s(n);
  if (kind == AllianceKind::Defensive) {
    for (int v = 0; v < n; ++v) s.set(v);
  } else {
    // Cover unsatisfied outside vertices by whichever addition helps most.
    for (int step = 0; step < n; ++step) {
      std::vector<int> violated;
      for (int v = 0; v < n; ++v) {
        if (!s.test(v) &&
            Bits::and_count(g.adj[v], s) < demand_outside(g, kind, v)) {
          violated.push_back(v);
        }
      }
      if (violated.empty()) break;
      int best = -1, best_score = -1;
      for (int u = 0; u < n; ++u) {
        if (s.test(u)) continue;
        int score = 0;
        for (int w : violated) {
          if (w == u || g.adj[u].test(w)) ++score;
        }
        if (score > best_score) {
          best_score = score;
          best = u;
        }
      }
      s.set(best);
    }
  }
  minimalize(g, s, kind);
  return s;
}

struct Solver {
  const ZeroDivisorGraph& g;
  AllianceKind kind;
  int n;
  long long budget;
  long long nodes = 0;

  std::vector<int> need_in, need_out;
  std::vector<int8_t> status;
  std::vector<int> cnt_in;    // members among neighbors
  std::vector<int> cnt_poss;  // members-or-undecided among neighbors
  std::vector<int> trail;
  int in_count = 0;
  int max_degree = 0;

  std::vector<int> twin_prev, twin_next;
  bool use_twins = false;

  std::vector<int> order1;  // branch order for the optimum search
  int ub = 0;
  std::vector<int> best_witness;

  int target = 0;
  bool found = false;
  std::vector<int> found_witness;

  std::vector<std::vector<int>>* sink = nullptr;
  int cap = 0;
  bool truncated = false;
  bool aborted = false;

  Solver(const ZeroDivisorGraph& graph, AllianceKind k, long long node_budget)
      : g(graph), kind(k), n(graph.vertex_count), budget(node_budget) {
    need_in.resize(n);
    need_out.resize(n);
    for (int v = 0; v < n; ++v) {
      need_in[v] = demand_inside(g, kind, v);
      need_out[v] = demand_outside(g, kind, v);
      max_degree = std::max(max_degree, g.degree[v]);
    }
    status.assign(n, kUndecided);
    cnt_in.assign(n, 0);
    cnt_poss = g.degree;
    twin_prev.assign(n, -1);
    twin_next.assign(n, -1);
    order1.resize(n);
    for (int v = 0; v < n; ++v) order1[v] = v;
    std::sort(order1.begin(), order1.end(), [&](int a, int b) {
      return g.degree[a] != g.degree[b] ? g.degree[a] > g.degree[b] : a < b;
    });
  }

  // Members of a twin class must be used lowest index first; swapping two
  // twins is an automorphism, so both the optimum and the lexicographically
  // least witness survive this restriction.
  void enable_twins() {
    use_twins = true;
    for (const auto& c : twin_classes(g)) {
      for (size_t i = 1; i < c.size(); ++i) {
        twin_prev[c[i]] = c[i - 1];
        twin_next[c[i - 1]] = c[i];
      }
    }
  }

  void apply(int v, int8_t val) {
    status[v] = val;
    trail.push_back(v);
    if (val == kIn) {
      ++in_count;
      for (int u : g.adj[v].to_indices()) ++cnt_in[u];
    } else {
      for (int u : g.adj[v].to_indices()) --cnt_poss[u];
    }
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      int v = trail.back();
      trail.pop_back();
      if (status[v] == kIn) {
        --in_count;
        for (int u : g.adj[v].to_indices()) --cnt_in[u];
      } else {
        for (int u : g.adj[v].to_indices()) ++cnt_poss[u];
      }
      status[v] = kUndecided;
    }
  }

  bool propagate(std::vector<std::pair<int, int8_t>> pending,
                 std::vector<int> recheck) {
    while (!pending.empty() || !recheck.empty()) {
      if (!pending.empty()) {
        auto [u, val] = pending.back();
        pending.pop_back();
        if (status[u] != kUndecided) {
          if (status[u] != val) return false;
          continue;
        }
        apply(u, val);
        if (use_twins) {
          if (val == kIn && twin_prev[u] != -1) {
            int p = twin_prev[u];
            if (status[p] == kOut) return false;
            if (status[p] == kUndecided) pending.push_back({p, kIn});
          } else if (val == kOut && twin_next[u] != -1) {
            int t = twin_next[u];
            if (status[t] == kIn) return false;
            if (status[t] == kUndecided) pending.push_back({t, kOut});
          }
        }
        recheck.push_back(u);
        for (int w : g.adj[u].to_indices()) recheck.push_back(w);
        continue;
      }
      int w = recheck.back();
      recheck.pop_back();
      if (status[w] == kUndecided) {
        bool can_in = cnt_poss[w] >= need_in[w];
        bool can_out = cnt_poss[w] >= need_out[w];
        if (!can_in && !can_out) return false;
        if (!can_out) {
          pending.push_back({w, kIn});
        } else if (!can_in) {
          pending.push_back({w, kOut});
        }
        continue;
      }
      int need = status[w] == kIn ? need_in[w] : need_out[w];
      if (cnt_poss[w] < need) return false;
      if (cnt_in[w] < need && cnt_poss[w] == need) {
        for (int u : g.adj[w].to_indices()) {
          if (status[u] == kUndecided) pending.push_back({u, kIn});
        }
      }
    }
    return true;
  }

  bool decide(int v, int8_t val) { return propagate({{v, val}}, {}); }

  bool root_propagate() {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return propagate({}, std::move(all));
  }

  // Members still required: max single-vertex shortfall, and total shortfall
  // spread across the best imaginable helper degree.
  long long deficit_lb() const {
    long long total = 0;
    long long worst = 0;
    for (int w = 0; w < n; ++w) {
      int need;
      if (status[w] == kIn) {
        need = need_in[w];
      } else if (status[w] == kOut) {
        need = need_out[w];
      } else {
        need = std::min(need_in[w], need_out[w]);
      }
      long long def = need - cnt_in[w];
      if (def > 0) {
        total += def;
        worst = std::max(worst, def);
      }
    }
    if (total == 0) return 0;
    long long denom = std::max(max_degree, 1);
    return std::max(worst, (total + denom - 1) / denom);
  }

  void bump_nodes() {
    if (++nodes > budget) {
      throw Error(ErrorKind::TooLarge, "alliance search budget exhausted");
    }
  }

  std::vector<int> in_set() const {
    std::vector<int> r;
    for (int v = 0; v < n; ++v) {
      if (status[v] == kIn) r.push_back(v);
    }
    return r;
  }

  void search_optimum() {
    bump_nodes();
    if (in_count >= ub) return;
    if (in_count + deficit_lb() >= ub) return;
    int v = -1;
    for (int u : order1) {
      if (status[u] == kUndecided) {
        v = u;
        break;
      }
    }
    if (v == -1) {
      ub = in_count;
      best_witness = in_set();
      return;
    }
    size_t mark = trail.size();
    if (decide(v, kIn)) search_optimum();
    undo_to(mark);
    if (decide(v, kOut)) search_optimum();
    undo_to(mark);
  }

  // First completed assignment in index order with include tried first is
  // the lexicographically least witness of the target size.
  void search_least_witness() {
    if (found) return;
    bump_nodes();
    if (in_count > target) return;
    if (in_count + (n - static_cast<int>(trail.size())) < target) return;
    if (in_count + deficit_lb() > target) return;
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (status[u] == kUndecided) {
        v = u;
        break;
      }
    }
    if (v == -1) {
      if (in_count == target) {
        found = true;
        found_witness = in_set();
      }
      return;
    }
    size_t mark = trail.size();
    if (decide(v, kIn)) search_least_witness();
    undo_to(mark);
    if (found) return;
    if (decide(v, kOut)) search_least_witness();
    undo_to(mark);
  }

  void search_enumerate() {
    if (aborted) return;
    if (++nodes > budget) {
      truncated = true;
      aborted = true;
      return;
    }
    if (in_count > target) return;
    if (in_count + (n - static_cast<int>(trail.size())) < target) return;
    if (in_count + deficit_lb() > target) return;
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (status[u] == kUndecided) {
        v = u;
        break;
      }
    }
    if (v == -1) {
      if (static_cast<int>(sink->size()) >= cap) {
        truncated = true;
        aborted = true;
        return;
      }
      sink->push_back(in_set());
      return;
    }
    size_t mark = trail.size();
    if (decide(v, kIn)) search_enumerate();
    undo_to(mark);
    if (aborted) return;
    if (decide(v, kOut)) search_enumerate();
    undo_to(mark);
  }
};

}  // namespace

bool is_offensive_alliance(const ZeroDivisorGraph& g,
                           const std::vector<int>& members) {
  return holds(g, to_member_bits(g, members), AllianceKind::Offensive);
}

bool is_defensive_alliance(const ZeroDivisorGraph& g,
                           const std::vector<int>& members) {
  return holds(g, to_member_bits(g, members), AllianceKind::Defensive);
}

AllianceResult solve_min_alliance(const ZeroDivisorGraph& g, AllianceKind kind,
                                  long long node_budget) {
  if (g.vertex_count == 0) {
    throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  }
  Bits seed = greedy_seed(g, kind);

  Solver opt(g, kind, node_budget);
  opt.enable_twins();
  opt.ub = seed.count();
  opt.best_witness = seed.to_indices();
  if (!opt.root_propagate()) {
    throw std::logic_error("root propagation failed on a solvable instance");
  }
  opt.search_optimum();

  Solver lex(g, kind, node_budget - opt.nodes);
  lex.enable_twins();
  lex.target = opt.ub;
  if (!lex.root_propagate()) {
    throw std::logic_error("root propagation failed on a solvable instance");
  }
  lex.search_least_witness();
  if (!lex.found) {
    throw std::logic_error("least witness search missed the optimum");
  }

  AllianceResult r;
  r.kind = kind;
  r.number = opt.ub;
  r.witness = lex.found_witness;
  r.nodes_explored = opt.nodes + lex.nodes;
  return r;
}

AllianceResult enumerate_min_alliances(const ZeroDivisorGraph& g,
                                       AllianceKind kind, int cap,
                                       long long node_budget) {
  AllianceResult base = solve_min_alliance(g, kind, node_budget);

  Solver en(g, kind, std::max<long long>(node_budget - base.nodes_explored, 1));
  en.target = base.number;
  en.cap = std::max(cap, 0);
  std::vector<std::vector<int>> all;
  en.sink = &all;
  if (!en.root_propagate()) {
    throw std::logic_error("root propagation failed on a solvable instance");
  }
  en.search_enumerate();

  AllianceResult r;
  r.kind = kind;
  r.number = base.number;
  r.witness = all.empty() ? base.witness : all.front();
  r.all_minimum = std::move(all);
  r.enumeration_truncated = en.truncated;
  r.nodes_explored = base.nodes_explored + en.nodes;
  return r;
}

AllianceResult brute_force_min_alliance(const ZeroDivisorGraph& g,
                                        AllianceKind kind) {
  const int n = g.vertex_count;
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (n > 24) {
    throw Error(ErrorKind::TooLarge,
                "brute force limited to 24 vertices, got " + std::to_string(n));
  }
  long long tested = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      Bits s(n);
      for (int v : comb) s.set(v);
      ++tested;
      if (holds(g, s, kind)) {
        AllianceResult r;
        r.kind = kind;
        r.number = k;
        r.witness = comb;
        r.nodes_explored = tested;
        return r;
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  throw std::logic_error("whole vertex set should always qualify");
}

}  // namespace zdg
