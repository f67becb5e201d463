#include "zdg/fingerprint.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <tuple>

namespace zdg {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::string pad4(int x) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04d", x);
  return buf;
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << ";char=" << characteristic
     << ";units=" << unit_count << ";zdstar=" << zero_divisor_count
     << ";nilp=[" << join_ints(nilpotent_indices) << "];addord=["
     << join_ints(additive_orders) << "];deg=[" << join_ints(degree_sequence)
     << "];form=" << graph_form;
  return os.str();
}

std::string canonical_graph_form(const ZeroDivisorGraph& g) {
  // A class is a clique exactly when its members are pairwise adjacent;
  // class size together with that flag and the quotient adjacency pins the
  // graph down up to isomorphism.
  std::vector<std::vector<int>> classes = twin_classes(g);
  std::vector<char> clique_flag;
  for (auto& c : classes) {
    clique_flag.push_back(c.size() >= 2 && g.adj[c[0]].test(c[1]) ? 1 : 0);
  }

  const int q = static_cast<int>(classes.size());
  std::vector<std::vector<char>> qadj(q, std::vector<char>(q, 0));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      if (i != j && g.adj[classes[i][0]].test(classes[j][0])) qadj[i][j] = 1;
    }
  }

  std::vector<std::string> attr(q);
  for (int i = 0; i < q; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05d%d", static_cast<int>(classes[i].size()),
                  static_cast<int>(clique_flag[i]));
    attr[i] = buf;
  }

  // Color refinement over the quotient. Ranks are recomputed from sorted key
  // strings every round, so they depend only on the structure.
  std::vector<int> id(q, 0);
  {
    std::vector<std::string> key = attr;
    int distinct = 0;
    for (int round = 0; round <= q + 1; ++round) {
      std::vector<std::string> sorted_keys = key;
      std::sort(sorted_keys.begin(), sorted_keys.end());
      sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()),
                        sorted_keys.end());
      for (int c = 0; c < q; ++c) {
        id[c] = static_cast<int>(
            std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key[c]) -
            sorted_keys.begin());
      }
      int now = static_cast<int>(sorted_keys.size());
      if (now == distinct || now == q) break;
      distinct = now;
      for (int c = 0; c < q; ++c) {
        std::vector<std::string> nb;
        for (int d = 0; d < q; ++d) {
          if (qadj[c][d]) nb.push_back(pad4(id[d]));
        }
        std::sort(nb.begin(), nb.end());
        std::string k = pad4(id[c]) + "|";
        for (auto& s : nb) k += s;
        key[c] = k;
      }
    }
  }

  // Least adjacency encoding over orders that respect the refinement ranks.
  std::vector<int> order0(q);
  for (int i = 0; i < q; ++i) order0[i] = i;
  std::sort(order0.begin(), order0.end(),
            [&](int a, int b) { return id[a] != id[b] ? id[a] < id[b] : a < b; });

  std::string header;
  for (int i = 0; i < q; ++i) header += attr[order0[i]];

  std::string best;
  bool have_best = false;
  std::string cur;
  std::vector<int> placed;
  std::vector<char> used(q, 0);

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == q) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    for (int oi = 0; oi < q; ++oi) {
      int u = order0[oi];
      if (used[u] || id[u] != id[order0[pos]]) continue;
      size_t mark = cur.size();
      for (int i = 0; i < pos; ++i) cur += qadj[u][placed[i]] ? '1' : '0';
      bool viable = true;
      if (have_best &&
          std::memcmp(cur.data(), best.data(), cur.size()) > 0) {
        viable = false;
      }
      if (viable) {
        used[u] = 1;
        placed.push_back(u);
        self(self, pos + 1);
        placed.pop_back();
        used[u] = 0;
      }
      cur.resize(mark);
    }
  };
  if (q > 0) rec(rec, 0);

  return "t=" + std::to_string(q) + ";a=" + header + ";b=" + best;
}

Fingerprint fingerprint(const FiniteRing& r) {
  Fingerprint f;
  f.order = r.order;
  f.characteristic = additive_order(r, r.one);
  for (int x = 0; x < r.order; ++x) {
    ElementClass c = classify_element(r, x);
    if (c.kind == ElementKind::Unit) ++f.unit_count;
    if (c.kind == ElementKind::ZeroDivisor) ++f.zero_divisor_count;
    if (c.nilpotent_index) f.nilpotent_indices.push_back(*c.nilpotent_index);
    f.additive_orders.push_back(additive_order(r, x));
  }
  std::sort(f.nilpotent_indices.begin(), f.nilpotent_indices.end());
  std::sort(f.additive_orders.begin(), f.additive_orders.end());

  ZeroDivisorGraph g = build_zdg(r);
  f.degree_sequence = g.degree;
  std::sort(f.degree_sequence.begin(), f.degree_sequence.end());
  f.graph_form = canonical_graph_form(g);
  return f;
}

namespace {

using ElementInvariant = std::tuple<int, int, int, int>;

ElementInvariant element_invariant(const FiniteRing& r, int x) {
  ElementClass c = classify_element(r, x);
  return {additive_order(r, x), static_cast<int>(c.kind),
          c.nilpotent_index.value_or(0),
          static_cast<int>(annihilator(r, x).size())};
}

struct IsoSearch {
  const FiniteRing& a;
  const FiniteRing& b;
  std::vector<ElementInvariant> inv_a, inv_b;
  std::vector<int> fwd, rev;

  // Commits x -> y and everything the ring operations force from it.
  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (fwd[u] != -1) {
        if (fwd[u] != v) return false;
        continue;
      }
      if (rev[v] != -1 || inv_a[u] != inv_b[v]) return false;
      fwd[u] = v;
      rev[v] = u;
      trail.push_back(u);
      for (int w = 0; w < a.order; ++w) {
        if (fwd[w] == -1) continue;
        queue.push_back({a.add(u, w), b.add(v, fwd[w])});
        queue.push_back({a.mul(u, w), b.mul(v, fwd[w])});
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int u : trail) {
      rev[fwd[u]] = -1;
      fwd[u] = -1;
    }
  }

  bool search() {
    int x = -1;
    for (int i = 0; i < a.order; ++i) {
      if (fwd[i] == -1) {
        x = i;
        break;
      }
    }
    if (x == -1) return true;
    for (int y = 0; y < b.order; ++y) {
      if (rev[y] != -1 || inv_a[x] != inv_b[y]) continue;
      std::vector<int> trail;
      if (assign(x, y, trail) && search()) return true;
      undo(trail);
    }
    return false;
  }
};

}  // namespace

bool rings_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.order != b.order) return false;
  IsoSearch s{a, b, {}, {}, {}, {}};
  for (int x = 0; x < a.order; ++x) {
    s.inv_a.push_back(element_invariant(a, x));
    s.inv_b.push_back(element_invariant(b, x));
  }
  auto sa = s.inv_a, sb = s.inv_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  s.fwd.assign(a.order, -1);
  s.rev.assign(b.order, -1);
  std::vector<int> trail;
  if (!s.assign(a.zero, b.zero, trail)) return false;
  if (!s.assign(a.one, b.one, trail)) return false;
  return s.search();
}

}  // namespace zdg
