#include "zdg/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "zdg/errors.hpp"

namespace zdg {

ZeroDivisorGraph build_zdg(const FiniteRing& r) {
  ZeroDivisorGraph g;
  g.ring_descriptor = r.descriptor_string;

  std::vector<int> vertex_of(r.order, -1);
  for (int x = 1; x < r.order; ++x) {
    if (x == r.zero) continue;
    bool divides_zero = false;
    for (int y = 0; y < r.order; ++y) {
      if (y != r.zero && r.mul(x, y) == r.zero) {
        divides_zero = true;
        break;
      }
    }
    if (divides_zero) {
      vertex_of[x] = g.vertex_count++;
      g.vertex_elements.push_back(x);
      g.labels.push_back(r.labels[x]);
    }
  }

  g.adj.assign(g.vertex_count, Bits(g.vertex_count));
  g.degree.assign(g.vertex_count, 0);
  g.self_annihilating.assign(g.vertex_count, 0);
  for (int u = 0; u < g.vertex_count; ++u) {
    int xu = g.vertex_elements[u];
    if (r.mul(xu, xu) == r.zero) g.self_annihilating[u] = 1;
    for (int v = u + 1; v < g.vertex_count; ++v) {
      if (r.mul(xu, g.vertex_elements[v]) == r.zero) {
        g.adj[u].set(v);
        g.adj[v].set(u);
      }
    }
  }
  for (int u = 0; u < g.vertex_count; ++u) g.degree[u] = g.adj[u].count();
  return g;
}

int subset_degree(const ZeroDivisorGraph& g, const Bits& s, int v) {
  return Bits::and_count(g.adj[v], s);
}

std::vector<std::vector<int>> twin_classes(const ZeroDivisorGraph& g) {
  // Equal open neighborhoods first; a vertex adjacent to a lookalike differs
  // in its open row, so the leftovers are regrouped by closed rows. No vertex
  // can have both kinds of twin.
  std::map<std::vector<int>, std::vector<int>> open;
  for (int v = 0; v < g.vertex_count; ++v) {
    open[g.adj[v].to_indices()].push_back(v);
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> leftover;
  for (auto& [key, members] : open) {
    if (members.size() >= 2) {
      classes.push_back(members);
    } else {
      leftover.push_back(members[0]);
    }
  }
  std::map<std::vector<int>, std::vector<int>> closed;
  for (int v : leftover) {
    std::vector<int> key = g.adj[v].to_indices();
    key.insert(std::lower_bound(key.begin(), key.end(), v), v);
    closed[key].push_back(v);
  }
  for (auto& [key, members] : closed) classes.push_back(members);
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

namespace {

// Components of the graph induced on the complement of {c1, c2}.
std::vector<std::vector<int>> components_without(const ZeroDivisorGraph& g,
                                                 int c1, int c2) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count, 0);
  seen[c1] = seen[c2] = 1;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.adj[u].to_indices()) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

StructureReport recognize_structure(const ZeroDivisorGraph& g) {
  StructureReport rep;
  const int n = g.vertex_count;
  if (n == 0) return rep;

  rep.min_degree = *std::min_element(g.degree.begin(), g.degree.end());
  rep.is_complete = rep.min_degree == n - 1;

  // Star: one hub joined to every other vertex, all other vertices of
  // degree one. For two vertices the hub is taken as the smaller index.
  if (n >= 2) {
    int hub = -1;
    for (int v = 0; v < n; ++v) {
      if (g.degree[v] == n - 1) {
        hub = v;
        break;
      }
    }
    if (hub >= 0) {
      bool leaves_ok = true;
      for (int v = 0; v < n; ++v) {
        if (v != hub && g.degree[v] != 1) {
          leaves_ok = false;
          break;
        }
      }
      if (leaves_ok) {
        rep.is_star = true;
        rep.star_center = hub;
      }
    }
  }

  // Complete bipartite: 2-color by BFS from vertex 0 (must be connected),
  // then insist every vertex is joined to the whole opposite side.
  if (n >= 2) {
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    bool bipartite = true;
    size_t head = 0;
    while (head < queue.size() && bipartite) {
      int u = queue[head++];
      for (int v : g.adj[u].to_indices()) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
          break;
        }
      }
    }
    if (bipartite && static_cast<int>(queue.size()) == n) {
      int a = static_cast<int>(std::count(color.begin(), color.end(), 0));
      int b = n - a;
      bool full = true;
      for (int v = 0; v < n && full; ++v) {
        full = g.degree[v] == (color[v] == 0 ? b : a);
      }
      if (full && a >= 1 && b >= 1) {
        rep.is_complete_bipartite = true;
        rep.bipartition_sizes = {std::min(a, b), std::max(a, b)};
      }
    }
  }

  // Book with pages of three or four vertices: two spine vertices covering
  // everything else, and with the spine removed only singleton or pair
  // components remain. First qualifying spine pair (ascending) is reported.
  if (n >= 3) {
    for (int c1 = 0; c1 < n && !rep.is_4book; ++c1) {
      if (g.degree[c1] < n - 2) continue;
      for (int c2 = c1 + 1; c2 < n && !rep.is_4book; ++c2) {
        if (g.degree[c2] < n - 2) continue;
        bool covers = true;
        for (int v = 0; v < n; ++v) {
          if (v == c1 || v == c2) continue;
          if (!g.adj[c1].test(v) || !g.adj[c2].test(v)) {
            covers = false;
            break;
          }
        }
        if (!covers) continue;
        auto comps = components_without(g, c1, c2);
        if (comps.empty()) continue;
        bool small = std::all_of(
            comps.begin(), comps.end(),
            [](const std::vector<int>& c) { return c.size() <= 2; });
        if (!small) continue;
        rep.is_4book = true;
        rep.book_centers = {c1, c2};
        rep.book_centers_adjacent = g.adj[c1].test(c2);
        for (auto& comp : comps) {
          std::vector<int> page{c1, c2};
          page.insert(page.end(), comp.begin(), comp.end());
          std::sort(page.begin(), page.end());
          rep.book_pages.push_back(std::move(page));
        }
      }
    }
  }

  return rep;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_graph(const ZeroDivisorGraph& g, const std::string& format) {
  if (format == "dot") {
    std::ostringstream os;
    os << "graph " << dot_quote(g.ring_descriptor) << " {\n";
    for (int v = 0; v < g.vertex_count; ++v) {
      os << "  " << dot_quote(g.labels[v]) << ";\n";
    }
    for (int u = 0; u < g.vertex_count; ++u) {
      for (int v : g.adj[u].to_indices()) {
        if (v > u) {
          os << "  " << dot_quote(g.labels[u]) << " -- "
             << dot_quote(g.labels[v]) << ";\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["vertex_count"] = g.vertex_count;
    j["labels"] = g.labels;
    auto edges = nlohmann::ordered_json::array();
    for (int u = 0; u < g.vertex_count; ++u) {
      for (int v : g.adj[u].to_indices()) {
        if (v > u) edges.push_back({u, v});
      }
    }
    j["edges"] = std::move(edges);
    j["ring_descriptor"] = g.ring_descriptor;
    return j.dump(2) + "\n";
  }
  throw Error(ErrorKind::UnsupportedFormat,
              "unsupported export format: " + format);
}

}  // namespace zdg
