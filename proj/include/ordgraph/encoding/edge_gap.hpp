#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordgraph/error.hpp"
#include "ordgraph/graph/witness.hpp"
#include "ordgraph/trees/labelled_tree.hpp"

namespace ordgraph {

class non_root_preserving : public precondition_error {
 public:
  non_root_preserving() : precondition_error("map does not send r to r") {}
};

/// Edge label of the edge from x to its parent: l(x), which is the number
/// of parallel edges in the encoding minus one, or that number itself.
enum class edge_labelling : unsigned char { l_value, multiplicity };

/// A labelled tree read as an edge-labelled tree: vertex 0 is r, tree vertex
/// v is v + 1, and the edge from x to its parent is named by x.
struct edge_tree {
  std::vector<int> parent;  // parent[0] == -1
  std::vector<unsigned> l;  // l[0] unused

  template <w_order W>
  static edge_tree of(const basic_labelled_tree<W>& t, edge_labelling how = edge_labelling::l_value) {
    edge_tree e;
    e.parent.assign(t.size() + 1, 0);
    e.l.assign(t.size() + 1, 0);
    e.parent[0] = -1;
    for (std::size_t v = 0; v < t.size(); ++v) {
      const int p = t.parent(static_cast<int>(v));
      e.parent[v + 1] = p + 1;  // none (-1) becomes r
      e.l[v + 1] = t.l(static_cast<int>(v)) + (how == edge_labelling::multiplicity ? 1u : 0u);
    }
    return e;
  }

  [[nodiscard]] std::size_t size() const noexcept { return parent.size(); }

  /// Edges (by lower end) on the path between a and b.
  [[nodiscard]] std::vector<int> path(int a, int b) const {
    std::vector<int> up_a, up_b;
    for (int x = a; x != -1; x = parent[static_cast<std::size_t>(x)]) up_a.push_back(x);
    for (int x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) up_b.push_back(x);
    while (up_a.size() > 1 && up_b.size() > 1 && up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
      up_a.pop_back();
      up_b.pop_back();
    }
    std::vector<int> out(up_a.begin(), up_a.end() - 1);
    out.insert(out.end(), up_b.rbegin() + 1, up_b.rend());
    return out;
  }
};

/// Checks a map of T1 into T2 as edge-labelled trees: vertices injective,
/// r to r, the T1 edge x (to its parent) sent to a walk `paths[x]` of T2
/// edges from f(x) to f(parent x), and l(e) >= sum of l(e') over the T1
/// edges e' whose path uses e. Paths need not be disjoint.
inline check_result edge_gap_violation(const edge_tree& t1, const edge_tree& t2, const std::vector<int>& f,
                                       const std::vector<std::vector<int>>& paths) {
  const auto n1 = t1.size(), n2 = t2.size();
  if (f.size() != n1) return "vertex map not total";
  if (paths.size() != n1) return "path map not total";
  if (f[0] != 0) throw non_root_preserving();
  std::vector<char> hit(n2, 0);
  for (int x : f) {
    if (x < 0 || static_cast<std::size_t>(x) >= n2) throw foreign_element("vertex " + std::to_string(x));
    if (hit[static_cast<std::size_t>(x)]) return "vertex map not injective at " + std::to_string(x);
    hit[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<unsigned long> load(n2, 0);
  for (std::size_t x = 1; x < n1; ++x) {
    int at = f[x];
    std::vector<int> seen{at};
    for (int e : paths[x]) {
      if (e <= 0 || static_cast<std::size_t>(e) >= n2) throw foreign_element("edge " + std::to_string(e));
      const int p = t2.parent[static_cast<std::size_t>(e)];
      if (at == e) {
        at = p;
      } else if (at == p) {
        at = e;
      } else {
        return "path of edge " + std::to_string(x) + " is broken at edge " + std::to_string(e);
      }
      for (int s : seen) {
        if (s == at) return "path of edge " + std::to_string(x) + " revisits a vertex";
      }
      seen.push_back(at);
      load[static_cast<std::size_t>(e)] += t1.l[x];
    }
    if (at != f[static_cast<std::size_t>(t1.parent[x])]) return "path of edge " + std::to_string(x) + " ends elsewhere";
  }
  for (std::size_t e = 1; e < n2; ++e) {
    if (load[e] > t2.l[e]) return "edge " + std::to_string(e) + " carries more than its label";
  }
  return std::nullopt;
}

inline bool check_edge_gap_map(const edge_tree& t1, const edge_tree& t2, const std::vector<int>& f,
                               const std::vector<std::vector<int>>& paths) {
  return !edge_gap_violation(t1, t2, f, paths);
}

/// Searches for an edge-gap map (paths in a tree are forced). Returns the
/// vertex map.
inline std::optional<std::vector<int>> find_edge_gap_map(const edge_tree& t1, const edge_tree& t2) {
  const auto n1 = t1.size(), n2 = t2.size();
  if (n1 > n2) return std::nullopt;
  std::vector<int> f(n1, -1);
  std::vector<char> taken(n2, 0);
  std::vector<unsigned long> load(n2, 0);
  f[0] = 0;
  taken[0] = 1;
  // vertices in index order; each edge is routed once both ends are placed
  auto search = [&](auto&& self, std::size_t x) -> bool {
    if (x == n1) return true;
    for (std::size_t y = 1; y < n2; ++y) {
      if (taken[y]) continue;
      f[x] = static_cast<int>(y);
      taken[y] = 1;
      // route every edge of x whose other end is already placed
      std::vector<std::vector<int>> routed;
      bool ok = true;
      auto route = [&](std::size_t edge, int a, int b) {
        auto p = t2.path(a, b);
        for (int e : p) load[static_cast<std::size_t>(e)] += t1.l[edge];
        routed.push_back(p);
        routed.back().push_back(static_cast<int>(edge));
        for (int e : p) ok = ok && load[static_cast<std::size_t>(e)] <= t2.l[static_cast<std::size_t>(e)];
      };
      const int px = t1.parent[x];
      if (static_cast<std::size_t>(px) < x) route(x, f[x], f[static_cast<std::size_t>(px)]);
      for (std::size_t c = 1; c < x; ++c) {
        if (static_cast<std::size_t>(t1.parent[c]) == x) route(c, f[c], f[x]);
      }
      if (ok && self(self, x + 1)) return true;
      for (auto& p : routed) {
        const auto edge = static_cast<std::size_t>(p.back());
        p.pop_back();
        for (int e : p) load[static_cast<std::size_t>(e)] -= t1.l[edge];
      }
      taken[y] = 0;
      f[x] = -1;
    }
    return false;
  };
  if (!search(search, 1)) return std::nullopt;
  return f;
}

}  // namespace ordgraph
