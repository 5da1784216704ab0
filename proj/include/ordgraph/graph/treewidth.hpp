#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordgraph/error.hpp"
#include "ordgraph/graph/multigraph.hpp"
#include "ordgraph/graph/witness.hpp"

namespace ordgraph {

/// A tree T and, per tree node, a subgraph of G given by vertex and edge
/// indices of G.
struct tree_decomposition {
  multigraph tree;
  std::vector<std::vector<int>> bag_vertices;
  std::vector<std::vector<int>> bag_edges;
};

/// Largest bag size minus one (-1 for a decomposition without vertices).
inline int width(const tree_decomposition& d) {
  std::size_t m = 0;
  for (const auto& b : d.bag_vertices) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

/// Checks that T is a tree, every bag a subgraph, the bags cover G (vertices
/// and edges), and for each tree edge t1-t2 every path of G between the two
/// sides passes through a vertex of G_t1 and G_t2. Edge directions of G are
/// ignored.
inline check_result tree_decomposition_violation(const multigraph& g, const tree_decomposition& d) {
  const auto& t = d.tree;
  const auto nt = t.num_vertices();
  if (nt == 0) return "decomposition tree has no nodes";
  if (d.bag_vertices.size() != nt || d.bag_edges.size() != nt) return "bags not given for every tree node";
  std::vector<int> all(nt);
  for (std::size_t i = 0; i < nt; ++i) all[i] = static_cast<int>(i);
  if (t.num_edges() + 1 != nt || !t.connected(all)) return "decomposition graph is not a tree";

  const auto n = g.num_vertices();
  std::vector<std::vector<char>> in_bag(nt, std::vector<char>(n, 0));
  std::vector<char> vcov(n, 0), ecov(g.num_edges(), 0);
  for (std::size_t i = 0; i < nt; ++i) {
    for (int v : d.bag_vertices[i]) {
      if (!g.contains_vertex(v)) return "bag " + t.vertex_id(static_cast<int>(i)) + " names an unknown vertex";
      in_bag[i][static_cast<std::size_t>(v)] = 1;
      vcov[static_cast<std::size_t>(v)] = 1;
    }
    for (int e : d.bag_edges[i]) {
      if (!g.contains_edge(e)) return "bag " + t.vertex_id(static_cast<int>(i)) + " names an unknown edge";
      auto [a, b] = g.ends(e);
      if (!in_bag[i][static_cast<std::size_t>(a)] || !in_bag[i][static_cast<std::size_t>(b)]) {
        return "bag " + t.vertex_id(static_cast<int>(i)) + " holds edge " + g.edge_id(e) + " without its ends";
      }
      ecov[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!vcov[v]) return "vertex " + g.vertex_id(static_cast<int>(v)) + " lies in no bag";
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!ecov[e]) return "edge " + g.edge_id(static_cast<int>(e)) + " lies in no bag";
  }

  for (std::size_t te = 0; te < t.num_edges(); ++te) {
    auto [t1, t2] = t.ends(static_cast<int>(te));
    // side of t1 once te is removed
    std::vector<char> side(nt, 0);
    std::vector<int> stack{t1};
    side[static_cast<std::size_t>(t1)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int f : t.incident(x)) {
        if (f == static_cast<int>(te)) continue;
        const int y = t.other(f, x);
        if (!side[static_cast<std::size_t>(y)]) {
          side[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::vector<char> u1(n, 0), u2(n, 0), sep(n, 0);
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        if (in_bag[i][v]) (side[i] ? u1 : u2)[v] = 1;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      sep[v] = in_bag[static_cast<std::size_t>(t1)][v] && in_bag[static_cast<std::size_t>(t2)][v];
    }
    // search G - sep from the t1 side
    std::vector<char> seen(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (u1[v] && !sep[v]) {
        seen[v] = 1;
        stack.push_back(static_cast<int>(v));
      }
    }
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (u2[static_cast<std::size_t>(x)]) {
        return "tree edge " + t.vertex_id(t1) + "-" + t.vertex_id(t2) + " does not separate at vertex " + g.vertex_id(x);
      }
      for (int f : g.incident(x)) {
        const auto y = static_cast<std::size_t>(g.other(f, x));
        if (!seen[y] && !sep[y]) {
          seen[y] = 1;
          stack.push_back(static_cast<int>(y));
        }
      }
    }
  }
  return std::nullopt;
}

inline bool verify_tree_decomposition(const multigraph& g, const tree_decomposition& d) {
  return !tree_decomposition_violation(g, d);
}

namespace detail {

// vertices outside S + {v} reachable from v through S
inline std::uint32_t beyond(const std::vector<std::uint32_t>& adj, std::uint32_t s, int v) {
  std::uint32_t seen = std::uint32_t{1} << v, frontier = seen, out = 0;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= ~seen;
    seen |= next;
    out |= next & ~s;
    frontier = next & s;
  }
  return out;
}

}  // namespace detail

/// A decomposition of minimum width, from an optimal elimination ordering
/// (exact dynamic programme over vertex subsets, at most 24 vertices).
inline tree_decomposition optimal_tree_decomposition(const multigraph& g) {
  const auto n = g.num_vertices();
  if (n > 24) throw bound_exceeded("tree-width needs at most 24 vertices");
  tree_decomposition d;
  if (n == 0) {
    d.tree.add_vertex("t0");
    d.bag_vertices.emplace_back();
    d.bag_edges.emplace_back();
    return d;
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(static_cast<int>(e));
    adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // best[S]: least achievable max |Q| when S is eliminated first
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0xff);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint8_t b = 0xff;
    for (std::uint32_t r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      const auto q = static_cast<std::uint8_t>(std::popcount(detail::beyond(adj, rest, v)));
      b = std::min(b, std::max(best[rest], q));
    }
    best[s] = b;
  }
  // recover an ordering from the full set backwards
  std::vector<int> order(n);
  std::uint32_t s = full;
  for (std::size_t k = n; k-- > 0;) {
    for (std::uint32_t r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      const auto q = static_cast<std::uint8_t>(std::popcount(detail::beyond(adj, rest, v)));
      if (std::max(best[rest], q) == best[s]) {
        order[k] = v;
        s = rest;
        break;
      }
    }
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;
  std::uint32_t eliminated = 0;
  std::vector<std::uint32_t> bags(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = order[i];
    bags[i] = detail::beyond(adj, eliminated, v) | (std::uint32_t{1} << v);
    eliminated |= std::uint32_t{1} << v;
    d.tree.add_vertex("t" + std::to_string(i));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint32_t later = bags[i] & ~(std::uint32_t{1} << order[i]);
    std::size_t parent = i + 1;
    if (later) {
      parent = n;
      for (std::uint32_t r = later; r; r &= r - 1) parent = std::min(parent, pos[static_cast<std::size_t>(std::countr_zero(r))]);
    }
    d.tree.add_edge(static_cast<int>(i), static_cast<int>(parent));
  }
  d.bag_vertices.assign(n, {});
  d.bag_edges.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t r = bags[i]; r; r &= r - 1) d.bag_vertices[i].push_back(std::countr_zero(r));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(static_cast<int>(e));
    const std::size_t first = std::min(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
    d.bag_edges[first].push_back(static_cast<int>(e));
  }
  return d;
}

/// Exact tree-width (-1 for the graph without vertices).
inline int treewidth(const multigraph& g) { return width(optimal_tree_decomposition(g)); }

}  // namespace ordgraph
