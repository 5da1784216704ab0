#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordgraph/graph/multigraph.hpp"
#include "ordgraph/wqo/quasi_order.hpp"

namespace ordgraph {

enum class expansion_kind : unsigned char { minor, immersion, collapse };

inline const char* to_string(expansion_kind k) {
  switch (k) {
    case expansion_kind::minor: return "minor";
    case expansion_kind::immersion: return "immersion";
    case expansion_kind::collapse: return "collapse";
  }
  return "?";
}

/// Witness that G1 sits in G2. Indexed by G1 vertex / G1 edge.
///  - minor and collapse: `branch_sets` (G2 vertices) and `edge_map`
///  - collapse additionally: `branch_edges`, the edges of each f(v) as a
///    subgraph of the complete graph on V(G2); empty means the G2-adjacent
///    pairs inside the set
///  - immersion: `vertex_map` and `paths` (G2 edge sequences)
struct expansion_witness {
  expansion_kind kind = expansion_kind::minor;
  std::vector<std::vector<int>> branch_sets;
  std::vector<std::vector<std::pair<int, int>>> branch_edges;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<std::vector<int>> paths;
};

/// Why a witness was rejected, or empty when it is valid.
using check_result = std::optional<std::string>;

namespace detail {

inline bool label_leq(const wqo::quasi_order* q, multigraph::label a, multigraph::label b) {
  if (!q) return true;
  return a && b && *a < q->size() && *b < q->size() && q->leq(*a, *b);
}

}  // namespace detail

/// Minor expansion: connected, pairwise disjoint branch sets; injective edge
/// map; f(e) joins the branch sets of e's ends (in direction when directed).
/// With `labels`, each G1 vertex label is below the label of some vertex of
/// its branch set and each G1 edge label below that of its image.
inline check_result minor_violation(const multigraph& g1, const multigraph& g2, const expansion_witness& w,
                                    const wqo::quasi_order* labels = nullptr) {
  if (g1.directed() != g2.directed()) return "graphs differ in direction mode";
  if (w.branch_sets.size() != g1.num_vertices()) return "branch sets not total on V(G1)";
  if (w.edge_map.size() != g1.num_edges()) return "edge map not total on E(G1)";
  std::vector<int> owner(g2.num_vertices(), -1);
  for (std::size_t v = 0; v < w.branch_sets.size(); ++v) {
    const auto& bs = w.branch_sets[v];
    for (int x : bs) {
      if (!g2.contains_vertex(x)) return "unknown G2 vertex " + std::to_string(x);
      auto& o = owner[static_cast<std::size_t>(x)];
      if (o != -1) return "branch sets of " + g1.vertex_id(o) + " and " + g1.vertex_id(static_cast<int>(v)) + " meet";
      o = static_cast<int>(v);
    }
    if (!g2.connected(bs)) return "branch set of " + g1.vertex_id(static_cast<int>(v)) + " is not connected";
    if (labels) {
      const bool ok = std::any_of(bs.begin(), bs.end(), [&](int x) {
        return detail::label_leq(labels, g1.vertex_label(static_cast<int>(v)), g2.vertex_label(x));
      });
      if (!ok) return "label of " + g1.vertex_id(static_cast<int>(v)) + " not respected";
    }
  }
  std::vector<char> used(g2.num_edges(), 0);
  for (std::size_t e = 0; e < w.edge_map.size(); ++e) {
    const int fe = w.edge_map[e];
    const auto eid = g1.edge_id(static_cast<int>(e));
    if (!g2.contains_edge(fe)) return "edge " + eid + " has no image";
    if (used[static_cast<std::size_t>(fe)]) return "edge map not injective at " + g2.edge_id(fe);
    used[static_cast<std::size_t>(fe)] = 1;
    auto [u, v] = g1.ends(static_cast<int>(e));
    auto [a, b] = g2.ends(fe);
    const int oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
    const bool fwd = oa == u && ob == v;
    const bool bwd = oa == v && ob == u;
    if (!(fwd || (!g1.directed() && bwd))) return "image of edge " + eid + " does not join its branch sets";
    if (labels && g1.has_edge_labels() &&
        !detail::label_leq(labels, g1.edge_label(static_cast<int>(e)), g2.edge_label(fe))) {
      return "label of edge " + eid + " not respected";
    }
  }
  return std::nullopt;
}

inline bool check_minor(const multigraph& g1, const multigraph& g2, const expansion_witness& w,
                        const wqo::quasi_order* labels = nullptr) {
  return !minor_violation(g1, g2, w, labels);
}

/// Immersion expansion: injective vertex map; each edge u-v of G1 goes to a
/// path of G2 from f(u) to f(v) (a directed path when directed); paths are
/// pairwise edge-disjoint. With `labels`, vertex labels are respected.
inline check_result immersion_violation(const multigraph& g1, const multigraph& g2, const expansion_witness& w,
                                        const wqo::quasi_order* labels = nullptr) {
  if (g1.directed() != g2.directed()) return "graphs differ in direction mode";
  if (w.vertex_map.size() != g1.num_vertices()) return "vertex map not total on V(G1)";
  if (w.paths.size() != g1.num_edges()) return "path map not total on E(G1)";
  std::vector<char> hit(g2.num_vertices(), 0);
  for (std::size_t v = 0; v < w.vertex_map.size(); ++v) {
    const int x = w.vertex_map[v];
    if (!g2.contains_vertex(x)) return "unknown G2 vertex " + std::to_string(x);
    if (hit[static_cast<std::size_t>(x)]) return "vertex map not injective at " + g2.vertex_id(x);
    hit[static_cast<std::size_t>(x)] = 1;
    if (labels && !detail::label_leq(labels, g1.vertex_label(static_cast<int>(v)), g2.vertex_label(x))) {
      return "label of " + g1.vertex_id(static_cast<int>(v)) + " not respected";
    }
  }
  std::vector<char> used(g2.num_edges(), 0);
  for (std::size_t e = 0; e < w.paths.size(); ++e) {
    const auto eid = g1.edge_id(static_cast<int>(e));
    auto [u, v] = g1.ends(static_cast<int>(e));
    const auto& p = w.paths[e];
    if (p.empty()) return "empty path for edge " + eid;
    int at = w.vertex_map[static_cast<std::size_t>(u)];
    std::vector<int> visited{at};
    for (int pe : p) {
      if (!g2.contains_edge(pe)) return "unknown G2 edge " + std::to_string(pe);
      if (used[static_cast<std::size_t>(pe)]) return "paths share edge " + g2.edge_id(pe);
      used[static_cast<std::size_t>(pe)] = 1;
      auto [a, b] = g2.ends(pe);
      if (a == at) {
        at = b;
      } else if (b == at && !g2.directed()) {
        at = a;
      } else {
        return "path of edge " + eid + " is broken at " + g2.edge_id(pe);
      }
      if (std::find(visited.begin(), visited.end(), at) != visited.end()) {
        return "path of edge " + eid + " revisits " + g2.vertex_id(at);
      }
      visited.push_back(at);
    }
    if (at != w.vertex_map[static_cast<std::size_t>(v)]) return "path of edge " + eid + " ends at the wrong vertex";
  }
  return std::nullopt;
}

inline bool check_immersion(const multigraph& g1, const multigraph& g2, const expansion_witness& w,
                            const wqo::quasi_order* labels = nullptr) {
  return !immersion_violation(g1, g2, w, labels);
}

/// Collapse of G2 to G1 (graphs only): each f(v) is a connected subgraph of
/// the complete graph on V(G2), vertex sets pairwise disjoint; edges map
/// injectively into E(G2) with f(e) incident with f(v) whenever e is
/// incident with v; every edge of every f(v) has its ends joined by an edge
/// of G2; with `labels`, edge labels are respected.
inline check_result collapse_violation(const multigraph& g2, const multigraph& g1, const expansion_witness& w,
                                       const wqo::quasi_order* labels = nullptr) {
  if (w.branch_sets.size() != g1.num_vertices()) return "vertex images not total on V(G1)";
  if (w.edge_map.size() != g1.num_edges()) return "edge map not total on E(G1)";
  if (!w.branch_edges.empty() && w.branch_edges.size() != g1.num_vertices()) return "branch edges not total on V(G1)";
  std::vector<int> owner(g2.num_vertices(), -1);
  for (std::size_t v = 0; v < w.branch_sets.size(); ++v) {
    const auto& bs = w.branch_sets[v];
    const auto vid = g1.vertex_id(static_cast<int>(v));
    if (bs.empty()) return "empty image for " + vid;
    for (int x : bs) {
      if (!g2.contains_vertex(x)) throw foreign_element("vertex index " + std::to_string(x));
      auto& o = owner[static_cast<std::size_t>(x)];
      if (o != -1) return "images of " + g1.vertex_id(o) + " and " + vid + " meet";
      o = static_cast<int>(v);
    }
    std::vector<std::pair<int, int>> kedges;
    if (w.branch_edges.empty() || w.branch_edges[v].empty()) {
      for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
          if (g2.adjacent(bs[i], bs[j])) kedges.emplace_back(bs[i], bs[j]);
        }
      }
    } else {
      kedges = w.branch_edges[v];
    }
    // connectivity inside the complete graph, along the chosen edges
    std::vector<int> comp(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) comp[i] = static_cast<int>(i);
    auto pos = [&](int x) {
      return static_cast<std::size_t>(std::find(bs.begin(), bs.end(), x) - bs.begin());
    };
    auto find = [&](std::size_t i) {
      while (comp[i] != static_cast<int>(i)) i = static_cast<std::size_t>(comp[i]);
      return i;
    };
    for (auto [a, b] : kedges) {
      if (!g2.contains_vertex(a) || !g2.contains_vertex(b)) throw foreign_element("vertex in branch edge");
      const auto pa = pos(a), pb = pos(b);
      if (pa == bs.size() || pb == bs.size() || a == b) return "edge of the image of " + vid + " leaves its vertex set";
      if (!g2.adjacent(a, b)) {
        return "edge " + g2.vertex_id(a) + "-" + g2.vertex_id(b) + " in the image of " + vid + " is not an edge of G2";
      }
      comp[find(pa)] = static_cast<int>(find(pb));
    }
    for (std::size_t i = 1; i < bs.size(); ++i) {
      if (find(i) != find(0)) return "image of " + vid + " is not connected";
    }
  }
  std::vector<char> used(g2.num_edges(), 0);
  for (std::size_t e = 0; e < w.edge_map.size(); ++e) {
    const int fe = w.edge_map[e];
    const auto eid = g1.edge_id(static_cast<int>(e));
    if (!g2.contains_edge(fe)) throw foreign_element("edge index " + std::to_string(fe));
    if (used[static_cast<std::size_t>(fe)]) return "edge map not injective at " + g2.edge_id(fe);
    used[static_cast<std::size_t>(fe)] = 1;
    auto [u, v] = g1.ends(static_cast<int>(e));
    auto [a, b] = g2.ends(fe);
    for (int end : {u, v}) {
      const bool touches = owner[static_cast<std::size_t>(a)] == end || owner[static_cast<std::size_t>(b)] == end;
      if (!touches) return "image of edge " + eid + " misses the image of " + g1.vertex_id(end);
    }
    if (labels && g1.has_edge_labels() &&
        !detail::label_leq(labels, g1.edge_label(static_cast<int>(e)), g2.edge_label(fe))) {
      return "label of edge " + eid + " not respected";
    }
  }
  return std::nullopt;
}

inline bool check_collapse(const multigraph& g2, const multigraph& g1, const expansion_witness& w,
                           const wqo::quasi_order* labels = nullptr) {
  return !collapse_violation(g2, g1, w, labels);
}

}  // namespace ordgraph
