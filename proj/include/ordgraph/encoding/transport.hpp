#pragma once

#include <optional>
#include <vector>

#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/graph/witness.hpp"
#include "ordgraph/trees/labelled_tree.hpp"

namespace ordgraph {

/// Turns a vertex map of T1 into T2 (a gap embedding) into an immersion of
/// encode_directed(T1) into encode_directed(T2): the bundle of x goes down
/// the T2 route from the image of x's parent (or r) to f(x), the k-th
/// parallel edge of x using the k-th parallel edge of every bundle on the
/// route. Returns nothing when two bundles meet on a route or a route is too
/// thin, which cannot happen for infimum-preserving gap embeddings.
template <w_order W>
std::optional<expansion_witness> gap_embedding_to_immersion(const basic_labelled_tree<W>& t1,
                                                            const basic_labelled_tree<W>& t2,
                                                            const std::vector<int>& f,
                                                            const basic_encoded_graph<W>& g1,
                                                            const basic_encoded_graph<W>& g2) {
  if (f.size() != t1.size()) throw precondition_error("map not total on T1");
  const auto& m1 = g1.graph;
  const auto& m2 = g2.graph;
  // bundle[u]: edges from u's parent to u in G2
  std::vector<std::vector<int>> bundle(t2.size());
  std::vector<int> tree_of(m2.num_vertices(), -1);
  for (std::size_t u = 0; u < t2.size(); ++u) tree_of[static_cast<std::size_t>(g2.tree_vertex[u])] = static_cast<int>(u);
  for (std::size_t e = 0; e < m2.num_edges(); ++e) {
    const int child = tree_of[static_cast<std::size_t>(m2.ends(static_cast<int>(e)).second)];
    bundle[static_cast<std::size_t>(child)].push_back(static_cast<int>(e));
  }
  std::vector<char> used(t2.size(), 0);
  expansion_witness w;
  w.kind = expansion_kind::immersion;
  w.vertex_map.assign(m1.num_vertices(), -1);
  w.vertex_map[static_cast<std::size_t>(g1.root)] = g2.root;
  for (std::size_t x = 0; x < t1.size(); ++x) {
    w.vertex_map[static_cast<std::size_t>(g1.tree_vertex[x])] = g2.tree_vertex[static_cast<std::size_t>(f[x])];
  }
  w.paths.assign(m1.num_edges(), {});
  std::vector<int> seen(t1.size(), 0);
  for (std::size_t e = 0; e < m1.num_edges(); ++e) {
    const int gx = m1.ends(static_cast<int>(e)).second;
    int x = -1;
    for (std::size_t i = 0; i < t1.size(); ++i) {
      if (g1.tree_vertex[i] == gx) x = static_cast<int>(i);
    }
    const auto k = static_cast<std::size_t>(seen[static_cast<std::size_t>(x)]++);
    const int px = t1.parent(x);
    const int top = px == basic_labelled_tree<W>::none ? basic_labelled_tree<W>::none : f[static_cast<std::size_t>(px)];
    std::vector<int> route;
    for (int u = f[static_cast<std::size_t>(x)]; u != top; u = t2.parent(u)) {
      if (u == basic_labelled_tree<W>::none) return std::nullopt;  // image of the parent is not above
      route.push_back(u);
    }
    for (auto it = route.rbegin(); it != route.rend(); ++it) {
      const auto u = static_cast<std::size_t>(*it);
      if (k == 0) {
        if (used[u]) return std::nullopt;
        used[u] = 1;
      }
      if (k >= bundle[u].size()) return std::nullopt;
      w.paths[e].push_back(bundle[u][k]);
    }
  }
  return w;
}

}  // namespace ordgraph
