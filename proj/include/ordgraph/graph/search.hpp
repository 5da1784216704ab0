#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ordgraph/budget.hpp"
#include "ordgraph/error.hpp"
#include "ordgraph/graph/multigraph.hpp"
#include "ordgraph/graph/witness.hpp"

namespace ordgraph {

namespace detail {

// Kuhn's augmenting paths: assign each left item one of its candidates,
// injectively.
inline bool match_all(const std::vector<std::vector<int>>& cand, std::size_t right, std::vector<int>& assign) {
  std::vector<int> owner(right, -1);
  assign.assign(cand.size(), -1);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<char> seen(right, 0);
    auto augment = [&](auto&& self, std::size_t x) -> bool {
      for (int r : cand[x]) {
        const auto ri = static_cast<std::size_t>(r);
        if (seen[ri]) continue;
        seen[ri] = 1;
        if (owner[ri] < 0 || self(self, static_cast<std::size_t>(owner[ri]))) {
          owner[ri] = static_cast<int>(x);
          assign[x] = r;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace detail

/// Exhaustive minor search: every G2 vertex goes to one branch set or none,
/// then the edge map is a bipartite matching. Complete within the budget.
inline std::optional<expansion_witness> find_minor(const multigraph& g1, const multigraph& g2,
                                                   const wqo::quasi_order* labels = nullptr,
                                                   search_budget budget = {}) {
  if (g1.directed() != g2.directed()) throw precondition_error("graphs differ in direction mode");
  const auto n1 = g1.num_vertices(), n2 = g2.num_vertices();
  if (n1 > n2 || g1.num_edges() > g2.num_edges()) return std::nullopt;
  std::vector<int> owner(n2, -1);
  std::vector<std::size_t> count(n1, 0);
  std::size_t unfilled = n1;
  std::optional<expansion_witness> out;

  auto finish = [&]() -> bool {
    expansion_witness w;
    w.kind = expansion_kind::minor;
    w.branch_sets.assign(n1, {});
    for (std::size_t x = 0; x < n2; ++x) {
      if (owner[x] >= 0) w.branch_sets[static_cast<std::size_t>(owner[x])].push_back(static_cast<int>(x));
    }
    for (std::size_t v = 0; v < n1; ++v) {
      if (!g2.connected(w.branch_sets[v])) return false;
      if (labels) {
        bool ok = false;
        for (int x : w.branch_sets[v]) {
          ok = ok || detail::label_leq(labels, g1.vertex_label(static_cast<int>(v)), g2.vertex_label(x));
        }
        if (!ok) return false;
      }
    }
    std::vector<std::vector<int>> cand(g1.num_edges());
    for (std::size_t e = 0; e < g1.num_edges(); ++e) {
      auto [u, v] = g1.ends(static_cast<int>(e));
      for (std::size_t f = 0; f < g2.num_edges(); ++f) {
        auto [a, b] = g2.ends(static_cast<int>(f));
        const int oa = owner[static_cast<std::size_t>(a)], ob = owner[static_cast<std::size_t>(b)];
        const bool joins = (oa == u && ob == v) || (!g1.directed() && oa == v && ob == u);
        if (!joins) continue;
        if (labels && g1.has_edge_labels() &&
            !detail::label_leq(labels, g1.edge_label(static_cast<int>(e)), g2.edge_label(static_cast<int>(f)))) {
          continue;
        }
        cand[e].push_back(static_cast<int>(f));
      }
    }
    if (!detail::match_all(cand, g2.num_edges(), w.edge_map)) return false;
    out = std::move(w);
    return true;
  };

  auto search = [&](auto&& self, std::size_t x) -> bool {
    budget.tick("minor search");
    if (n2 - x < unfilled) return false;
    if (x == n2) return finish();
    for (int v = -1; v < static_cast<int>(n1); ++v) {
      owner[x] = v;
      if (v >= 0 && count[static_cast<std::size_t>(v)]++ == 0) --unfilled;
      const bool found = self(self, x + 1);
      if (v >= 0 && --count[static_cast<std::size_t>(v)] == 0) ++unfilled;
      if (found) return true;
    }
    owner[x] = -1;
    return false;
  };
  search(search, 0);
  return out;
}

struct immersion_options {
  bool respect_labels = false;
  const wqo::quasi_order* labels = nullptr;  // required when respect_labels
  std::vector<std::pair<int, int>> pins;     // (G1 vertex, G2 vertex) forced
  search_budget budget{};
};

/// Exhaustive immersion search: injective vertex images with degree
/// pruning, then edge-disjoint path packing edge by edge. Directed graphs
/// get directed paths.
inline std::optional<expansion_witness> find_immersion(const multigraph& g1, const multigraph& g2,
                                                       immersion_options opt = {}) {
  if (g1.directed() != g2.directed()) throw precondition_error("graphs differ in direction mode");
  if (opt.respect_labels) {
    if (!opt.labels) throw precondition_error("label-respecting immersion needs a label order");
    g1.require_labels(*opt.labels, true, false);
    g2.require_labels(*opt.labels, true, false);
  }
  const auto n1 = g1.num_vertices(), n2 = g2.num_vertices();
  if (n1 > n2 || g1.num_edges() > g2.num_edges()) return std::nullopt;
  const bool dir = g1.directed();
  std::vector<int> pin(n1, -1);
  for (auto [v, x] : opt.pins) {
    g1.check_vertex(v);
    g2.check_vertex(x);
    pin[static_cast<std::size_t>(v)] = x;
  }

  // vertices with many edges first; pinned ones before all
  std::vector<int> order;
  for (std::size_t v = 0; v < n1; ++v) order.push_back(static_cast<int>(v));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const bool pa = pin[static_cast<std::size_t>(a)] >= 0, pb = pin[static_cast<std::size_t>(b)] >= 0;
    if (pa != pb) return pa;
    return g1.degree(a) > g1.degree(b);
  });

  auto admissible = [&](int v, int x) {
    if (g1.degree(v) > g2.degree(x)) return false;
    if (dir && (g1.out_degree(v) > g2.out_degree(x) || g1.in_degree(v) > g2.in_degree(x))) return false;
    if (opt.respect_labels && !detail::label_leq(opt.labels, g1.vertex_label(v), g2.vertex_label(x))) return false;
    return true;
  };

  std::vector<int> image(n1, -1);
  std::vector<char> taken(n2, 0), used(g2.num_edges(), 0);
  std::vector<std::vector<int>> paths(g1.num_edges());
  std::optional<expansion_witness> out;
  // paths of different edges may share vertices, so each edge keeps its own marks
  std::vector<std::vector<char>> visited(g1.num_edges(), std::vector<char>(n2, 0));

  auto route = [&](auto&& self, std::size_t e) -> bool {
    if (e == g1.num_edges()) {
      expansion_witness w;
      w.kind = expansion_kind::immersion;
      w.vertex_map = image;
      w.paths = paths;
      out = std::move(w);
      return true;
    }
    auto [u, v] = g1.ends(static_cast<int>(e));
    const int src = image[static_cast<std::size_t>(u)], dst = image[static_cast<std::size_t>(v)];
    auto& path = paths[e];
    auto& visited_vertex = visited[e];
    // depth-first over simple paths from src to dst on unused edges
    auto walk = [&](auto&& again, int at) -> bool {
      opt.budget.tick("immersion search");
      if (at == dst) return self(self, e + 1);
      for (int f : g2.incident(at)) {
        const auto fi = static_cast<std::size_t>(f);
        if (used[fi]) continue;
        auto [a, b] = g2.ends(f);
        if (dir && a != at) continue;
        const int nxt = a == at ? b : a;
        if (visited_vertex[static_cast<std::size_t>(nxt)]) continue;
        used[fi] = 1;
        visited_vertex[static_cast<std::size_t>(nxt)] = 1;
        path.push_back(f);
        if (again(again, nxt)) return true;
        path.pop_back();
        visited_vertex[static_cast<std::size_t>(nxt)] = 0;
        used[fi] = 0;
      }
      return false;
    };
    visited_vertex[static_cast<std::size_t>(src)] = 1;
    const bool ok = walk(walk, src);
    visited_vertex[static_cast<std::size_t>(src)] = 0;
    return ok;
  };

  auto place = [&](auto&& self, std::size_t k) -> bool {
    opt.budget.tick("immersion search");
    if (k == order.size()) return route(route, 0);
    const int v = order[k];
    const int forced = pin[static_cast<std::size_t>(v)];
    for (std::size_t xi = 0; xi < n2; ++xi) {
      const int x = static_cast<int>(xi);
      if (taken[xi] || (forced >= 0 && x != forced) || !admissible(v, x)) continue;
      taken[xi] = 1;
      image[static_cast<std::size_t>(v)] = x;
      if (self(self, k + 1)) return true;
      image[static_cast<std::size_t>(v)] = -1;
      taken[xi] = 0;
    }
    return false;
  };
  place(place, 0);
  return out;
}

}  // namespace ordgraph
