#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordgraph/graph/multigraph.hpp"
#include "ordgraph/graph/search.hpp"
#include "ordgraph/ord/term.hpp"
#include "ordgraph/trees/assign.hpp"
#include "ordgraph/trees/labelled_tree.hpp"
#include "ordgraph/wqo/quasi_order.hpp"

namespace ordgraph {

/// A labelled tree drawn as a multigraph: an extra vertex r labelled root,
/// every vertex joined to its parent (the root to r) by l(v)+1 parallel
/// edges. `labels[v]` is empty exactly for root-labelled vertices.
template <w_order W>
struct basic_encoded_graph {
  multigraph graph;
  int root = 0;
  std::vector<std::optional<q_label<W>>> labels;
  std::vector<int> tree_vertex;  // graph vertex of each tree vertex (encode only)
};

using encoded_graph = basic_encoded_graph<cnf_w>;

class root_requested : public precondition_error {
 public:
  root_requested() : precondition_error("the root-labelled vertex has no subgraph") {}
};

namespace detail {

template <w_order W>
basic_encoded_graph<W> encode_impl(const basic_labelled_tree<W>& t, bool directed) {
  if (!is_assignable(t)) throw not_assignable("cannot encode");
  basic_encoded_graph<W> g{multigraph(directed), 0, {}, {}};
  g.root = g.graph.add_vertex("r");
  g.labels.emplace_back();
  std::vector<int> at(t.size(), -1);
  for (int v : t.preorder()) {
    std::string id = t.name(v);
    if (id == "r") id = "r_";
    at[static_cast<std::size_t>(v)] = g.graph.add_vertex(id);
    g.labels.emplace_back(t.lq(v));
    const int p = t.parent(v) == basic_labelled_tree<W>::none ? g.root : at[static_cast<std::size_t>(t.parent(v))];
    for (unsigned k = 0; k <= t.l(v); ++k) g.graph.add_edge(p, at[static_cast<std::size_t>(v)]);
  }
  g.tree_vertex = std::move(at);
  return g;
}

}  // namespace detail

template <w_order W>
basic_encoded_graph<W> encode(const basic_labelled_tree<W>& t) {
  return detail::encode_impl(t, false);
}

/// As encode, with every edge directed away from r.
template <w_order W>
basic_encoded_graph<W> encode_directed(const basic_labelled_tree<W>& t) {
  return detail::encode_impl(t, true);
}

/// The tree order of an encoded graph: parent of every vertex on the way to
/// the root-labelled vertex (-1 for it). Checks the encoding invariants.
template <w_order W>
std::vector<int> encoded_parents(const basic_encoded_graph<W>& g) {
  const auto& m = g.graph;
  const auto n = m.num_vertices();
  if (g.labels.size() != n) throw precondition_error("labels not given for every vertex");
  int roots = 0;
  for (const auto& l : g.labels) roots += !l.has_value();
  if (roots != 1 || g.labels.at(static_cast<std::size_t>(g.root)).has_value()) {
    throw precondition_error("encoded graph needs exactly one root-labelled vertex");
  }
  std::vector<int> parent(n, -2);
  parent[static_cast<std::size_t>(g.root)] = -1;
  std::vector<int> queue{g.root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    for (int e : m.incident(v)) {
      const int w = m.other(e, v);
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      } else if (parent[static_cast<std::size_t>(w)] != v) {
        throw precondition_error("underlying simple graph is not a tree");
      }
      if (m.directed() && m.ends(e).first != v) throw precondition_error("edge not directed away from the root");
    }
  }
  if (queue.size() != n) throw precondition_error("encoded graph is not connected");
  return parent;
}

/// Reads the tree back: l(v) from the multiplicity to the parent.
template <w_order W>
basic_labelled_tree<W> decode(const basic_encoded_graph<W>& g) {
  const auto parent = encoded_parents(g);
  const auto& m = g.graph;
  basic_labelled_tree<W> t;
  std::vector<int> at(m.num_vertices(), -1);
  // breadth-first from r so parents come first
  std::vector<int> queue{g.root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    for (int e : m.incident(v)) {
      const int w = m.other(e, v);
      if (parent[static_cast<std::size_t>(w)] != v || at[static_cast<std::size_t>(w)] != -1) continue;
      const auto mult = m.multiplicity(m.directed() ? v : w, m.directed() ? w : v);
      const auto l = static_cast<unsigned>(mult - 1);
      const auto& lab = *g.labels[static_cast<std::size_t>(w)];
      if (v == g.root) {
        if (!t.empty()) throw precondition_error("root-labelled vertex has more than one successor");
        at[static_cast<std::size_t>(w)] = t.add_root(l, lab, m.vertex_id(w));
      } else {
        at[static_cast<std::size_t>(w)] = t.add_child(at[static_cast<std::size_t>(v)], l, lab, m.vertex_id(w));
      }
      queue.push_back(w);
    }
  }
  return t;
}

/// G^v: the vertices at or above v in the tree order, plus a fresh
/// root-labelled vertex joined to v by as many edges as v has to its parent.
template <w_order W>
basic_encoded_graph<W> graph_subtree(const basic_encoded_graph<W>& g, int v) {
  g.graph.check_vertex(v);
  if (v == g.root) throw root_requested();
  const auto parent = encoded_parents(g);
  const auto& m = g.graph;
  basic_encoded_graph<W> out{multigraph(m.directed()), 0, {}, {}};
  std::string rid = "r'";
  while (m.find_vertex(rid)) rid += "'";
  out.root = out.graph.add_vertex(rid);
  out.labels.emplace_back();
  std::vector<int> at(m.num_vertices(), -1);
  std::vector<int> queue{v};
  at[static_cast<std::size_t>(v)] = out.graph.add_vertex(m.vertex_id(v));
  out.labels.push_back(g.labels[static_cast<std::size_t>(v)]);
  const int pv = parent[static_cast<std::size_t>(v)];
  for (std::size_t k = 0; k < m.multiplicity(m.directed() ? pv : v, m.directed() ? v : pv); ++k) {
    out.graph.add_edge(out.root, at[static_cast<std::size_t>(v)]);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (int e : m.incident(x)) {
      const int y = m.other(e, x);
      if (parent[static_cast<std::size_t>(y)] != x) continue;
      if (at[static_cast<std::size_t>(y)] == -1) {
        at[static_cast<std::size_t>(y)] = out.graph.add_vertex(m.vertex_id(y));
        out.labels.push_back(g.labels[static_cast<std::size_t>(y)]);
        queue.push_back(y);
      }
      out.graph.add_edge(at[static_cast<std::size_t>(x)], at[static_cast<std::size_t>(y)]);
    }
  }
  return out;
}

namespace detail {

template <w_order W>
basic_ord<W> graph_ordinal(const basic_encoded_graph<W>& g, const std::vector<int>& parent, int v) {
  const auto& m = g.graph;
  const int p = parent[static_cast<std::size_t>(v)];
  const auto l = static_cast<unsigned>(m.multiplicity(m.directed() ? p : v, m.directed() ? v : p) - 1);
  std::vector<int> succ;
  for (int e : m.incident(v)) {
    const int w = m.other(e, v);
    if (parent[static_cast<std::size_t>(w)] == v && std::find(succ.begin(), succ.end(), w) == succ.end()) {
      succ.push_back(w);
    }
  }
  const auto& lab = g.labels[static_cast<std::size_t>(v)];
  if (!lab) throw not_assignable("root label below the root");
  std::vector<basic_ord<W>> kids;
  for (int w : succ) kids.push_back(graph_ordinal(g, parent, w));
  // a w0 vertex with a successor is rejected here too: w0 + alpha is undefined
  return assign_step(*lab, l, kids);
}

}  // namespace detail

/// o(G), by the case list on the successor of r; l is read from edge
/// multiplicities.
template <w_order W>
basic_ord<W> assign_ordinal_graph(const basic_encoded_graph<W>& g) {
  const auto parent = encoded_parents(g);
  std::vector<int> succ;
  for (int e : g.graph.incident(g.root)) {
    const int w = g.graph.other(e, g.root);
    if (std::find(succ.begin(), succ.end(), w) == succ.end()) succ.push_back(w);
  }
  if (succ.size() != 1) throw not_assignable("the root-labelled vertex needs exactly one successor");
  return detail::graph_ordinal(g, parent, succ[0]);
}

/// Whether a vertex map keeps the tree order of the encodings: u below v
/// (on the way from r to v) implies f(u) below f(v).
template <w_order W>
bool preserves_tree_order(const basic_encoded_graph<W>& g1, const basic_encoded_graph<W>& g2,
                          const std::vector<int>& f) {
  const auto p1 = encoded_parents(g1);
  const auto p2 = encoded_parents(g2);
  if (f.size() != p1.size()) throw precondition_error("vertex map not total");
  auto below = [](const std::vector<int>& p, int u, int v) {
    for (int x = v; x != -1; x = p[static_cast<std::size_t>(x)]) {
      if (x == u) return true;
    }
    return false;
  };
  for (std::size_t u = 0; u < p1.size(); ++u) {
    for (std::size_t v = 0; v < p1.size(); ++v) {
      if (below(p1, static_cast<int>(u), static_cast<int>(v)) && !below(p2, f[u], f[v])) return false;
    }
  }
  return true;
}

/// Q' = Q + {root} restricted to the labels in use: the three symbols, root,
/// and the given W-elements with their own order. Everything else is
/// incomparable.
template <w_order W>
class label_space {
 public:
  explicit label_space(std::vector<W> pool) : pool_(std::move(pool)), order_(build()) {}

  /// Label space covering every W-label of the given graphs.
  static label_space covering(std::initializer_list<const basic_encoded_graph<W>*> graphs) {
    std::vector<W> pool;
    for (const auto* g : graphs) {
      for (const auto& l : g->labels) {
        if (l && l->is_w() && std::find(pool.begin(), pool.end(), l->w) == pool.end()) pool.push_back(l->w);
      }
    }
    std::sort(pool.begin(), pool.end());
    return label_space(std::move(pool));
  }

  [[nodiscard]] const wqo::quasi_order& order() const noexcept { return order_; }

  [[nodiscard]] std::size_t index(const std::optional<q_label<W>>& l) const {
    if (!l) return 0;
    switch (l->sym) {
      case symbol::plus: return 1;
      case symbol::omega_dot: return 2;
      case symbol::psi_sym: return 3;
      case symbol::w: break;
    }
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (pool_[i] == l->w) return 4 + i;
    }
    throw foreign_element("label " + l->str() + " outside the label space");
  }

  /// Copies the labels of g into its multigraph as indices of this space.
  void bind(basic_encoded_graph<W>& g) const {
    for (std::size_t v = 0; v < g.labels.size(); ++v) {
      g.graph.set_vertex_label(static_cast<int>(v), index(g.labels[v]));
    }
  }

 private:
  wqo::quasi_order build() const {
    std::vector<std::string> names{"root", "plus", "omegadot", "psisym"};
    for (const auto& w : pool_) names.push_back("w:" + w.str());
    const auto n = names.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (std::size_t a = 0; a < pool_.size(); ++a) {
      for (std::size_t b = 0; b < pool_.size(); ++b) leq[4 + a][4 + b] = pool_[a] <= pool_[b];
    }
    return {std::move(names), std::move(leq)};
  }

  std::vector<W> pool_;
  wqo::quasi_order order_;
};

/// Immersion of one encoded graph into another with r pinned to r; with
/// `respect_labels`, vertex labels are compared in Q'.
template <w_order W>
std::optional<expansion_witness> find_encoded_immersion(const basic_encoded_graph<W>& g1,
                                                        const basic_encoded_graph<W>& g2,
                                                        bool respect_labels = true,
                                                        search_budget budget = {}) {
  auto a = g1;
  auto b = g2;
  const auto space = label_space<W>::covering({&g1, &g2});
  space.bind(a);
  space.bind(b);
  immersion_options opt;
  opt.respect_labels = respect_labels;
  opt.labels = &space.order();
  opt.pins = {{g1.root, g2.root}};
  opt.budget = budget;
  return find_immersion(a.graph, b.graph, opt);
}

}  // namespace ordgraph
