#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "ordgraph/trees/enumerate.hpp"

namespace ordgraph {

/// Relations between corpus trees that the target-driven enumerator knows.
///  - gap_embedding: infimum-preserving gap embedding of labelled trees
///  - directed_immersion: immersion between the directed encodings
///  - undirected_immersion: immersion between the undirected encodings
/// Immersions pin the extra vertex r to r. With `respect_labels` a vertex
/// may only land on a vertex whose label dominates its own.
enum class tree_relation : unsigned char { gap_embedding, directed_immersion, undirected_immersion };

inline const char* to_string(tree_relation r) {
  switch (r) {
    case tree_relation::gap_embedding: return "gap";
    case tree_relation::directed_immersion: return "directed";
    case tree_relation::undirected_immersion: return "undirected";
  }
  return "?";
}

/// For a target tree T2 in a corpus, lists every corpus tree T1 with a
/// normal-form ordinal that is related to T2. Works by enumerating vertex
/// images S, the tree structure T1 induces on S, and then labels and l-values
/// under the relation's constraints, so the cost follows the number of
/// related pairs rather than the square of the corpus.
///
/// Every T2 vertex v stands for the edge bundle to its parent (to r for the
/// root). A T1 vertex x with parent p is routed along the T2 path between
/// f(x) and f(p), written route(x) as a set of such bundles:
///  - gap: l(x) <= l(v) for v in route(x), siblings meet exactly at f(p)
///  - directed: f(p) a proper ancestor of f(x), sum of l(x)+1 over x with
///    v in route(x) at most l(v)+1
///  - undirected: as directed without the ancestor requirement
template <w_order W>
class related_trees {
 public:
  using corpus = tree_corpus<W>;
  static constexpr int max_vertices = 12;

  related_trees(const corpus& c, tree_relation rel, bool respect_labels = true)
      : c_(c), rel_(rel), respect_(respect_labels) {
    if (c.bounds().max_vertices > static_cast<std::size_t>(max_vertices)) {
      throw precondition_error("related_trees supports at most 12 vertices per tree");
    }
    const auto& pool = c.bounds().pool;
    const auto n = pool.size();
    leq_.assign(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) leq_[a][b] = pool[a] <= pool[b];
    }
  }

  [[nodiscard]] tree_relation relation() const noexcept { return rel_; }
  [[nodiscard]] bool respects_labels() const noexcept { return respect_; }

  /// Sorted corpus indices of the normal-form trees T1 related to T2.
  [[nodiscard]] std::vector<std::uint32_t> sources(std::uint32_t t2) const {
    state s(*this, t2);
    s.run();
    auto& out = s.found;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  struct option {
    symbol sym;
    std::uint8_t w;
  };

  struct state {
    const related_trees& g;
    int k = 0;
    std::array<int, max_vertices> parent{};
    std::array<std::uint32_t, max_vertices> up{};  // ancestors-or-self bitmask
    std::array<unsigned, max_vertices> l2{};
    std::array<std::array<std::vector<option>, 3>, max_vertices> opts;

    // current structure
    std::uint32_t S = 0;
    std::vector<int> order;    // T1 vertices as T2 images, BFS order
    std::vector<int> tparent;  // position of the T1 parent in `order`, -1 for the root
    std::vector<int> arity;
    std::vector<std::uint32_t> route;
    std::vector<unsigned> gap_bound;
    // label and l enumeration
    std::vector<std::uint32_t> index;  // corpus index of the T1 subtree
    std::vector<std::array<std::uint32_t, 2>> kids;
    std::vector<int> nkids;
    std::array<int, max_vertices> cap{};

    std::vector<std::uint32_t> found;

    state(const related_trees& owner, std::uint32_t t2) : g(owner) {
      const corpus& c = g.c_;
      // flatten T2 in preorder
      std::vector<std::pair<std::uint32_t, int>> stack{{t2, -1}};
      while (!stack.empty()) {
        auto [i, p] = stack.back();
        stack.pop_back();
        const int v = k++;
        const auto& nd = c.at(i);
        parent[v] = p;
        up[v] = (p < 0 ? 0u : up[p]) | (1u << v);
        l2[v] = nd.l;
        for (int a = 0; a <= 2; ++a) opts[v][a] = g.options(nd.sym, nd.w, a);
        for (int j = 1; j >= 0; --j) {
          if (nd.kid[j] != corpus::no_kid) stack.emplace_back(nd.kid[j], v);
        }
      }
    }

    void run() {
      for (std::uint32_t s = 1; s < (1u << k); ++s) {
        S = s;
        for (int r = 0; r < k; ++r) {
          if (!(S >> r & 1u)) continue;
          order.assign(1, r);
          tparent.assign(1, -1);
          arity.assign(1, 0);
          structure(0, 1u << r);
        }
      }
    }

    // may T1 vertex at image `c` hang below the T1 vertex at image `p`?
    [[nodiscard]] bool may_hang(int p, int c) const {
      if (g.rel_ == tree_relation::undirected_immersion) return true;
      return c != p && (up[c] >> p & 1u);
    }

    void structure(std::size_t qi, std::uint32_t placed) {
      if (qi == order.size()) {
        if (placed == S) labels();
        return;
      }
      const int x = order[qi];
      const std::uint32_t free = S & ~placed;
      for (int a = 0; a <= 2; ++a) {
        if (g.opts_empty(opts[x][a])) continue;
        if (a == 0) {
          arity[qi] = 0;
          structure(qi + 1, placed);
          continue;
        }
        std::vector<int> cand;
        for (int c = 0; c < k; ++c) {
          if ((free >> c & 1u) && may_hang(x, c)) cand.push_back(c);
        }
        if (a == 1) {
          for (int c : cand) {
            push(c, static_cast<int>(qi));
            arity[qi] = 1;
            structure(qi + 1, placed | (1u << c));
            pop(1);
          }
        } else {
          for (std::size_t i = 0; i < cand.size(); ++i) {
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
              const int c1 = cand[i], c2 = cand[j];
              if (g.rel_ == tree_relation::gap_embedding && (up[c1] & up[c2]) != up[x]) continue;
              push(c1, static_cast<int>(qi));
              push(c2, static_cast<int>(qi));
              arity[qi] = 2;
              structure(qi + 1, placed | (1u << c1) | (1u << c2));
              pop(2);
            }
          }
        }
      }
      arity[qi] = 0;
    }

    void push(int c, int p) {
      order.push_back(c);
      tparent.push_back(p);
      arity.push_back(0);
    }
    void pop(int n) {
      order.resize(order.size() - static_cast<std::size_t>(n));
      tparent.resize(order.size());
      arity.resize(order.size());
    }

    void labels() {
      const std::size_t n = order.size();
      route.assign(n, 0);
      gap_bound.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        const int fx = order[i];
        const std::uint32_t above = tparent[i] < 0 ? 0u : up[order[static_cast<std::size_t>(tparent[i])]];
        route[i] = up[fx] ^ above;
        unsigned b = 15;
        for (std::uint32_t m = route[i]; m; m &= m - 1) b = std::min(b, l2[std::countr_zero(m)]);
        gap_bound[i] = b;
      }
      for (int v = 0; v < k; ++v) cap[v] = static_cast<int>(l2[v]) + 1;
      index.assign(n, 0);
      kids.assign(n, {corpus::no_kid, corpus::no_kid});
      nkids.assign(n, 0);
      assign(static_cast<int>(n) - 1);
    }

    // choose label and l for T1 vertex at BFS position i, children first
    void assign(int i) {
      if (i < 0) {
        found.push_back(index[0]);
        return;
      }
      const auto u = static_cast<std::size_t>(i);
      const int fx = order[u];
      const unsigned max_l = g.c_.bounds().max_l;
      for (const option& o : opts[fx][static_cast<std::size_t>(arity[u])]) {
        for (unsigned l = 0; l <= max_l; ++l) {
          if (g.rel_ == tree_relation::gap_embedding) {
            if (l > gap_bound[u]) break;
          } else if (!fits(route[u], static_cast<int>(l) + 1)) {
            break;
          }
          auto id = g.c_.find(o.sym, o.w, l, kids[u][0], kids[u][1]);
          if (!id || !g.c_.ordinal(*id)) continue;
          if (g.rel_ != tree_relation::gap_embedding) take(route[u], static_cast<int>(l) + 1);
          index[u] = *id;
          const int p = tparent[u];
          if (p >= 0) {
            const auto pu = static_cast<std::size_t>(p);
            kids[pu][static_cast<std::size_t>(nkids[pu]++)] = *id;
          }
          assign(i - 1);
          if (p >= 0) {
            const auto pu = static_cast<std::size_t>(p);
            kids[pu][static_cast<std::size_t>(--nkids[pu])] = corpus::no_kid;
          }
          if (g.rel_ != tree_relation::gap_embedding) take(route[u], -(static_cast<int>(l) + 1));
        }
      }
    }

    [[nodiscard]] bool fits(std::uint32_t r, int need) const {
      for (; r; r &= r - 1) {
        if (cap[std::countr_zero(r)] < need) return false;
      }
      return true;
    }
    void take(std::uint32_t r, int amount) {
      for (; r; r &= r - 1) cap[std::countr_zero(r)] -= amount;
    }
  };

  // labels a T1 vertex with `arity` children may carry over a T2 vertex
  [[nodiscard]] std::vector<option> options(symbol sym2, unsigned w2, int arity) const {
    std::vector<option> out;
    const auto& pool = c_.bounds().pool;
    auto w_options = [&](bool need_top) {
      for (std::size_t w = 0; w < pool.size(); ++w) {
        if (need_top && pool[w].is_bottom()) continue;
        if (respect_ && !(sym2 == symbol::w && leq_[w][w2])) continue;
        out.push_back({symbol::w, static_cast<std::uint8_t>(w)});
      }
    };
    auto sym_option = [&](symbol s) {
      if (!respect_ || sym2 == s) out.push_back({s, 0});
    };
    switch (arity) {
      case 0: w_options(false); break;
      case 1:
        w_options(true);
        sym_option(symbol::omega_dot);
        sym_option(symbol::psi_sym);
        break;
      default: sym_option(symbol::plus); break;
    }
    return out;
  }

  static bool opts_empty(const std::vector<option>& o) { return o.empty(); }

  const corpus& c_;
  tree_relation rel_;
  bool respect_;
  std::vector<std::vector<bool>> leq_;
};

}  // namespace ordgraph
