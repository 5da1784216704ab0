#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordgraph/ord/term.hpp"
#include "ordgraph/trees/assign.hpp"
#include "ordgraph/trees/labelled_tree.hpp"

namespace ordgraph {

template <w_order W>
struct tree_bounds {
  std::size_t max_vertices = 1;
  std::vector<W> pool;  // W-labels available, w0 included if wanted
  unsigned max_l = 0;
};

/// Every assignable tree within some bounds, once per isomorphism class,
/// stored as hash-consed nodes: a tree is a root label plus the corpus
/// indices of its child subtrees. Subtrees of corpus trees are corpus
/// trees, so ordinals are computed bottom-up from the children's.
///
/// Generation order: by vertex count; within a count, leaves, then unary
/// roots (non-bottom W-labels in pool order, omega-dot, psi) over each
/// smaller tree, then plus roots over unordered pairs of smaller trees, with
/// l varying fastest.
template <w_order W>
class tree_corpus {
 public:
  using label = q_label<W>;
  using tree = basic_labelled_tree<W>;
  static constexpr std::uint32_t no_kid = 0xffffffu;

  struct node {
    symbol sym = symbol::w;
    std::uint8_t w = 0;     // pool index for W-labels
    std::uint8_t l = 0;
    std::uint8_t size = 1;  // vertex count
    std::uint32_t kid[2] = {no_kid, no_kid};
    std::optional<basic_ord<W>> ordinal;  // empty: assignment left normal forms

    [[nodiscard]] int arity() const { return (kid[0] != no_kid) + (kid[1] != no_kid); }
  };

  explicit tree_corpus(tree_bounds<W> b) : bounds_(std::move(b)) {
    if (bounds_.pool.size() > 15) throw precondition_error("label pool larger than 15");
    if (bounds_.max_l > 15) throw precondition_error("max l larger than 15");
    generate();
  }

  [[nodiscard]] const tree_bounds<W>& bounds() const noexcept { return bounds_; }
  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const node& at(std::size_t i) const { return nodes_.at(i); }
  [[nodiscard]] const std::optional<basic_ord<W>>& ordinal(std::size_t i) const {
    return nodes_.at(i).ordinal;
  }

  [[nodiscard]] label root_label(std::size_t i) const {
    const node& n = nodes_.at(i);
    return n.sym == symbol::w ? label::of(bounds_.pool[n.w]) : label{n.sym, W{}};
  }

  /// Materialises tree i.
  [[nodiscard]] tree materialize(std::size_t i) const {
    tree t;
    const int r = t.add_root(nodes_.at(i).l, root_label(i));
    attach(t, r, i);
    return t;
  }

  /// Why tree i has no normal-form ordinal (empty if it has one).
  [[nodiscard]] std::string failure(std::size_t i) const {
    if (nodes_.at(i).ordinal) return {};
    try {
      (void)assign_ordinal(materialize(i));
    } catch (const error& e) {
      return e.what();
    }
    return {};
  }

  /// Index of the tree with the given root and child subtrees, if present.
  [[nodiscard]] std::optional<std::uint32_t> find(symbol sym, unsigned w, unsigned l,
                                                  std::uint32_t a = no_kid,
                                                  std::uint32_t b = no_kid) const {
    auto it = index_.find(key(sym, w, l, a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Index of a tree isomorphic to t, if present.
  [[nodiscard]] std::optional<std::uint32_t> find(const tree& t) const {
    if (t.empty()) return std::nullopt;
    return find_at(t, t.root());
  }

  /// Pool index of a W-element, if present.
  [[nodiscard]] std::optional<unsigned> pool_index(const W& w) const {
    for (std::size_t i = 0; i < bounds_.pool.size(); ++i) {
      if (bounds_.pool[i] == w) return static_cast<unsigned>(i);
    }
    return std::nullopt;
  }

 private:
  static std::uint64_t key(symbol sym, unsigned w, unsigned l, std::uint32_t a, std::uint32_t b) {
    if (a != no_kid && b != no_kid && b < a) std::swap(a, b);
    return (static_cast<std::uint64_t>(sym) << 56) | (static_cast<std::uint64_t>(w) << 52) |
           (static_cast<std::uint64_t>(l) << 48) | (static_cast<std::uint64_t>(a) << 24) | b;
  }

  void attach(tree& t, int at, std::size_t i) const {
    const node& n = nodes_[i];
    for (auto k : n.kid) {
      if (k == no_kid) continue;
      const int c = t.add_child(at, nodes_[k].l, root_label(k));
      attach(t, c, k);
    }
  }

  std::optional<std::uint32_t> find_at(const tree& t, int v) const {
    const auto& cs = t.children(v);
    if (cs.size() > 2) return std::nullopt;
    std::uint32_t kids[2] = {no_kid, no_kid};
    for (std::size_t j = 0; j < cs.size(); ++j) {
      auto k = find_at(t, cs[j]);
      if (!k) return std::nullopt;
      kids[j] = *k;
    }
    const auto& q = t.lq(v);
    unsigned w = 0;
    if (q.is_w()) {
      auto p = pool_index(q.w);
      if (!p) return std::nullopt;
      w = *p;
    }
    return find(q.sym, w, t.l(v), kids[0], kids[1]);
  }

  void emit(symbol sym, unsigned w, unsigned l, std::uint32_t a = no_kid, std::uint32_t b = no_kid) {
    node n;
    n.sym = sym;
    n.w = static_cast<std::uint8_t>(w);
    n.l = static_cast<std::uint8_t>(l);
    n.kid[0] = a;
    n.kid[1] = b;
    n.size = 1;
    std::vector<basic_ord<W>> ords;
    bool ok = true;
    for (auto k : n.kid) {
      if (k == no_kid) continue;
      n.size = static_cast<std::uint8_t>(n.size + nodes_[k].size);
      if (nodes_[k].ordinal) {
        ords.push_back(*nodes_[k].ordinal);
      } else {
        ok = false;
      }
    }
    if (ok) {
      const label lq = sym == symbol::w ? label::of(bounds_.pool[w]) : label{sym, W{}};
      try {
        n.ordinal = assign_step(lq, l, ords);
      } catch (const not_normal_form&) {
      }
    }
    if (nodes_.size() >= no_kid) throw bound_exceeded("tree corpus larger than 2^24 entries");
    index_.emplace(key(sym, w, l, a, b), static_cast<std::uint32_t>(nodes_.size()));
    by_size_[n.size].push_back(static_cast<std::uint32_t>(nodes_.size()));
    nodes_.push_back(std::move(n));
  }

  void generate() {
    const auto& b = bounds_;
    by_size_.assign(b.max_vertices + 1, {});
    const auto npool = static_cast<unsigned>(b.pool.size());
    for (std::size_t n = 1; n <= b.max_vertices; ++n) {
      if (n == 1) {
        for (unsigned w = 0; w < npool; ++w) {
          for (unsigned l = 0; l <= b.max_l; ++l) emit(symbol::w, w, l);
        }
        continue;
      }
      const auto smaller = by_size_[n - 1];
      auto unary = [&](symbol sym, unsigned w) {
        for (auto k : smaller) {
          for (unsigned l = 0; l <= b.max_l; ++l) emit(sym, w, l, k);
        }
      };
      for (unsigned w = 0; w < npool; ++w) {
        if (!b.pool[w].is_bottom()) unary(symbol::w, w);
      }
      unary(symbol::omega_dot, 0);
      unary(symbol::psi_sym, 0);
      for (std::size_t a = 1; 2 * a <= n - 1; ++a) {
        const std::size_t c = n - 1 - a;
        const auto left = by_size_[a], right = by_size_[c];
        for (std::size_t i = 0; i < left.size(); ++i) {
          for (std::size_t j = (a == c ? i : 0); j < right.size(); ++j) {
            for (unsigned l = 0; l <= b.max_l; ++l) emit(symbol::plus, 0, l, left[i], right[j]);
          }
        }
      }
    }
  }

  tree_bounds<W> bounds_;
  std::vector<node> nodes_;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Every assignable tree within the bounds, once per isomorphism class, in
/// corpus order (no normal-form filter).
template <w_order W>
std::vector<basic_labelled_tree<W>> enumerate_trees(const tree_bounds<W>& b) {
  tree_corpus<W> c(b);
  std::vector<basic_labelled_tree<W>> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.materialize(i));
  return out;
}

}  // namespace ordgraph
