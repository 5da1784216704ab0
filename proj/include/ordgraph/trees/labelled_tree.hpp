#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordgraph/error.hpp"
#include "ordgraph/ord/w_order.hpp"

namespace ordgraph {

enum class symbol : unsigned char { w, plus, omega_dot, psi_sym };

/// A Q-label: an element of W (including w0) or one of the three
/// constructor symbols. Symbols are comparable only with themselves.
template <w_order W>
struct q_label {
  symbol sym = symbol::w;
  W w{};

  static q_label of(W x) { return {symbol::w, std::move(x)}; }
  static q_label plus() { return {symbol::plus, W{}}; }
  static q_label omega_dot() { return {symbol::omega_dot, W{}}; }
  static q_label psi() { return {symbol::psi_sym, W{}}; }

  [[nodiscard]] bool is_w() const noexcept { return sym == symbol::w; }
  [[nodiscard]] bool is_bottom() const { return is_w() && w.is_bottom(); }

  /// The quasi-order on Q.
  friend bool q_leq(const q_label& a, const q_label& b) {
    if (a.sym != b.sym) return false;
    return a.sym != symbol::w || a.w <= b.w;
  }

  friend bool operator==(const q_label& a, const q_label& b) {
    return a.sym == b.sym && (a.sym != symbol::w || a.w == b.w);
  }

  [[nodiscard]] std::string str() const {
    switch (sym) {
      case symbol::w: return w.str();
      case symbol::plus: return "plus";
      case symbol::omega_dot: return "omegadot";
      case symbol::psi_sym: return "psisym";
    }
    return {};
  }

  static q_label parse(std::string_view s) {
    if (s == "plus") return plus();
    if (s == "omegadot") return omega_dot();
    if (s == "psisym") return psi();
    if (s == "bot") return of(W::bottom());
    std::size_t pos = 0;
    W x = W::parse(s, pos);
    detail::cursor in(s, pos);
    if (!in.at_end()) in.fail({"end of label"});
    return of(std::move(x));
  }
};

/// A rooted tree with a natural-number label l(v) and a Q-label per vertex.
/// Vertices are dense indices; the root has no parent.
template <w_order W>
class basic_labelled_tree {
 public:
  using label = q_label<W>;
  static constexpr int none = -1;

  basic_labelled_tree() = default;

  int add_root(unsigned l, label lq, std::string name = {}) {
    if (root_ != none) throw precondition_error("tree already has a root");
    root_ = push(none, l, std::move(lq), std::move(name));
    return root_;
  }

  int add_child(int parent, unsigned l, label lq, std::string name = {}) {
    check(parent);
    return push(parent, l, std::move(lq), std::move(name));
  }

  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
  [[nodiscard]] bool empty() const noexcept { return parent_.empty(); }
  [[nodiscard]] int root() const noexcept { return root_; }
  [[nodiscard]] int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<int>& children(int v) const {
    return children_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] unsigned l(int v) const { return l_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const label& lq(int v) const { return lq_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

  void set_l(int v, unsigned l) { l_.at(static_cast<std::size_t>(v)) = l; }
  void set_lq(int v, label lq) { lq_.at(static_cast<std::size_t>(v)) = std::move(lq); }

  [[nodiscard]] bool contains(int v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < size();
  }

  /// a <= b in the tree order (a lies on the path from b to the root).
  [[nodiscard]] bool is_ancestor_or_self(int a, int b) const {
    for (int x = b; x != none; x = parent_[static_cast<std::size_t>(x)]) {
      if (x == a) return true;
    }
    return false;
  }

  [[nodiscard]] int depth(int v) const {
    int d = 0;
    for (int x = parent(v); x != none; x = parent(x)) ++d;
    return d;
  }

  /// Infimum in the tree order.
  [[nodiscard]] int meet(int a, int b) const {
    int da = depth(a), db = depth(b);
    while (da > db) a = parent(a), --da;
    while (db > da) b = parent(b), --db;
    while (a != b) a = parent(a), b = parent(b);
    return a;
  }

  /// Vertices in preorder from the root (children in insertion order).
  [[nodiscard]] std::vector<int> preorder() const {
    std::vector<int> out, stack;
    if (root_ == none) return out;
    stack.push_back(root_);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.push_back(v);
      const auto& cs = children(v);
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  void check(int v) const {
    if (!contains(v)) throw precondition_error("unknown vertex " + std::to_string(v));
  }

 private:
  int push(int parent, unsigned l, label lq, std::string name) {
    const int id = static_cast<int>(size());
    parent_.push_back(parent);
    l_.push_back(l);
    lq_.push_back(std::move(lq));
    children_.emplace_back();
    names_.push_back(name.empty() ? "v" + std::to_string(id) : std::move(name));
    if (parent != none) children_[static_cast<std::size_t>(parent)].push_back(id);
    return id;
  }

  std::vector<int> parent_;
  std::vector<unsigned> l_;
  std::vector<label> lq_;
  std::vector<std::vector<int>> children_;
  std::vector<std::string> names_;
  int root_ = none;
};

using labelled_tree = basic_labelled_tree<cnf_w>;

/// T^v: the part of T at and below v, rooted at v.
template <w_order W>
basic_labelled_tree<W> subtree(const basic_labelled_tree<W>& t, int v) {
  t.check(v);
  basic_labelled_tree<W> out;
  std::vector<std::pair<int, int>> stack{{v, basic_labelled_tree<W>::none}};
  while (!stack.empty()) {
    auto [x, p] = stack.back();
    stack.pop_back();
    const int id = p == basic_labelled_tree<W>::none ? out.add_root(t.l(x), t.lq(x), t.name(x))
                                                    : out.add_child(p, t.l(x), t.lq(x), t.name(x));
    const auto& cs = t.children(x);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.emplace_back(*it, id);
  }
  return out;
}

/// Arity discipline: a W-label has at most one child (none for w0), plus
/// exactly two, omega-dot and psi exactly one.
template <w_order W>
bool is_assignable(const basic_labelled_tree<W>& t) {
  if (t.empty()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int v = static_cast<int>(i);
    const auto k = t.children(v).size();
    const auto& q = t.lq(v);
    switch (q.sym) {
      case symbol::w:
        if (k > (q.w.is_bottom() ? 0u : 1u)) return false;
        break;
      case symbol::plus:
        if (k != 2) return false;
        break;
      case symbol::omega_dot:
      case symbol::psi_sym:
        if (k != 1) return false;
        break;
    }
  }
  return true;
}

/// Canonical text of the labelled tree up to isomorphism (children sorted).
template <w_order W>
std::string canonical_form(const basic_labelled_tree<W>& t, int v) {
  std::vector<std::string> kids;
  for (int c : t.children(v)) kids.push_back(canonical_form(t, c));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + t.lq(v).str() + ":" + std::to_string(t.l(v));
  for (const auto& k : kids) s += " " + k;
  return s + ")";
}

template <w_order W>
std::string canonical_form(const basic_labelled_tree<W>& t) {
  return t.empty() ? std::string("()") : canonical_form(t, t.root());
}

}  // namespace ordgraph
