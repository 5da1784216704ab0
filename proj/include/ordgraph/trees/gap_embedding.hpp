#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordgraph/budget.hpp"
#include "ordgraph/error.hpp"
#include "ordgraph/trees/labelled_tree.hpp"

namespace ordgraph {

/// Core embedding discipline beneath the gap and label conditions.
/// `infimum`: injective, order- and infimum-preserving (the default).
/// `order`: injective and order-preserving only.
enum class embedding_mode : unsigned char { infimum, order };

/// Checks that f (indexed by T1 vertex) is a gap embedding of T1 into T2.
/// The gap condition is evaluated literally: for all x in T1 and y in T2
/// with y <= f(x) and y not below f(z) for any z < x, l(y) >= l(x).
template <w_order W>
bool check_gap_embedding(const basic_labelled_tree<W>& t1, const basic_labelled_tree<W>& t2,
                         const std::vector<int>& f, embedding_mode mode = embedding_mode::infimum) {
  const auto n1 = t1.size(), n2 = t2.size();
  if (f.size() != n1) throw precondition_error("embedding is not total on the source tree");
  std::vector<bool> used(n2);
  for (int y : f) {
    if (!t2.contains(y) || used[static_cast<std::size_t>(y)]) return false;
    used[static_cast<std::size_t>(y)] = true;
  }
  auto at = [&](int x) { return f[static_cast<std::size_t>(x)]; };
  for (std::size_t i = 0; i < n1; ++i) {
    const int x = static_cast<int>(i);
    if (!q_leq(t1.lq(x), t2.lq(at(x)))) return false;
    for (std::size_t j = 0; j < n1; ++j) {
      const int y = static_cast<int>(j);
      if (x != y && t1.is_ancestor_or_self(x, y) && !t2.is_ancestor_or_self(at(x), at(y))) return false;
      if (mode == embedding_mode::infimum && at(t1.meet(x, y)) != t2.meet(at(x), at(y))) return false;
    }
  }
  for (std::size_t i = 0; i < n1; ++i) {
    const int x = static_cast<int>(i);
    for (std::size_t j = 0; j < n2; ++j) {
      const int y = static_cast<int>(j);
      if (!t2.is_ancestor_or_self(y, at(x))) continue;
      bool covered = false;
      for (int z = t1.parent(x); z != basic_labelled_tree<W>::none && !covered; z = t1.parent(z)) {
        covered = t2.is_ancestor_or_self(y, at(z));
      }
      if (!covered && t2.l(y) < t1.l(x)) return false;
    }
  }
  return true;
}

/// Exhaustive search for a gap embedding of T1 into T2. Running out of
/// `budget` throws bound_exceeded.
template <w_order W>
std::optional<std::vector<int>> find_gap_embedding(const basic_labelled_tree<W>& t1,
                                                   const basic_labelled_tree<W>& t2,
                                                   embedding_mode mode = embedding_mode::infimum,
                                                   search_budget budget = {}) {
  if (t1.empty()) return std::vector<int>{};
  if (t1.size() > t2.size()) return std::nullopt;
  const auto order = t1.preorder();
  std::vector<int> f(t1.size(), -1);
  std::vector<bool> used(t2.size());

  // y ranges over the T2 path strictly below the parent's image down to the
  // candidate image; the root's segment runs up to the root of T2
  auto gap_ok = [&](int x, int image) {
    const int p = t1.parent(x);
    const int stop = p == basic_labelled_tree<W>::none ? basic_labelled_tree<W>::none
                                                       : f[static_cast<std::size_t>(p)];
    for (int y = image; y != stop; y = t2.parent(y)) {
      if (t2.l(y) < t1.l(x)) return false;
    }
    return true;
  };
  auto sibling_ok = [&](int x, int image) {
    if (mode != embedding_mode::infimum) return true;
    const int p = t1.parent(x);
    if (p == basic_labelled_tree<W>::none) return true;
    const int fp = f[static_cast<std::size_t>(p)];
    for (int s : t1.children(p)) {
      const int fs = f[static_cast<std::size_t>(s)];
      if (s != x && fs >= 0 && t2.meet(fs, image) != fp) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int x = order[k];
    const int p = t1.parent(x);
    for (std::size_t j = 0; j < t2.size(); ++j) {
      const int y = static_cast<int>(j);
      if (used[j]) continue;
      if (p != basic_labelled_tree<W>::none) {
        const int fp = f[static_cast<std::size_t>(p)];
        if (y == fp || !t2.is_ancestor_or_self(fp, y)) continue;
      }
      if (!q_leq(t1.lq(x), t2.lq(y)) || !gap_ok(x, y) || !sibling_ok(x, y)) continue;
      budget.tick("gap embedding search");
      f[static_cast<std::size_t>(x)] = y;
      used[j] = true;
      if (self(self, k + 1)) return true;
      used[j] = false;
      f[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };
  if (search(search, 0)) return f;
  return std::nullopt;
}

}  // namespace ordgraph
