#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordgraph/wqo/quasi_order.hpp"

namespace ordgraph::wqo {

namespace detail {

inline std::vector<std::size_t> members(subset s) {
  std::vector<std::size_t> out;
  for (; s; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

// every subset of `of`, starting from the empty set
template <class F>
void for_each_subset(subset of, F&& f) {
  subset s = 0;
  do {
    f(s);
    s = (s - of) & of;
  } while (s != 0);
}

}  // namespace detail

/// A <=_1 B: every element of B dominates some element of A.
inline bool smyth_leq(const quasi_order& x, subset a, subset b) {
  x.require(a);
  x.require(b);
  for (std::size_t j : detail::members(b)) {
    if (!(x.down(j) & a)) return false;
  }
  return true;
}

inline bool smyth_lt(const quasi_order& x, subset a, subset b) {
  return smyth_leq(x, a, b) && !smyth_leq(x, b, a);
}

/// X^S: the elements of `within` (default: the carrier) above no element of S.
inline subset cut_set(const quasi_order& x, subset s, std::optional<subset> within = std::nullopt) {
  x.require(s);
  subset out = within.value_or(x.all());
  x.require(out);
  for (std::size_t z : detail::members(s)) out &= ~x.up(z);
  return out;
}

/// Xp is downward closed in Y (Y defaults to the carrier) and contained in it.
inline bool is_initial_ideal(const quasi_order& x, subset xp, std::optional<subset> within = std::nullopt) {
  const subset y = within.value_or(x.all());
  x.require(xp);
  x.require(y);
  if (xp & ~y) return false;
  for (std::size_t e : detail::members(xp)) {
    if (x.down(e) & y & ~xp) return false;
  }
  return true;
}

/// Xp <_1 Y: Xp is a proper cut Y^S with S drawn from Y. Decided by trying
/// every S.
inline bool prec1(const quasi_order& x, subset xp, std::optional<subset> within = std::nullopt) {
  const subset y = within.value_or(x.all());
  x.require(xp);
  x.require(y);
  if (xp == y) return false;
  bool found = false;
  detail::for_each_subset(y, [&](subset s) {
    if (!found && cut_set(x, s, y) == xp) found = true;
  });
  return found;
}

namespace detail {

// every f : {0..n-1} -> {0..m-1}, as a digit vector
template <class F>
bool any_function(std::size_t n, std::size_t m, F&& pred) {
  std::vector<std::size_t> f(n, 0);
  for (;;) {
    if (pred(f)) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

inline void require_nonempty(const subset_seq& a, const subset_seq& b) {
  if (a.empty() || b.empty()) throw precondition_error("empty subset sequence");
}

}  // namespace detail

/// A <_2 B over the Smyth order, by brute force over all f.
inline bool less2(const quasi_order& x, const subset_seq& a, const subset_seq& b) {
  detail::require_nonempty(a, b);
  for (subset s : a) x.require(s);
  for (subset s : b) x.require(s);
  return detail::any_function(a.size(), b.size(), [&](const std::vector<std::size_t>& f) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!smyth_leq(x, a[i], b[f[i]])) return false;
      const bool lt = smyth_lt(x, a[i], b[f[i]]);
      strict = strict || lt;
      if (!lt) {
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (j != i && f[j] == f[i]) return false;
        }
      }
    }
    return strict;
  });
}

/// Which strict relation between sub-quasi-orders a refinement is taken over.
/// `ideal`: initial ideals; `cut`: the cut relation <_1.
enum class refine_mode : unsigned char { ideal, cut };

/// <X_1..X_n> refines <X'_1..X'_m>, with every member given as a subset of
/// one ambient quasi-order and carrying the induced order.
inline bool refinement(const quasi_order& x, const subset_seq& a, const subset_seq& b,
                       refine_mode mode = refine_mode::ideal) {
  detail::require_nonempty(a, b);
  for (subset s : a) x.require(s);
  for (subset s : b) x.require(s);
  if (a.size() < b.size()) return false;
  auto weak = [&](subset p, subset q) {
    return mode == refine_mode::ideal ? is_initial_ideal(x, p, q) : (p == q || prec1(x, p, q));
  };
  auto strict = [&](subset p, subset q) {
    return mode == refine_mode::ideal ? p != q && is_initial_ideal(x, p, q) : prec1(x, p, q);
  };
  return detail::any_function(a.size(), b.size(), [&](const std::vector<std::size_t>& f) {
    bool some = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!weak(a[i], b[f[i]])) return false;
      const bool lt = strict(a[i], b[f[i]]);
      some = some || lt;
      if (!lt) {
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (j != i && f[j] == f[i]) return false;
        }
      }
    }
    return some;
  });
}

/// No cycle in the directed graph of `lt` over `carrier`.
template <class T, class Lt>
bool strict_part_acyclic(const std::vector<T>& carrier, Lt&& lt) {
  const std::size_t n = carrier.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (lt(carrier[a], carrier[b])) succ[a].push_back(b);
    }
  }
  std::vector<int> colour(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s]) continue;
    stack.emplace_back(s, 0);
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k < succ[v].size()) {
        const std::size_t w = succ[v][k++];
        if (colour[w] == 1) return false;
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

/// A failed instance of one of the correspondence checks.
struct correspondence_failure {
  std::string what;
};

/// The predecessor translation behind the <_1 encoding, on Xhat = X + top:
/// cutting Xhat at {top} gives back X, and for every finite j and every
/// X'' <_1 Xhat^j there is an i <_1 j (Smyth, in Xhat) with Xhat^i = X''.
/// Returns the first failure, if any.
inline std::optional<correspondence_failure> lemma1_check(const quasi_order& x) {
  const quasi_order xh = x.with_top();
  const subset top = quasi_order::bit(x.size());
  if (cut_set(xh, top) != x.all()) return correspondence_failure{"cutting at top does not give X"};
  std::optional<correspondence_failure> fail;
  detail::for_each_subset(xh.all(), [&](subset j) {
    if (fail) return;
    const subset xj = cut_set(xh, j);
    detail::for_each_subset(xj, [&](subset s) {
      if (fail) return;
      const subset target = cut_set(xh, s, xj);
      if (target == xj) return;
      bool ok = false;
      detail::for_each_subset(xh.all(), [&](subset i) {
        if (!ok && cut_set(xh, i) == target && smyth_lt(xh, i, j)) ok = true;
      });
      if (!ok) fail = correspondence_failure{"no i for j = " + xh.str(j) + ", X'' = " + xh.str(target)};
    });
  });
  return fail;
}

inline bool lemma1_correspondence(const quasi_order& x) { return !lemma1_check(x).has_value(); }

/// The same translation one level up: for every sequence J of subsets of
/// Xhat (length <= max_j) and every X'' refining Xhat^J over the cut
/// relation (length <= max_refined), some I with Xhat^{I_k} = X''_k for all
/// k satisfies I <_2 J.
inline std::optional<correspondence_failure> lemma3_check(const quasi_order& x, std::size_t max_j = 2,
                                                          std::size_t max_refined = 3) {
  const quasi_order xh = x.with_top();
  const subset all = xh.all();
  std::vector<subset> subsets;
  detail::for_each_subset(all, [&](subset s) { subsets.push_back(s); });
  // every subset of Xhat whose cut equals a given set
  auto preimages = [&](subset target) {
    std::vector<subset> out;
    for (subset i : subsets) {
      if (cut_set(xh, i) == target) out.push_back(i);
    }
    return out;
  };
  std::vector<subset> cut_values;
  for (subset s : subsets) {
    const subset c = cut_set(xh, s);
    if (std::find(cut_values.begin(), cut_values.end(), c) == cut_values.end()) cut_values.push_back(c);
  }

  std::optional<correspondence_failure> fail;
  auto seq_str = [&](const subset_seq& q) {
    std::string s = "<";
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + xh.str(q[i]);
    return s + ">";
  };
  // odometer over sequences of a given length drawn from `pool`
  auto for_each_seq = [](const std::vector<subset>& pool, std::size_t len, auto&& f) {
    std::vector<std::size_t> idx(len, 0);
    subset_seq q(len);
    for (;;) {
      for (std::size_t k = 0; k < len; ++k) q[k] = pool[idx[k]];
      if (!f(q)) return;
      std::size_t k = 0;
      while (k < len && ++idx[k] == pool.size()) idx[k++] = 0;
      if (k == len) return;
    }
  };
  for (std::size_t m = 1; m <= max_j && !fail; ++m) {
    for_each_seq(subsets, m, [&](const subset_seq& j) {
      subset_seq xj;
      for (subset s : j) xj.push_back(cut_set(xh, s));
      for (std::size_t n = m; n <= max_refined && !fail; ++n) {
        for_each_seq(cut_values, n, [&](const subset_seq& xr) {
          if (!refinement(xh, xr, xj, refine_mode::cut)) return true;
          // search I componentwise over preimages
          std::vector<std::vector<subset>> choices;
          for (subset c : xr) choices.push_back(preimages(c));
          bool ok = false;
          std::vector<std::size_t> idx(n, 0);
          subset_seq in(n);
          for (;;) {
            for (std::size_t k = 0; k < n; ++k) in[k] = choices[k][idx[k]];
            if (less2(xh, in, j)) {
              ok = true;
              break;
            }
            std::size_t k = 0;
            while (k < n && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == n) break;
          }
          if (!ok) fail = correspondence_failure{"no I for J = " + seq_str(j) + ", X'' = " + seq_str(xr)};
          return !fail;
        });
      }
      return !fail;
    });
  }
  return fail;
}

inline bool lemma3_correspondence(const quasi_order& x, std::size_t max_j = 2, std::size_t max_refined = 3) {
  return !lemma3_check(x, max_j, max_refined).has_value();
}

}  // namespace ordgraph::wqo
