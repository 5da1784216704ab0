#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

#include "ordgraph/ord/term.hpp"

namespace ordgraph {

struct term_bounds {
  std::size_t max_size = 4;     // constructor applications
  unsigned max_psi_index = 2;
  unsigned max_omega_index = 2;
};

/// Every normal-form term (class 0, plus bar terms when `include_bar`) of
/// at most `b.max_size` constructor applications, with bar/psi W-elements
/// drawn from `pool`. Om indices run up to max(max_omega_index,
/// max_psi_index) so that every psi_n(w0) value is present.
/// Output is duplicate-free and in a fixed generation order.
template <w_order W>
std::vector<basic_ord<W>> enumerate_terms(const term_bounds& b, const std::vector<W>& pool,
                                          bool include_bar = false) {
  using term = basic_ord<W>;
  const std::size_t max = b.max_size;
  std::vector<std::vector<term>> principal(max + 1), class0(max + 1), bars(max + 1);

  std::unordered_set<term, basic_ord_hash<W>> seen;
  auto keep = [&](std::vector<term>& bucket, const term& t) {
    if (seen.insert(t).second) bucket.push_back(t);
  };
  // psi_n(w0) normalises to Om(n) or 1, both generated below
  const unsigned max_omega = std::max(b.max_omega_index, b.max_psi_index);

  for (std::size_t s = 1; s <= max; ++s) {
    if (s == 1) {
      keep(class0[1], term::zero());
      for (unsigned i = 1; i <= max_omega; ++i) keep(principal[1], term::omega(i));
      for (const auto& w : pool) {
        if (!w.is_bottom()) keep(bars[1], term::bar(w));
      }
    } else {
      for (const auto& t : class0[s - 1]) {
        if (t.kind() == ord_kind::omega || t.kind() == ord_kind::psi) continue;
        keep(principal[s], term::omega_pow(t));
      }
      auto add_psi = [&](const term& a) {
        for (unsigned n = 0; n <= b.max_psi_index; ++n) {
          term p = term::raw_psi(n, a);
          if (p.is_normal_form()) keep(principal[s], p);
        }
      };
      for (const auto& a : class0[s - 1]) add_psi(a);
      for (const auto& a : bars[s - 1]) add_psi(a);
      for (const auto& t : class0[s - 1]) {
        if (t.is_zero()) continue;
        for (const auto& w : pool) {
          if (!w.is_bottom()) keep(bars[s], term::bar(w, t));
        }
      }
    }
    // sums of size s: first part of size k, remainder a principal or sum of
    // size s - k - 1 whose head does not exceed the first part
    for (std::size_t k = 1; k + 2 <= s; ++k) {
      const std::size_t rest = s - k - 1;
      for (const auto& head : principal[k]) {
        for (const auto& tail : class0[rest]) {
          if (tail.is_zero()) continue;
          if (compare_raw(head, tail.summands().front()) == std::strong_ordering::less) continue;
          std::vector<term> parts{head};
          for (const auto& p : tail.summands()) parts.push_back(p);
          keep(class0[s], term::raw_sum(std::move(parts)));
        }
      }
    }
    for (const auto& p : principal[s]) class0[s].push_back(p);
  }
  std::vector<term> out;
  for (std::size_t s = 1; s <= max; ++s) {
    for (const auto& t : class0[s]) out.push_back(t);
    if (include_bar) {
      for (const auto& t : bars[s]) out.push_back(t);
    }
  }
  return out;
}

}  // namespace ordgraph
