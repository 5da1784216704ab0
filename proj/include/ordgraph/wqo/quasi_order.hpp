#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ordgraph/error.hpp"

namespace ordgraph::wqo {

/// A finite subset of a carrier, as a bitmask over element indices.
using subset = std::uint64_t;

/// A finite sequence of subsets of one carrier.
using subset_seq = std::vector<subset>;

class invalid_quasi_order : public precondition_error {
 public:
  explicit invalid_quasi_order(const std::string& what)
      : precondition_error("not a quasi-order: " + what) {}
};

/// A finite quasi-order (every finite quasi-order is a wqo). Reflexivity
/// and transitivity are checked on construction.
class quasi_order {
 public:
  static constexpr std::size_t max_size = 64;

  quasi_order(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
      : names_(std::move(names)), leq_(std::move(leq)) {
    const auto n = names_.size();
    if (n > max_size) throw precondition_error("carrier larger than 64 elements");
    if (leq_.size() != n) throw invalid_quasi_order("leq has " + std::to_string(leq_.size()) + " rows for " + std::to_string(n) + " elements");
    for (std::size_t a = 0; a < n; ++a) {
      if (leq_[a].size() != n) throw invalid_quasi_order("leq row " + std::to_string(a) + " has wrong length");
      for (std::size_t b = a + 1; b < n; ++b) {
        if (names_[a] == names_[b]) throw invalid_quasi_order("duplicate element " + names_[a]);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq_[a][a]) throw invalid_quasi_order("reflexivity fails at (" + names_[a] + ", " + names_[a] + ")");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq_[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq_[b][c] && !leq_[a][c]) {
            throw invalid_quasi_order("transitivity fails: " + names_[a] + " <= " + names_[b] +
                                      " <= " + names_[c] + " but not " + names_[a] + " <= " + names_[c]);
          }
        }
      }
    }
    up_.assign(n, 0);
    down_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq_[a][b]) {
          up_[a] |= bit(b);
          down_[b] |= bit(a);
        }
      }
    }
  }

  /// a_0 < a_1 < ... < a_{n-1}.
  static quasi_order chain(std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) leq[a][b] = true;
    }
    return {default_names(n), std::move(leq)};
  }

  static quasi_order antichain(std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
    return {default_names(n), std::move(leq)};
  }

  static std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    }
    return out;
  }

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }
  [[nodiscard]] bool lt(std::size_t a, std::size_t b) const { return leq(a, b) && !leq(b, a); }

  /// Elements >= a, and elements <= a.
  [[nodiscard]] subset up(std::size_t a) const { return up_.at(a); }
  [[nodiscard]] subset down(std::size_t a) const { return down_.at(a); }

  [[nodiscard]] subset all() const noexcept {
    return size() == 64 ? ~subset{0} : (subset{1} << size()) - 1;
  }

  [[nodiscard]] std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw foreign_element(name);
    return static_cast<std::size_t>(it - names_.begin());
  }

  [[nodiscard]] subset make_subset(const std::vector<std::string>& elems) const {
    subset s = 0;
    for (const auto& e : elems) s |= bit(index_of(e));
    return s;
  }

  void require(subset s) const {
    if (s & ~all()) throw foreign_element("element index " + std::to_string(std::countr_zero(s & ~all())));
  }

  /// "{a, b}".
  [[nodiscard]] std::string str(subset s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!(s & bit(i))) continue;
      if (!first) out += ", ";
      out += names_[i];
      first = false;
    }
    return out + "}";
  }

  /// X with a new element strictly above every element; it gets the last index.
  [[nodiscard]] quasi_order with_top(std::string top = "top") const {
    const auto n = size();
    if (n + 1 > max_size) throw precondition_error("carrier larger than 64 elements");
    auto names = names_;
    while (std::find(names.begin(), names.end(), top) != names.end()) top += "'";
    names.push_back(top);
    auto leq = leq_;
    for (auto& row : leq) row.push_back(true);
    leq.emplace_back(n + 1, false);
    leq[n][n] = true;
    return {std::move(names), std::move(leq)};
  }

  /// Canonical adjacency bit string under all relabellings (n <= 8).
  [[nodiscard]] std::uint64_t canonical_code() const {
    const auto n = size();
    if (n > 8) throw precondition_error("canonical code needs at most 8 elements");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) code = (code << 1) | (leq_[perm[a]][perm[b]] ? 1u : 0u);
        }
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  static constexpr subset bit(std::size_t i) { return subset{1} << i; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<subset> up_, down_;
};

/// All quasi-orders on n elements up to isomorphism (n <= 4), in order of
/// canonical code.
inline std::vector<quasi_order> enumerate_quasi_orders(std::size_t n) {
  if (n > 4) throw precondition_error("quasi-order enumeration supports at most 4 elements");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) off.emplace_back(a, b);
    }
  }
  std::vector<std::pair<std::uint64_t, quasi_order>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
    for (std::size_t k = 0; k < off.size(); ++k) {
      if (mask >> k & 1u) leq[off[k].first][off[k].second] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      for (std::size_t b = 0; b < n && transitive; ++b) {
        for (std::size_t c = 0; c < n && transitive; ++c) {
          if (leq[a][b] && leq[b][c] && !leq[a][c]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    quasi_order q(quasi_order::default_names(n), std::move(leq));
    const auto code = q.canonical_code();
    if (std::none_of(found.begin(), found.end(), [&](const auto& e) { return e.first == code; })) {
      found.emplace_back(code, std::move(q));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<quasi_order> out;
  for (auto& e : found) out.push_back(std::move(e.second));
  return out;
}

}  // namespace ordgraph::wqo
