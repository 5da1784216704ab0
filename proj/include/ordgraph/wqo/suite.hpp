#pragma once

#include <string>
#include <vector>

#include "ordgraph/wqo/relations.hpp"

namespace ordgraph::wqo {

struct property_result {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Every subset sequence of length 1..max_len over X.
inline std::vector<subset_seq> subset_sequences(const quasi_order& x, std::size_t max_len) {
  std::vector<subset> subsets;
  detail::for_each_subset(x.all(), [&](subset s) { subsets.push_back(s); });
  std::vector<subset_seq> out;
  std::vector<subset_seq> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<subset_seq> next;
    for (const auto& q : layer) {
      for (subset s : subsets) {
        next.push_back(q);
        next.back().push_back(s);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// The finite checks on one quasi-order: the first-level correspondence,
/// acyclicity of the strict Smyth order on all subsets and of <_2 on
/// sequences up to `max_seq`, and the second-level correspondence.
inline std::vector<property_result> run_suite(const quasi_order& x, std::size_t max_seq = 3,
                                              std::size_t lemma3_j = 2, std::size_t lemma3_refined = 3) {
  std::vector<property_result> out;
  if (auto f = lemma1_check(x)) {
    out.push_back({"lemma1_correspondence", false, f->what});
  } else {
    out.push_back({"lemma1_correspondence", true, {}});
  }

  std::vector<subset> subsets;
  detail::for_each_subset(x.all(), [&](subset s) { subsets.push_back(s); });
  const bool smyth = strict_part_acyclic(subsets, [&](subset a, subset b) { return smyth_lt(x, a, b); });
  out.push_back({"smyth_lt_acyclic", smyth, smyth ? "" : "cycle among subsets"});

  const auto seqs = subset_sequences(x, max_seq);
  const bool l2 = strict_part_acyclic(seqs, [&](const subset_seq& a, const subset_seq& b) { return less2(x, a, b); });
  out.push_back({"less2_acyclic", l2, l2 ? "" : "cycle among sequences"});

  if (auto f = lemma3_check(x, lemma3_j, lemma3_refined)) {
    out.push_back({"lemma3_correspondence", false, f->what});
  } else {
    out.push_back({"lemma3_correspondence", true, {}});
  }
  return out;
}

}  // namespace ordgraph::wqo
