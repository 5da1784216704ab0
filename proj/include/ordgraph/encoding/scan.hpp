#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ordgraph/budget.hpp"
#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/trees/enumerate.hpp"
#include "ordgraph/trees/gap_embedding.hpp"
#include "ordgraph/trees/related.hpp"

namespace ordgraph {

/// enumerate: build the sources of each target directly (exact, no
/// timeouts). pairwise: run the finder on every ordered pair.
enum class scan_engine : unsigned char { enumerate, pairwise };

enum class verdict : unsigned char { no, yes, timeout };

inline const char* to_string(scan_engine e) { return e == scan_engine::enumerate ? "enumerate" : "pairwise"; }

inline const char* to_string(verdict v) {
  switch (v) {
    case verdict::no: return "no";
    case verdict::yes: return "yes";
    case verdict::timeout: return "timeout";
  }
  return "?";
}

inline const char* to_string(std::strong_ordering c) {
  if (c == std::strong_ordering::less) return "less";
  if (c == std::strong_ordering::greater) return "greater";
  return "equal";
}

/// Which classified pairs the report keeps in memory.
enum class row_filter : unsigned char { related, violations, none };

inline const char* to_string(row_filter f) {
  switch (f) {
    case row_filter::related: return "related";
    case row_filter::violations: return "violations";
    case row_filter::none: return "none";
  }
  return "?";
}

struct scan_config {
  tree_relation relation = tree_relation::undirected_immersion;
  bool respect_labels = true;
  scan_engine engine = scan_engine::enumerate;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::size_t sample = 0;     // targets drawn with `seed`; 0 scans every target
  double pair_seconds = 10;   // pairwise engine, per pair
  row_filter keep = row_filter::related;
};

/// One ordered pair: t1 and t2 are corpus indices.
struct scan_pair {
  std::uint32_t t1 = 0, t2 = 0;
  verdict related = verdict::no;
  std::optional<std::strong_ordering> comparison;

  [[nodiscard]] bool violation() const { return comparison == std::strong_ordering::greater; }
};

struct scan_counts {
  std::uint64_t checked = 0, related = 0, violations = 0, timeouts = 0;

  friend bool operator==(const scan_counts&, const scan_counts&) = default;
};

template <w_order W>
struct scan_report {
  scan_config config;
  tree_bounds<W> bounds;
  std::size_t corpus_size = 0;
  std::vector<std::uint32_t> normal_form;  // corpus indices with an ordinal
  std::vector<std::uint32_t> targets;      // scanned T2, in order
  std::vector<char> level_bounded;         // per corpus index
  std::vector<scan_pair> rows;             // kept pairs (related or timed out), target-major
  scan_counts summary;
  scan_counts level_summary;               // both trees level-bounded
  std::uint64_t digest = 0;
};

namespace detail {

inline void fnv1a(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
}

}  // namespace detail

/// Trees where every vertex v has o(T^v) below Omega_{l(v)+1}; only plus and
/// omega-dot vertices can break this, as their l is otherwise unused.
template <w_order W>
std::vector<char> level_bounded_trees(const tree_corpus<W>& c) {
  std::vector<char> ok(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& n = c.at(i);
    if (!n.ordinal) continue;
    bool good = compare(*n.ordinal, basic_ord<W>::omega(n.l + 1u)) == std::strong_ordering::less;
    for (auto k : n.kid) {
      if (k != tree_corpus<W>::no_kid && !ok[k]) good = false;
    }
    ok[i] = good;
  }
  return ok;
}

/// Classifies every ordered pair of normal-form corpus trees (T1 related to
/// T2?) and compares o(T1) with o(T2) for the related ones. The result does
/// not depend on `jobs`.
template <w_order W>
scan_report<W> scan_corpus(const tree_corpus<W>& c, const scan_config& cfg) {
  if (cfg.jobs == 0) throw precondition_error("job count must be at least 1");
  scan_report<W> rep;
  rep.config = cfg;
  rep.bounds = c.bounds();
  rep.corpus_size = c.size();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.ordinal(i)) rep.normal_form.push_back(static_cast<std::uint32_t>(i));
  }
  rep.targets = rep.normal_form;
  if (cfg.sample != 0 && cfg.sample < rep.targets.size()) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(rep.targets.begin(), rep.targets.end(), rng);
    rep.targets.resize(cfg.sample);
    std::sort(rep.targets.begin(), rep.targets.end());
  }
  rep.level_bounded = level_bounded_trees(c);

  std::optional<related_trees<W>> rel;
  if (cfg.engine == scan_engine::enumerate) rel.emplace(c, cfg.relation, cfg.respect_labels);
  std::vector<basic_labelled_tree<W>> trees;
  std::vector<basic_encoded_graph<W>> graphs;
  if (cfg.engine == scan_engine::pairwise) {
    trees.resize(c.size());
    graphs.resize(c.size());
    for (auto i : rep.normal_form) {
      trees[i] = c.materialize(i);
      if (cfg.relation == tree_relation::directed_immersion) graphs[i] = encode_directed(trees[i]);
      if (cfg.relation == tree_relation::undirected_immersion) graphs[i] = encode(trees[i]);
    }
  }

  auto classify = [&](std::uint32_t t2) {
    std::vector<std::pair<std::uint32_t, verdict>> out;
    if (rel) {
      for (auto t1 : rel->sources(t2)) out.emplace_back(t1, verdict::yes);
      return out;
    }
    for (auto t1 : rep.normal_form) {
      verdict v = verdict::no;
      try {
        const auto budget = search_budget::seconds(cfg.pair_seconds);
        if (cfg.relation == tree_relation::gap_embedding) {
          v = find_gap_embedding(trees[t1], trees[t2], embedding_mode::infimum, budget) ? verdict::yes : verdict::no;
        } else {
          v = find_encoded_immersion(graphs[t1], graphs[t2], cfg.respect_labels, budget) ? verdict::yes : verdict::no;
        }
      } catch (const bound_exceeded&) {
        v = verdict::timeout;
      }
      if (v != verdict::no) out.emplace_back(t1, v);
    }
    return out;
  };

  std::uint64_t h = 14695981039346656037ULL;
  const auto nf = static_cast<std::uint64_t>(rep.normal_form.size());
  std::uint64_t nf_level = 0;
  for (auto t1 : rep.normal_form) nf_level += rep.level_bounded[t1];

  auto merge = [&](std::uint32_t t2, const std::vector<std::pair<std::uint32_t, verdict>>& found) {
    const bool lev2 = rep.level_bounded[t2];
    rep.summary.checked += nf;
    if (lev2) rep.level_summary.checked += nf_level;
    for (auto [t1, v] : found) {
      scan_pair p{t1, t2, v, std::nullopt};
      const bool lev = lev2 && rep.level_bounded[t1];
      if (v == verdict::yes) {
        p.comparison = compare(*c.ordinal(t1), *c.ordinal(t2));
        ++rep.summary.related;
        rep.level_summary.related += lev;
        if (p.violation()) {
          ++rep.summary.violations;
          rep.level_summary.violations += lev;
        }
      } else {
        ++rep.summary.timeouts;
        rep.level_summary.timeouts += lev;
      }
      detail::fnv1a(h, std::to_string(t1) + "," + std::to_string(t2) + "," + to_string(v) + "," +
                           (p.comparison ? to_string(*p.comparison) : "") + "\n");
      const bool keep = cfg.keep == row_filter::related ||
                        (cfg.keep == row_filter::violations && (p.violation() || v == verdict::timeout));
      if (keep) rep.rows.push_back(p);
    }
  };

  // blocks of targets are classified in parallel and merged in order
  const std::size_t block = std::size_t{256} * cfg.jobs;
  for (std::size_t start = 0; start < rep.targets.size(); start += block) {
    const std::size_t end = std::min(rep.targets.size(), start + block);
    std::vector<std::vector<std::pair<std::uint32_t, verdict>>> found(end - start);
    std::atomic<std::size_t> next{start};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (std::size_t k = next++; k < end; k = next++) found[k - start] = classify(rep.targets[k]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = end;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < cfg.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (std::size_t k = start; k < end; ++k) merge(rep.targets[k], found[k - start]);
  }
  rep.digest = h;
  return rep;
}

}  // namespace ordgraph
