#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ordgraph/encoding/scan.hpp"
#include "ordgraph/ord/text.hpp"
#include "ordgraph/version.hpp"

namespace ordgraph {

/// Which pairs a written report lists. `all` includes unrelated pairs and
/// needs the related rows kept in the scan.
enum class pair_listing : unsigned char { all, related, violations, none };

inline const char* to_string(pair_listing p) {
  switch (p) {
    case pair_listing::all: return "all";
    case pair_listing::related: return "related";
    case pair_listing::violations: return "violations";
    case pair_listing::none: return "none";
  }
  return "?";
}

struct report_options {
  pair_listing pairs = pair_listing::all;
  std::size_t max_rows = 5'000'000;       // listing more pairs is refused
  std::size_t max_violations = 10'000;    // detailed violation entries; 0 lists all
};

namespace detail {

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline const char* related_key(tree_relation r) {
  return r == tree_relation::gap_embedding ? "embedding" : "immersion";
}

// Calls emit(pair) for every listed pair in target-major order.
template <w_order W, class F>
void for_each_listed(const scan_report<W>& rep, pair_listing mode, F&& emit) {
  if (mode == pair_listing::none) return;
  if (mode != pair_listing::all) {
    for (const auto& p : rep.rows) {
      if (mode == pair_listing::related || p.violation() || p.related == verdict::timeout) emit(p);
    }
    return;
  }
  std::size_t r = 0;
  for (auto t2 : rep.targets) {
    for (auto t1 : rep.normal_form) {
      if (r < rep.rows.size() && rep.rows[r].t1 == t1 && rep.rows[r].t2 == t2) {
        emit(rep.rows[r++]);
      } else {
        emit(scan_pair{t1, t2, verdict::no, std::nullopt});
      }
    }
  }
}

template <w_order W>
std::size_t listed_count(const scan_report<W>& rep, pair_listing mode) {
  if (mode == pair_listing::all) {
    if (rep.config.keep != row_filter::related) throw precondition_error("listing all pairs needs every related row");
    return rep.targets.size() * rep.normal_form.size();
  }
  if (mode == pair_listing::related && rep.config.keep != row_filter::related) {
    throw precondition_error("listing related pairs needs every related row");
  }
  std::size_t n = 0;
  for_each_listed(rep, mode, [&](const scan_pair&) { ++n; });
  return n;
}

}  // namespace detail

/// Everything but the pair list, as ordered JSON.
template <w_order W>
nlohmann::ordered_json scan_report_head(const scan_report<W>& rep, const tree_corpus<W>& c, const report_options& opt) {
  using json = nlohmann::ordered_json;
  const auto& cfg = rep.config;
  json head;
  head["tool"] = "ordgraph";
  head["version"] = version;
  head["config"] = {{"relation", to_string(cfg.relation)},
                    {"directed", cfg.relation == tree_relation::directed_immersion},
                    {"respect_labels", cfg.respect_labels},
                    {"engine", to_string(cfg.engine)},
                    {"seed", cfg.seed},
                    {"sample", cfg.sample},
                    {"pair_seconds", cfg.pair_seconds},
                    {"pairs", to_string(opt.pairs)}};
  json pool = json::array();
  for (const auto& w : rep.bounds.pool) pool.push_back(w.str());
  head["directed"] = cfg.relation == tree_relation::directed_immersion;
  head["bounds"] = {{"max_vertices", rep.bounds.max_vertices}, {"pool", pool}, {"max_l", rep.bounds.max_l}};
  head["corpus"] = {{"trees", rep.corpus_size}, {"normal_form", rep.normal_form.size()}, {"targets", rep.targets.size()}};
  const char* key = cfg.relation == tree_relation::gap_embedding ? "embeddings" : "immersions";
  auto counts = [&](const scan_counts& s) {
    return json{{"checked", s.checked}, {key, s.related}, {"violations", s.violations}, {"timeouts", s.timeouts}};
  };
  head["summary"] = counts(rep.summary);
  head["level_restricted"] = counts(rep.level_summary);
  head["digest"] = detail::hex64(rep.digest);
  json viol = json::array();
  for (const auto& p : rep.rows) {
    if (!p.violation()) continue;
    if (opt.max_violations != 0 && viol.size() >= opt.max_violations) break;
    viol.push_back({{"t1", p.t1},
                    {"t2", p.t2},
                    {"t1_tree", canonical_form(c.materialize(p.t1))},
                    {"t2_tree", canonical_form(c.materialize(p.t2))},
                    {"o1", render(*c.ordinal(p.t1))},
                    {"o2", render(*c.ordinal(p.t2))}});
  }
  head["violations_listed"] = viol.size();
  head["violations"] = std::move(viol);
  return head;
}

/// JSON report; pairs are written one per line after the other fields.
template <w_order W>
void write_scan_json(std::ostream& out, const scan_report<W>& rep, const tree_corpus<W>& c, const report_options& opt) {
  if (detail::listed_count(rep, opt.pairs) > opt.max_rows) {
    throw bound_exceeded("report would list more than " + std::to_string(opt.max_rows) + " pairs");
  }
  const auto head = scan_report_head(rep, c, opt);
  out << "{\n";
  for (const auto& [k, v] : head.items()) out << "  " << nlohmann::json(k).dump() << ": " << v.dump() << ",\n";
  out << "  \"pairs\": [";
  const char* key = detail::related_key(rep.config.relation);
  bool first = true;
  detail::for_each_listed(rep, opt.pairs, [&](const scan_pair& p) {
    nlohmann::ordered_json row{{"t1", p.t1}, {"t2", p.t2}, {key, to_string(p.related)}};
    if (p.comparison) row["comparison"] = to_string(*p.comparison);
    row["violation"] = p.violation();
    out << (first ? "\n    " : ",\n    ") << row.dump();
    first = false;
  });
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
}

/// CSV projection: '#'-prefixed metadata lines, then one row per listed pair.
template <w_order W>
void write_scan_csv(std::ostream& out, const scan_report<W>& rep, const tree_corpus<W>& c, const report_options& opt) {
  if (detail::listed_count(rep, opt.pairs) > opt.max_rows) {
    throw bound_exceeded("report would list more than " + std::to_string(opt.max_rows) + " pairs");
  }
  auto head = scan_report_head(rep, c, opt);
  head.erase("violations");
  for (const auto& [k, v] : head.items()) out << "# " << k << ": " << v.dump() << "\n";
  out << "t1,t2," << detail::related_key(rep.config.relation) << ",comparison,violation\n";
  detail::for_each_listed(rep, opt.pairs, [&](const scan_pair& p) {
    out << p.t1 << "," << p.t2 << "," << to_string(p.related) << ","
        << (p.comparison ? to_string(*p.comparison) : "") << "," << (p.violation() ? "true" : "false") << "\n";
  });
}

}  // namespace ordgraph
