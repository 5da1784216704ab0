// One PASS/FAIL line per acceptance criterion. Bounds and time limits are
// fixed below. The process exits 0 when every criterion reports the status
// listed in `expected`; criteria 3 and 4 are expected to fail (see README).
#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/encoding/report.hpp"
#include "ordgraph/graph/search.hpp"
#include "ordgraph/graph/treewidth.hpp"
#include "ordgraph/ord/enumerate.hpp"
#include "ordgraph/ord/text.hpp"
#include "ordgraph/wqo/suite.hpp"

using namespace ordgraph;
using clock_type = std::chrono::steady_clock;
using L = q_label<cnf_w>;

namespace {

constexpr double c1_seconds = 300;
constexpr double c3_seconds = 1800;
constexpr double c4_timeout_share = 0.05;
constexpr double c4_pair_seconds = 10;
constexpr double c6_seconds = 300;
constexpr double c8_seconds = 1800;
constexpr bool expected[9] = {false, true, true, false, false, true, true, true, true};

struct outcome {
  bool pass = false;
  std::string detail;
};

double since(clock_type::time_point t) { return std::chrono::duration<double>(clock_type::now() - t).count(); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

cnf_w wpow(unsigned n) { return cnf_w::omega_pow(cnf_w::from_nat(n)); }

outcome order_axioms() {
  const auto t0 = clock_type::now();
  const std::vector<cnf_w> pool{cnf_w::bottom(), cnf_w::zero(), cnf_w::one(), cnf_w::omega(),
                                wpow(2), cnf_w::omega_pow(cnf_w::omega()), cnf_w::eps0()};
  const auto ts = enumerate_terms<cnf_w>(term_bounds{4, 2, 2}, pool, true);
  const std::size_t n = ts.size();
  constexpr std::size_t cap = 4096;
  if (n > cap) return {false, "term corpus larger than the checker supports"};
  std::vector<std::bitset<cap>> less(n);
  std::size_t irreflexive = 0, trichotomy = 0, transitivity = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (compare(ts[a], ts[a]) != 0) ++irreflexive;
    for (std::size_t b = 0; b < n; ++b) less[a][b] = compare(ts[a], ts[b]) < 0;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const int holds = int(less[a][b]) + int(less[b][a]) + int(ts[a] == ts[b]);
      if (holds != 1) ++trichotomy;
    }
  }
  // a < b and b < c imply a < c: the row of b must be inside the row of a
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (less[a][b]) transitivity += (less[b] & ~less[a]).count();
    }
  }
  const double t = since(t0);
  std::ostringstream d;
  d << n << " terms; irreflexivity " << irreflexive << ", trichotomy " << trichotomy << ", transitivity "
    << transitivity << " violations; " << secs(t);
  return {irreflexive + trichotomy + transitivity == 0 && t < c1_seconds, d.str()};
}

outcome anchors() {
  const auto a = parse_ord<cnf_w>("psi(0, bar(0))", true);
  const auto b = parse_ord<cnf_w>("psi(0, bar(w^(w^(1))))", true);
  const auto c = parse_ord<cnf_w>("psi(0, bar(eps0))", true);
  const bool ok = compare(a, b) < 0 && compare(b, c) < 0 && compare(a, c) < 0;
  return {ok, render(a) + " < " + render(b) + " < " + render(c)};
}

std::string counts(const scan_counts& s) {
  std::ostringstream d;
  d << s.checked << " pairs, " << s.related << " related, " << s.violations << " violations, " << s.timeouts
    << " timeouts";
  return d.str();
}

std::string first_violation(const scan_report<cnf_w>& rep, const tree_corpus<cnf_w>& c) {
  for (const auto& p : rep.rows) {
    if (!p.violation()) continue;
    return canonical_form(c.materialize(p.t1)) + " -> " + canonical_form(c.materialize(p.t2)) + " with " +
           render(*c.ordinal(p.t1)) + " > " + render(*c.ordinal(p.t2));
  }
  return "none";
}

scan_report<cnf_w> run_scan(const tree_corpus<cnf_w>& c, tree_relation rel, unsigned jobs) {
  scan_config cfg;
  cfg.relation = rel;
  cfg.jobs = jobs;
  cfg.pair_seconds = c4_pair_seconds;
  cfg.keep = row_filter::violations;
  return scan_corpus(c, cfg);
}

outcome monotonicity(const tree_corpus<cnf_w>& c) {
  const auto t0 = clock_type::now();
  const auto rep = run_scan(c, tree_relation::gap_embedding, 1);
  const double t = since(t0);
  std::cout << "INFO criterion 3: first violation " << first_violation(rep, c) << "\n";
  std::cout << "INFO criterion 3: level-bounded trees only: " << counts(rep.level_summary) << "\n";
  return {rep.summary.violations == 0 && rep.summary.timeouts == 0 && t < c3_seconds,
          std::to_string(rep.normal_form.size()) + " trees; " + counts(rep.summary) + "; " + secs(t)};
}

outcome directed_claim(const tree_corpus<cnf_w>& c) {
  const auto t0 = clock_type::now();
  const auto dir = run_scan(c, tree_relation::directed_immersion, 1);
  std::cout << "INFO criterion 4: directed first violation " << first_violation(dir, c) << "\n";
  std::cout << "INFO criterion 4: directed, level-bounded trees only: " << counts(dir.level_summary) << "\n";

  const auto und = run_scan(c, tree_relation::undirected_immersion, 1);
  const auto again = run_scan(c, tree_relation::undirected_immersion, 2);
  std::ostringstream a, b;
  report_options opt;
  opt.pairs = pair_listing::violations;
  write_scan_json(a, und, c, opt);
  write_scan_json(b, again, c, opt);
  const bool reproducible = a.str() == b.str() && und.digest == again.digest;
  const bool classified = und.summary.checked == und.normal_form.size() * und.normal_form.size();
  const double share = und.summary.checked ? double(und.summary.timeouts) / double(und.summary.checked) : 1.0;
  std::cout << "INFO criterion 4: undirected " << counts(und.summary) << "; level-bounded: "
            << counts(und.level_summary) << "\n";
  std::cout << "INFO criterion 4: undirected classified " << (classified ? "all" : "NOT all") << ", timeout share "
            << share << ", reproducible across job counts " << (reproducible ? "yes" : "no") << "\n";
  const bool undirected_ok = classified && share < c4_timeout_share && reproducible;
  const bool directed_ok = dir.summary.violations == 0 && dir.summary.timeouts == 0;
  return {directed_ok && undirected_ok, "directed " + counts(dir.summary) + "; undirected part " +
                                            (undirected_ok ? "ok" : "not ok") + "; " + secs(since(t0))};
}

outcome two_trees() {
  labelled_tree left, right;
  const int b = left.add_root(1, L::plus(), "B");
  left.add_child(b, 1, L::of(cnf_w::eps0()), "C");
  left.add_child(b, 0, L::of(cnf_w::omega()), "D");
  const int a = right.add_root(2, L::plus(), "A*");
  const int bs = right.add_child(a, 2, L::plus(), "B*");
  right.add_child(bs, 2, L::of(cnf_w::eps0()), "C*");
  right.add_child(bs, 1, L::of(cnf_w::zero()), "D*");
  right.add_child(a, 0, L::of(wpow(2)), "E*");
  auto g1 = encode(left), g2 = encode(right);
  auto id = [](const encoded_graph& g, const char* s) { return *g.graph.find_vertex(s); };
  auto bundle = [](const encoded_graph& g, int u, int v) {
    std::vector<int> out;
    for (int e : g.graph.incident(u)) {
      if (g.graph.other(e, u) == v) out.push_back(e);
    }
    return out;
  };
  const int r = id(g2, "r"), as = id(g2, "A*"), bst = id(g2, "B*"), cs = id(g2, "C*"), es = id(g2, "E*");
  const auto ra = bundle(g2, r, as), ab = bundle(g2, as, bst), bc = bundle(g2, bst, cs), ae = bundle(g2, as, es);
  expansion_witness w;
  w.kind = expansion_kind::immersion;
  w.vertex_map = {r, bst, cs, es};
  w.paths = {{ra[0], ab[0]}, {ra[1], ab[1]}, {bc[0]}, {bc[1]}, {ab[2], ae[0]}};
  const auto space = label_space<cnf_w>::covering({&g1, &g2});
  auto l1 = g1, l2 = g2;
  space.bind(l1);
  space.bind(l2);
  const bool accepted = check_immersion(l1.graph, l2.graph, w, &space.order());
  const bool order_kept = preserves_tree_order(g1, g2, w.vertex_map);
  const auto o1 = assign_ordinal_graph(g1), o2 = assign_ordinal_graph(g2);
  const bool less = compare(o1, o2) < 0;
  return {accepted && !order_kept && less, std::string("map accepted ") + (accepted ? "yes" : "no") +
                                               ", order preserving " + (order_kept ? "yes" : "no") + ", " +
                                               render(o1) + " < " + render(o2) + " " + (less ? "yes" : "no")};
}

outcome wqo_shadows() {
  const auto t0 = clock_type::now();
  std::size_t orders = 0, failures = 0;
  std::string first;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& x : wqo::enumerate_quasi_orders(n)) {
      ++orders;
      for (const auto& r : wqo::run_suite(x, 3)) {
        if (r.ok) continue;
        ++failures;
        if (first.empty()) first = r.name + ": " + r.detail;
      }
    }
  }
  const double t = since(t0);
  return {failures == 0 && t < c6_seconds, std::to_string(orders) + " quasi-orders, " + std::to_string(failures) +
                                               " failed checks" + (first.empty() ? "" : " (" + first + ")") + "; " +
                                               secs(t)};
}

outcome graph_oracles() {
  const auto gs = oracle::load_corpus(std::string(ORDGRAPH_TEST_DATA) + "/graph_corpus.json");
  std::size_t pairs = 0, minor_diff = 0, immersion_diff = 0, bad_witness = 0;
  for (const auto& a : gs) {
    for (const auto& b : gs) {
      ++pairs;
      const auto m = find_minor(a.graph, b.graph);
      const auto i = find_immersion(a.graph, b.graph);
      minor_diff += m.has_value() != oracle::has_minor(a.graph, b.graph);
      immersion_diff += i.has_value() != oracle::has_immersion(a.graph, b.graph);
      bad_witness += (m && !check_minor(a.graph, b.graph, *m)) + (i && !check_immersion(a.graph, b.graph, *i));
    }
  }
  multigraph one, path, k4;
  one.add_vertex();
  for (int v = 0; v < 4; ++v) {
    path.add_vertex();
    k4.add_vertex();
  }
  for (int v = 0; v < 3; ++v) path.add_edge(v, v + 1);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  }
  const int t0 = treewidth(one), t1 = treewidth(path), t3 = treewidth(k4);
  std::ostringstream d;
  d << gs.size() << " graphs, " << pairs << " pairs; minor mismatches " << minor_diff << ", immersion mismatches "
    << immersion_diff << ", invalid witnesses " << bad_witness << "; tree-width " << t0 << "/" << t1 << "/" << t3;
  return {minor_diff + immersion_diff + bad_witness == 0 && t0 == 0 && t1 == 1 && t3 == 3, d.str()};
}

outcome commutation(const tree_corpus<cnf_w>& c) {
  const auto t0 = clock_type::now();
  std::size_t mismatches = 0, normal = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto t = c.materialize(i);
    std::optional<ord> tree_side, graph_side;
    try {
      tree_side = assign_ordinal(t);
    } catch (const not_normal_form&) {
    }
    try {
      graph_side = assign_ordinal_graph(encode(t));
    } catch (const not_normal_form&) {
    }
    normal += tree_side.has_value();
    if (tree_side.has_value() != graph_side.has_value() || (tree_side && !(*tree_side == *graph_side))) ++mismatches;
  }
  const double t = since(t0);
  std::ostringstream d;
  d << c.size() << " trees (" << normal << " with normal-form ordinals), " << mismatches << " mismatches; " << secs(t);
  return {mismatches == 0 && t < c8_seconds, d.str()};
}

}  // namespace

int main() {
  int unexpected = 0;
  auto report = [&](int n, const char* name, const outcome& o) {
    std::cout << "criterion " << n << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
              << (o.pass == expected[n] ? "" : " [unexpected]") << "\n"
              << std::flush;
    if (o.pass != expected[n]) ++unexpected;
  };
  report(1, "ordinal order axioms", order_axioms());
  report(2, "anchor ordering", anchors());

  const auto t0 = clock_type::now();
  const tree_corpus<cnf_w> corpus(tree_bounds<cnf_w>{5, {cnf_w::bottom(), cnf_w::zero(), cnf_w::omega(), cnf_w::eps0()}, 2});
  std::cout << "INFO tree corpus: " << corpus.size() << " trees built in " << secs(since(t0)) << "\n";

  report(3, "gap embeddings keep the ordinal order", monotonicity(corpus));
  report(4, "encoded immersions keep the ordinal order", directed_claim(corpus));
  report(5, "running example", two_trees());
  report(6, "quasi-order shadows", wqo_shadows());
  report(7, "graph oracles and tree-width", graph_oracles());
  report(8, "graph and tree ordinals agree", commutation(corpus));
  std::cout << (unexpected ? "acceptance: statuses differ from the recorded expectation\n"
                           : "acceptance: all statuses as recorded\n");
  return unexpected ? 1 : 0;
}
