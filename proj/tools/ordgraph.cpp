#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/encoding/report.hpp"
#include "ordgraph/graph/search.hpp"
#include "ordgraph/graph/treewidth.hpp"
#include "ordgraph/io/json.hpp"
#include "ordgraph/ord/text.hpp"
#include "ordgraph/trees/gap_embedding.hpp"
#include "ordgraph/version.hpp"
#include "ordgraph/wqo/suite.hpp"

namespace {

using namespace ordgraph;
using nlohmann::json;

enum exit_code : int { ok = 0, found_violation = 1, parse_failure = 2, precondition = 3, budget = 4 };

int code_of(const error& e) {
  switch (e.category()) {
    case error::kind::syntax: return parse_failure;
    case error::kind::precondition: return precondition;
    case error::kind::budget: return budget;
  }
  return precondition;
}

std::vector<cnf_w> parse_pool(const std::string& spec) {
  std::vector<cnf_w> pool;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw format_error("empty entry in label pool");
    pool.push_back(q_label<cnf_w>::parse(item).w);
  }
  if (pool.empty()) throw format_error("empty label pool");
  return pool;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct graph_opts {
  std::string g1, g2, witness;
  bool labels = false;
  bool directed = false;
  std::size_t max_steps = 0;
};

std::vector<io::graph_document> load_graphs(const std::vector<std::string>& paths, bool force_directed) {
  std::vector<json> docs;
  for (const auto& p : paths) {
    docs.push_back(io::read_json_file(p));
    if (force_directed) docs.back()["directed"] = true;
  }
  return io::graphs_from_json(docs);
}

const wqo::quasi_order* label_order(const io::graph_document& d, bool wanted) {
  if (!wanted) return nullptr;
  if (!d.labels) throw precondition_error("--labels given but the graphs carry no labels");
  return &*d.labels;
}

int report_check(const check_result& r) {
  if (r) {
    print_json({{"valid", false}, {"reason", *r}});
    return found_violation;
  }
  print_json({{"valid", true}});
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal notations, tree embeddings and graph containment"};
  app.set_version_flag("--version", std::string("ordgraph ") + version);
  app.require_subcommand(1);
  int status = ok;

  // ---- ord
  auto* ord = app.add_subcommand("ord", "ordinal terms");
  ord->require_subcommand(1);
  std::string ta, tb;
  auto* cmp = ord->add_subcommand("cmp", "compare two normal-form terms (prints <, = or >)");
  cmp->add_option("A", ta)->required();
  cmp->add_option("B", tb)->required();
  cmp->callback([&] {
    const auto a = parse_ord(ta, true), b = parse_ord(tb, true);
    const auto c = compare(a, b);
    std::cout << (c < 0 ? "<" : c > 0 ? ">" : "=") << "\n";
  });
  auto* nf = ord->add_subcommand("nf", "normal-form test; prints the term or the reason it fails");
  nf->add_option("A", ta)->required();
  nf->callback([&] {
    const auto a = parse_ord(ta, false);
    if (a.is_normal_form()) {
      std::cout << render(a) << "\n";
    } else {
      std::cout << "not normal form: " << a.normal_form_violation() << "\n";
      status = found_violation;
    }
  });

  // ---- tree
  auto* tree = app.add_subcommand("tree", "labelled trees");
  tree->require_subcommand(1);
  std::string tf1, tf2;
  bool order_only = false, tree_directed = false;
  std::size_t tree_steps = 0;
  auto* to = tree->add_subcommand("o", "the ordinal o(T) of a tree file");
  to->add_option("FILE", tf1)->required();
  to->callback([&] { std::cout << render(assign_ordinal(io::tree_from_json(io::read_json_file(tf1)))) << "\n"; });
  auto* te = tree->add_subcommand("embed", "search a gap embedding of T1 into T2");
  te->add_option("T1", tf1)->required();
  te->add_option("T2", tf2)->required();
  te->add_flag("--order", order_only, "only order preservation instead of infima");
  te->add_option("--max-steps", tree_steps, "search budget (0 = unlimited)");
  te->callback([&] {
    const auto t1 = io::tree_from_json(io::read_json_file(tf1));
    const auto t2 = io::tree_from_json(io::read_json_file(tf2));
    search_budget b;
    b.max_steps = tree_steps;
    const auto f = find_gap_embedding(t1, t2, order_only ? embedding_mode::order : embedding_mode::infimum, b);
    if (!f) {
      print_json({{"embedding", false}});
      status = found_violation;
      return;
    }
    json m = json::object();
    for (std::size_t x = 0; x < f->size(); ++x) m[t1.name(static_cast<int>(x))] = t2.name((*f)[x]);
    print_json({{"embedding", true}, {"map", m}});
  });
  auto* tenc = tree->add_subcommand("encode", "the multigraph encoding of a tree, as graph JSON");
  tenc->add_option("FILE", tf1)->required();
  tenc->add_flag("--directed", tree_directed, "orient edges away from r");
  tenc->callback([&] {
    const auto t = io::tree_from_json(io::read_json_file(tf1));
    auto g = tree_directed ? encode_directed(t) : encode(t);
    const auto space = label_space<cnf_w>::covering({&g});
    space.bind(g);
    print_json(io::to_json(g.graph, &space.order()));
  });

  // ---- graph
  auto* graph = app.add_subcommand("graph", "graph containment and tree-width");
  graph->require_subcommand(1);
  graph_opts go;
  auto* gminor = graph->add_subcommand("minor", "search (or check with --check) a minor expansion of G1 in G2");
  gminor->add_option("G1", go.g1)->required();
  gminor->add_option("G2", go.g2)->required();
  gminor->add_flag("--labels", go.labels, "respect vertex and edge labels");
  gminor->add_option("--check", go.witness, "witness file to verify instead of searching");
  gminor->add_option("--max-steps", go.max_steps, "search budget (0 = unlimited)");
  gminor->callback([&] {
    auto docs = load_graphs({go.g1, go.g2}, false);
    const auto& g1 = docs[0].graph;
    const auto& g2 = docs[1].graph;
    const auto* q = label_order(docs[0], go.labels);
    if (!go.witness.empty()) {
      status = report_check(minor_violation(g1, g2, io::witness_from_json(io::read_json_file(go.witness), g1, g2), q));
      return;
    }
    search_budget b;
    b.max_steps = go.max_steps;
    const auto w = find_minor(g1, g2, q, b);
    if (!w) {
      print_json({{"minor", false}});
      status = found_violation;
      return;
    }
    print_json({{"minor", true}, {"witness", io::to_json(*w, g1, g2)}});
  });
  auto* gimm = graph->add_subcommand("immerse", "search (or check with --check) an immersion of G1 in G2");
  gimm->add_option("G1", go.g1)->required();
  gimm->add_option("G2", go.g2)->required();
  gimm->add_flag("--directed", go.directed, "treat both graphs as directed");
  gimm->add_flag("--labels", go.labels, "respect vertex labels");
  gimm->add_option("--check", go.witness, "witness file to verify instead of searching");
  gimm->add_option("--max-steps", go.max_steps, "search budget (0 = unlimited)");
  gimm->callback([&] {
    auto docs = load_graphs({go.g1, go.g2}, go.directed);
    const auto& g1 = docs[0].graph;
    const auto& g2 = docs[1].graph;
    const auto* q = label_order(docs[0], go.labels);
    if (!go.witness.empty()) {
      status = report_check(immersion_violation(g1, g2, io::witness_from_json(io::read_json_file(go.witness), g1, g2), q));
      return;
    }
    immersion_options opt;
    opt.respect_labels = go.labels;
    opt.labels = q;
    opt.budget.max_steps = go.max_steps;
    const auto w = find_immersion(g1, g2, opt);
    if (!w) {
      print_json({{"immersion", false}});
      status = found_violation;
      return;
    }
    print_json({{"immersion", true}, {"witness", io::to_json(*w, g1, g2)}});
  });
  bool tw_json = false;
  auto* gtw = graph->add_subcommand("tw", "exact tree-width");
  gtw->add_option("G", go.g1)->required();
  gtw->add_flag("--json", tw_json, "print an optimal decomposition");
  gtw->callback([&] {
    const auto doc = io::graph_from_json(io::read_json_file(go.g1));
    const auto d = optimal_tree_decomposition(doc.graph);
    if (tw_json) {
      print_json(io::to_json(d, doc.graph));
    } else {
      std::cout << width(d) << "\n";
    }
  });
  auto* gcol = graph->add_subcommand("collapse", "check a collapse witness W of G2 to G1");
  std::string g2c, g1c, wc;
  gcol->add_option("G2", g2c)->required();
  gcol->add_option("G1", g1c)->required();
  gcol->add_option("W", wc)->required();
  gcol->add_flag("--labels", go.labels, "respect edge labels");
  gcol->callback([&] {
    auto docs = load_graphs({g2c, g1c}, false);
    const auto& g2 = docs[0].graph;
    const auto& g1 = docs[1].graph;
    const auto w = io::witness_from_json(io::read_json_file(wc), g1, g2);
    status = report_check(collapse_violation(g2, g1, w, label_order(docs[0], go.labels)));
  });
  auto* gdot = graph->add_subcommand("dot", "DOT rendering of a graph file");
  gdot->add_option("G", go.g1)->required();
  gdot->callback([&] {
    const auto doc = io::graph_from_json(io::read_json_file(go.g1));
    std::cout << io::to_dot(doc.graph, doc.labels ? &*doc.labels : nullptr);
  });

  // ---- wqo
  auto* wqo_cmd = app.add_subcommand("wqo", "finite quasi-orders");
  wqo_cmd->require_subcommand(1);
  std::string qfile;
  std::size_t max_seq = 3;
  auto* wv = wqo_cmd->add_subcommand("verify", "run the property suite on a quasi-order file");
  wv->add_option("FILE", qfile)->required();
  wv->add_option("--max-seq", max_seq, "longest subset sequence for <_2 acyclicity")->check(CLI::Range(1, 4));
  wv->callback([&] {
    const auto q = io::quasi_order_from_json(io::read_json_file(qfile));
    if (q.size() > 6) throw precondition_error("wqo verify supports at most 6 elements");
    json results = json::array();
    for (const auto& r : wqo::run_suite(q, max_seq)) {
      results.push_back({{"property", r.name}, {"ok", r.ok}, {"detail", r.detail}});
      if (!r.ok) status = found_violation;
    }
    print_json({{"elements", q.size()}, {"results", results}});
  });

  // ---- scan
  auto* scan = app.add_subcommand("scan", "classify every ordered pair of a tree corpus and compare ordinals");
  scan_config cfg;
  report_options ropt;
  tree_bounds<cnf_w> bounds;
  std::string pool_spec = "bot,0,w", relation_name = "undirected", engine_name = "enumerate",
              pairs_name = "all", format = "json", out_path;
  bool directed_flag = false, ignore_labels = false;
  scan->add_flag("--directed", directed_flag, "directed immersion (same as --relation directed)");
  scan->add_option("--relation", relation_name, "gap, directed or undirected")
      ->check(CLI::IsMember({"gap", "directed", "undirected"}));
  scan->add_option("--max-vertices", bounds.max_vertices, "largest tree")->required()->check(CLI::Range(1, 12));
  scan->add_option("--pool", pool_spec, "comma-separated W labels, e.g. bot,0,w,eps0");
  scan->add_option("--max-l", bounds.max_l, "largest l value")->check(CLI::Range(0, 15));
  scan->add_flag("--ignore-labels", ignore_labels, "relate trees regardless of Q-labels");
  scan->add_option("--engine", engine_name, "enumerate or pairwise")->check(CLI::IsMember({"enumerate", "pairwise"}));
  scan->add_option("--pairs", pairs_name, "pairs listed in the report: all, related, violations or none")
      ->check(CLI::IsMember({"all", "related", "violations", "none"}));
  scan->add_option("--max-rows", ropt.max_rows, "refuse to list more pairs than this");
  scan->add_option("--max-violations", ropt.max_violations, "detailed violation entries (0 = all)");
  scan->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--seed", cfg.seed, "seed for --sample");
  scan->add_option("--sample", cfg.sample, "scan only this many targets, drawn with --seed");
  scan->add_option("--pair-seconds", cfg.pair_seconds, "pairwise engine budget per pair")->check(CLI::PositiveNumber);
  scan->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--out", out_path, "report file (default: standard output)");
  scan->callback([&] {
    bounds.pool = parse_pool(pool_spec);
    cfg.relation = directed_flag || relation_name == "directed" ? tree_relation::directed_immersion
                   : relation_name == "gap"                     ? tree_relation::gap_embedding
                                                                : tree_relation::undirected_immersion;
    if (directed_flag && relation_name == "gap") throw precondition_error("--directed conflicts with --relation gap");
    cfg.respect_labels = !ignore_labels;
    cfg.engine = engine_name == "pairwise" ? scan_engine::pairwise : scan_engine::enumerate;
    ropt.pairs = pairs_name == "all"          ? pair_listing::all
                 : pairs_name == "related"    ? pair_listing::related
                 : pairs_name == "violations" ? pair_listing::violations
                                              : pair_listing::none;
    cfg.keep = ropt.pairs == pair_listing::all || ropt.pairs == pair_listing::related ? row_filter::related
                                                                                      : row_filter::violations;
    const tree_corpus<cnf_w> corpus(bounds);
    const auto rep = scan_corpus(corpus, cfg);
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw precondition_error("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (format == "csv") {
      write_scan_csv(out, rep, corpus, ropt);
    } else {
      write_scan_json(out, rep, corpus, ropt);
    }
    const auto& s = rep.summary;
    std::cerr << "corpus " << rep.corpus_size << " trees, " << rep.normal_form.size() << " normal form; "
              << s.checked << " pairs checked, " << s.related << " related, " << s.violations << " violations, "
              << s.timeouts << " timeouts; level-restricted violations " << rep.level_summary.violations << "\n";
    if (s.violations > 0) status = found_violation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : parse_failure;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_of(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return parse_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return precondition;
  }
  return status;
}
