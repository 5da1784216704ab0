#include <catch_amalgamated.hpp>

#include <sstream>

#include "ordgraph/encoding/edge_gap.hpp"
#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/encoding/report.hpp"
#include "ordgraph/encoding/transport.hpp"
#include "ordgraph/ord/text.hpp"

using namespace ordgraph;
using L = q_label<cnf_w>;

namespace {

struct tree_pair {
  labelled_tree left, right;
  int b_star = 0;
};

tree_pair two_trees() {
  tree_pair f;
  const int b = f.left.add_root(1, L::plus(), "B");
  f.left.add_child(b, 1, L::of(cnf_w::eps0()), "C");
  f.left.add_child(b, 0, L::of(cnf_w::omega()), "D");
  const int a = f.right.add_root(2, L::plus(), "A*");
  f.b_star = f.right.add_child(a, 2, L::plus(), "B*");
  f.right.add_child(f.b_star, 2, L::of(cnf_w::eps0()), "C*");
  f.right.add_child(f.b_star, 1, L::of(cnf_w::zero()), "D*");
  f.right.add_child(a, 0, L::of(cnf_w::omega_pow(cnf_w::from_nat(2))), "E*");
  return f;
}

int vid(const encoded_graph& g, const char* id) { return *g.graph.find_vertex(id); }

// Edges between two vertices, in index order.
std::vector<int> bundle(const encoded_graph& g, int u, int v) {
  std::vector<int> out;
  for (int e : g.graph.incident(u)) {
    if (g.graph.other(e, u) == v) out.push_back(e);
  }
  return out;
}

const tree_corpus<cnf_w>& small_corpus() {
  static const tree_corpus<cnf_w> c(tree_bounds<cnf_w>{3, {cnf_w::bottom(), cnf_w::zero(), cnf_w::omega()}, 1});
  return c;
}

labelled_tree chain(std::initializer_list<L> labels) {
  labelled_tree t;
  int at = labelled_tree::none;
  for (const auto& l : labels) at = at == labelled_tree::none ? t.add_root(0, l) : t.add_child(at, 0, l);
  return t;
}

}  // namespace

TEST_CASE("encoding a single vertex") {
  labelled_tree t;
  t.add_root(0, L::of(cnf_w::zero()));
  const auto g = encode(t);
  CHECK(g.graph.num_vertices() == 2);
  CHECK(g.graph.num_edges() == 1);
  CHECK_FALSE(g.labels[0].has_value());
  CHECK_FALSE(g.graph.directed());
  CHECK(encode_directed(t).graph.directed());
}

TEST_CASE("two-tree example encodings") {
  const auto f = two_trees();
  const auto g1 = encode(f.left), g2 = encode(f.right);
  CHECK(bundle(g1, vid(g1, "r"), vid(g1, "B")).size() == 2);
  CHECK(bundle(g1, vid(g1, "B"), vid(g1, "C")).size() == 2);
  CHECK(bundle(g1, vid(g1, "B"), vid(g1, "D")).size() == 1);
  CHECK(render(assign_ordinal_graph(g1)) == "psi(1, bar(eps0)) + psi(0, bar(w^(1)))");
  CHECK(render(assign_ordinal_graph(g2)) == "psi(2, bar(eps0)) + psi(1, bar(0)) + psi(0, bar(w^(1 + 1)))");
  CHECK(compare(assign_ordinal_graph(g1), assign_ordinal_graph(g2)) < 0);
  CHECK(canonical_form(decode(g2)) == canonical_form(f.right));
}

TEST_CASE("graph subtrees") {
  const auto f = two_trees();
  const auto g2 = encode(f.right);
  const auto s = graph_subtree(g2, vid(g2, "B*"));
  CHECK(s.graph.num_vertices() == 4);
  CHECK(s.graph.num_edges() == 8);
  CHECK(bundle(s, s.root, vid(s, "B*")).size() == 3);
  CHECK(bundle(s, vid(s, "B*"), vid(s, "C*")).size() == 3);
  CHECK(bundle(s, vid(s, "B*"), vid(s, "D*")).size() == 2);
  CHECK(s.graph.vertex_id(s.root) == "r'");
  CHECK(render(assign_ordinal_graph(s)) == "psi(2, bar(eps0)) + psi(1, bar(0))");

  const auto whole = graph_subtree(g2, vid(g2, "A*"));
  CHECK(canonical_form(decode(whole)) == canonical_form(f.right));
  CHECK(assign_ordinal_graph(whole) == assign_ordinal_graph(g2));

  const auto leaf = graph_subtree(g2, vid(g2, "D*"));
  CHECK(leaf.graph.num_vertices() == 2);
  CHECK(leaf.graph.num_edges() == 2);
  CHECK_THROWS_AS(graph_subtree(g2, g2.root), root_requested);
  CHECK_THROWS_AS(graph_subtree(g2, 42), precondition_error);
}

TEST_CASE("malformed encodings are rejected") {
  encoded_graph g{multigraph(false), 0, {}, {}};
  g.graph.add_vertex("r");
  g.labels.emplace_back();
  g.graph.add_vertex("x");
  g.labels.emplace_back(L::of(cnf_w::zero()));
  g.graph.add_vertex("y");
  g.labels.emplace_back(L::of(cnf_w::zero()));
  g.graph.add_edge(0, 1);
  CHECK_THROWS_AS(assign_ordinal_graph(g), precondition_error);
  g.graph.add_edge(1, 2);
  g.graph.add_edge(2, 0);
  CHECK_THROWS_AS(assign_ordinal_graph(g), precondition_error);

  labelled_tree t;
  t.add_root(0, L::of(cnf_w::zero()));
  auto d = encode_directed(t);
  multigraph back(true);
  back.add_vertex("r");
  back.add_vertex("x");
  back.add_edge(1, 0);
  d.graph = back;
  CHECK_THROWS_AS(assign_ordinal_graph(d), precondition_error);

  labelled_tree p;
  p.add_child(p.add_root(0, L::plus()), 0, L::of(cnf_w::zero()));
  CHECK_THROWS_AS(encode(p), not_assignable);
}

TEST_CASE("commutation and round trip on a corpus") {
  const auto& c = small_corpus();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto t = c.materialize(i);
    INFO(canonical_form(t));
    for (const auto& g : {encode(t), encode_directed(t)}) {
      CHECK(canonical_form(decode(g)) == canonical_form(t));
      if (c.ordinal(i)) {
        CHECK(assign_ordinal_graph(g) == *c.ordinal(i));
      } else {
        CHECK_THROWS_AS(assign_ordinal_graph(g), not_normal_form);
      }
    }
  }
}

TEST_CASE("two-tree example immersion") {
  const auto f = two_trees();
  const auto g1 = encode(f.left), g2 = encode(f.right);
  const int r = vid(g2, "r"), a = vid(g2, "A*"), b = vid(g2, "B*"), c = vid(g2, "C*"), e = vid(g2, "E*");
  expansion_witness w;
  w.kind = expansion_kind::immersion;
  w.vertex_map = {r, b, c, e};
  const auto ra = bundle(g2, r, a), ab = bundle(g2, a, b), bc = bundle(g2, b, c), ae = bundle(g2, a, e);
  // G1 edges in order: r-B twice, B-C twice, B-D once
  w.paths = {{ra[0], ab[0]}, {ra[1], ab[1]}, {bc[0]}, {bc[1]}, {ab[2], ae[0]}};
  const auto space = label_space<cnf_w>::covering({&g1, &g2});
  auto l1 = g1, l2 = g2;
  space.bind(l1);
  space.bind(l2);
  CHECK_FALSE(immersion_violation(l1.graph, l2.graph, w, &space.order()));
  CHECK_FALSE(preserves_tree_order(g1, g2, w.vertex_map));

  const auto found = find_encoded_immersion(g1, g2);
  REQUIRE(found);
  CHECK(found->vertex_map[0] == r);
  CHECK(find_encoded_immersion(encode_directed(f.left), encode_directed(f.right)));
  CHECK_FALSE(find_encoded_immersion(g2, g1));
}

TEST_CASE("labels decide between encodings") {
  const auto lo = encode(chain({L::of(cnf_w::zero())}));
  const auto hi = encode(chain({L::of(cnf_w::omega())}));
  CHECK(find_encoded_immersion(lo, hi));
  CHECK_FALSE(find_encoded_immersion(hi, lo));
  CHECK(find_encoded_immersion(hi, lo, false));
}

TEST_CASE("gap embeddings transport to directed immersions") {
  const auto& c = small_corpus();
  std::vector<std::uint32_t> nf;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (c.ordinal(i)) nf.push_back(i);
  }
  std::vector<labelled_tree> ts(c.size());
  std::vector<encoded_graph> gs(c.size());
  for (auto i : nf) {
    ts[i] = c.materialize(i);
    gs[i] = encode_directed(ts[i]);
  }
  std::size_t embeddings = 0, failures = 0;
  for (auto i : nf) {
    for (auto j : nf) {
      const auto f = find_gap_embedding(ts[i], ts[j]);
      if (!f) continue;
      ++embeddings;
      const auto w = gap_embedding_to_immersion(ts[i], ts[j], *f, gs[i], gs[j]);
      if (!w || !check_immersion(gs[i].graph, gs[j].graph, *w)) ++failures;
    }
  }
  CHECK(embeddings == 5573);
  CHECK(failures == 0);
  const auto fig = two_trees();
  const auto f = find_gap_embedding(fig.left, fig.right);
  REQUIRE(f);
  const auto d1 = encode_directed(fig.left), d2 = encode_directed(fig.right);
  const auto w = gap_embedding_to_immersion(fig.left, fig.right, *f, d1, d2);
  REQUIRE(w);
  CHECK(check_immersion(d1.graph, d2.graph, *w));
}

TEST_CASE("edge gap examples") {
  const auto f = two_trees();
  const auto e1 = edge_tree::of(f.left), e2 = edge_tree::of(f.right);
  std::vector<int> id(e2.size());
  std::vector<std::vector<int>> own(e2.size());
  for (std::size_t x = 0; x < e2.size(); ++x) {
    id[x] = static_cast<int>(x);
    if (x) own[x] = {static_cast<int>(x)};
  }
  CHECK(check_edge_gap_map(e2, e2, id, own));

  // tree vertices of the right tree: A* 0, B* 1, C* 2, D* 3, E* 4 (edge-tree index + 1)
  const std::vector<int> map{0, 2, 3, 5};
  const std::vector<std::vector<int>> paths{{}, {2, 1}, {3}, {5, 2}};
  CHECK(check_edge_gap_map(e1, e2, map, paths));
  CHECK_THROWS_AS(check_edge_gap_map(e1, e2, {1, 2, 3, 5}, paths), non_root_preserving);

  edge_tree two{{-1, 0, 1, 1}, {0, 0, 1, 1}};
  edge_tree thin{{-1, 0, 1, 2, 2}, {0, 0, 0, 1, 1}};
  CHECK_FALSE(check_edge_gap_map(two, thin, {0, 1, 3, 4}, {{}, {1}, {3, 2}, {4, 2}}));
  CHECK(check_edge_gap_map(two, thin, {0, 2, 3, 4}, {{}, {2, 1}, {3}, {4}}));
}

TEST_CASE("edge gap against immersion") {
  // a star with three zero-weight edges routes freely along a path in the
  // edge-gap reading, but the star does not immerse into a path
  labelled_tree star;
  const int p = star.add_root(0, L::plus());
  star.add_child(p, 0, L::of(cnf_w::zero()));
  star.add_child(p, 0, L::of(cnf_w::zero()));
  const auto path = chain({L::omega_dot(), L::omega_dot(), L::of(cnf_w::zero())});
  CHECK(find_edge_gap_map(edge_tree::of(star), edge_tree::of(path)));
  CHECK_FALSE(find_encoded_immersion(encode(star), encode(path), false));
  CHECK_FALSE(find_edge_gap_map(edge_tree::of(star, edge_labelling::multiplicity),
                                edge_tree::of(path, edge_labelling::multiplicity)));

  const auto& c = small_corpus();
  std::vector<std::uint32_t> nf;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (c.ordinal(i)) nf.push_back(i);
  }
  std::vector<encoded_graph> gs(c.size());
  std::vector<edge_tree> by_l(c.size()), by_count(c.size());
  for (auto i : nf) {
    const auto t = c.materialize(i);
    gs[i] = encode(t);
    by_l[i] = edge_tree::of(t);
    by_count[i] = edge_tree::of(t, edge_labelling::multiplicity);
  }
  std::size_t immersion_only = 0, edge_gap_only = 0, count_mismatch = 0;
  for (auto i : nf) {
    for (auto j : nf) {
      const bool imm = find_encoded_immersion(gs[i], gs[j], false).has_value();
      const bool eg = find_edge_gap_map(by_l[i], by_l[j]).has_value();
      immersion_only += imm && !eg;
      edge_gap_only += eg && !imm;
      count_mismatch += imm != find_edge_gap_map(by_count[i], by_count[j]).has_value();
    }
  }
  CHECK(immersion_only == 0);
  CHECK(edge_gap_only > 0);
  CHECK(count_mismatch == 0);
}

TEST_CASE("scan engines agree") {
  const auto& c = small_corpus();
  for (auto rel : {tree_relation::gap_embedding, tree_relation::directed_immersion, tree_relation::undirected_immersion}) {
    for (bool labels : {true, false}) {
      if (rel == tree_relation::gap_embedding && !labels) continue;
      INFO(to_string(rel) << " labels " << labels);
      scan_config cfg;
      cfg.relation = rel;
      cfg.respect_labels = labels;
      const auto a = scan_corpus(c, cfg);
      cfg.engine = scan_engine::pairwise;
      const auto b = scan_corpus(c, cfg);
      CHECK(a.summary == b.summary);
      CHECK(a.level_summary == b.level_summary);
      CHECK(a.digest == b.digest);
      CHECK(a.summary.checked == 321u * 321u);
      CHECK(b.summary.timeouts == 0);
    }
  }
}

TEST_CASE("scan counts on the small corpus") {
  const auto& c = small_corpus();
  scan_config cfg;
  cfg.relation = tree_relation::directed_immersion;
  const auto d = scan_corpus(c, cfg);
  CHECK(d.corpus_size == 480);
  CHECK(d.summary.related == 5573);
  CHECK(d.summary.violations == 20);
  CHECK(d.level_summary.violations == 0);
  cfg.relation = tree_relation::gap_embedding;
  CHECK(scan_corpus(c, cfg).summary.violations == 20);

  // single leaves only
  const tree_corpus<cnf_w> leaves(tree_bounds<cnf_w>{1, {cnf_w::bottom(), cnf_w::zero(), cnf_w::omega()}, 1});
  cfg.relation = tree_relation::directed_immersion;
  CHECK(scan_corpus(leaves, cfg).summary.violations == 0);
}

TEST_CASE("scan results do not depend on threads, and sampling is seeded") {
  const auto& c = small_corpus();
  scan_config cfg;
  const auto one = scan_corpus(c, cfg);
  cfg.jobs = 3;
  const auto three = scan_corpus(c, cfg);
  CHECK(one.digest == three.digest);
  CHECK(one.summary == three.summary);
  std::ostringstream a, b;
  write_scan_json(a, one, c, {});
  write_scan_json(b, three, c, {});
  CHECK(a.str() == b.str());

  cfg.sample = 40;
  cfg.seed = 5;
  const auto s1 = scan_corpus(c, cfg);
  cfg.jobs = 1;
  const auto s2 = scan_corpus(c, cfg);
  CHECK(s1.targets.size() == 40);
  CHECK(s1.targets == s2.targets);
  CHECK(s1.digest == s2.digest);
  cfg.seed = 6;
  CHECK(scan_corpus(c, cfg).targets != s1.targets);
}

TEST_CASE("scan reports") {
  const tree_corpus<cnf_w> c(tree_bounds<cnf_w>{2, {cnf_w::bottom(), cnf_w::zero()}, 1});
  scan_config cfg;
  cfg.relation = tree_relation::directed_immersion;
  const auto rep = scan_corpus(c, cfg);
  std::ostringstream js;
  write_scan_json(js, rep, c, {});
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j.at("directed") == true);
  CHECK(j.at("summary").at("checked") == rep.summary.checked);
  CHECK(j.at("pairs").size() == rep.summary.checked);
  CHECK(j.at("bounds").at("max_vertices") == 2);
  CHECK(j.at("config").at("seed") == 0);
  std::size_t yes = 0;
  for (const auto& p : j.at("pairs")) {
    if (p.at("immersion") == "yes") {
      ++yes;
      CHECK(p.contains("comparison"));
    } else {
      CHECK_FALSE(p.contains("comparison"));
    }
  }
  CHECK(yes == rep.summary.related);

  std::ostringstream csv;
  write_scan_csv(csv, rep, c, {});
  std::size_t lines = 0, comments = 0;
  std::istringstream in(csv.str());
  for (std::string line; std::getline(in, line);) {
    ++lines;
    comments += line.starts_with("#");
  }
  CHECK(lines - comments == rep.summary.checked + 1);

  report_options small;
  small.max_rows = 3;
  std::ostringstream sink;
  CHECK_THROWS_AS(write_scan_json(sink, rep, c, small), bound_exceeded);
  cfg.keep = row_filter::violations;
  const auto lean = scan_corpus(c, cfg);
  CHECK(lean.summary == rep.summary);
  CHECK_THROWS_AS(write_scan_json(sink, lean, c, {}), precondition_error);
  report_options none;
  none.pairs = pair_listing::none;
  std::ostringstream ok;
  write_scan_json(ok, lean, c, none);
  CHECK(nlohmann::json::parse(ok.str()).at("pairs").empty());
}

TEST_CASE("two-tree example pair as a scan row") {
  const auto f = two_trees();
  const auto g1 = encode(f.left), g2 = encode(f.right);
  const bool related = find_encoded_immersion(g1, g2).has_value();
  const auto cmp = compare(assign_ordinal_graph(g1), assign_ordinal_graph(g2));
  const scan_pair row{0, 1, related ? verdict::yes : verdict::no, cmp};
  CHECK(row.related == verdict::yes);
  CHECK(std::string(to_string(*row.comparison)) == "less");
  CHECK_FALSE(row.violation());
}
