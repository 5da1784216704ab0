#include <catch_amalgamated.hpp>

#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/graph/search.hpp"
#include "ordgraph/graph/treewidth.hpp"
#include "ordgraph/io/json.hpp"
#include "ordgraph/ord/text.hpp"

using namespace ordgraph;
using nlohmann::json;

namespace {

std::string data(const char* name) { return std::string(ORDGRAPH_TEST_DATA) + "/" + name; }
std::string sample(const char* name) { return std::string(ORDGRAPH_TEST_DATA) + "/../../samples/" + name; }

}  // namespace

TEST_CASE("quasi-order documents") {
  const auto q = io::quasi_order_from_json(io::read_json_file(sample("chain3.json")));
  CHECK(q.size() == 3);
  CHECK(q.leq(0, 2));
  CHECK_FALSE(q.leq(2, 0));
  const auto back = io::quasi_order_from_json(io::to_json(q));
  CHECK(back.names() == q.names());
  CHECK(back.canonical_code() == q.canonical_code());
  CHECK_THROWS_AS(io::quasi_order_from_json(io::read_json_file(data("not_transitive.json"))), wqo::invalid_quasi_order);
  CHECK_THROWS_AS(io::quasi_order_from_json(json{{"elements", {"a"}}}), format_error);
  CHECK_THROWS_AS(io::quasi_order_from_json(json{{"elements", "a"}, {"leq", {{true}}}}), format_error);
}

TEST_CASE("tree documents") {
  const auto t = io::tree_from_json(io::read_json_file(sample("two_trees/right_tree.json")));
  CHECK(t.size() == 5);
  CHECK(render(assign_ordinal(t)) == "psi(2, bar(eps0)) + psi(1, bar(0)) + psi(0, bar(w^(1 + 1)))");
  const auto back = io::tree_from_json(io::to_json(t));
  CHECK(canonical_form(back) == canonical_form(t));
  CHECK(back.name(back.root()) == "A*");

  const auto doc = [](const char* text) { return io::tree_from_json(io::parse_json(text)); };
  CHECK_THROWS_AS(doc(R"({"vertices": []})"), format_error);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "lq": "0"}]})"), format_error);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "l": -1, "lq": "0"}]})"), precondition_error);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "l": 0, "lq": "zz"}]})"), syntax_error);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "parent": "b", "l": 0, "lq": "0"}]})"), foreign_element);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "parent": "b", "l": 0, "lq": "0"},
                                       {"id": "b", "parent": "a", "l": 0, "lq": "0"}]})"),
                  precondition_error);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "l": 0, "lq": "0"}, {"id": "b", "l": 0, "lq": "0"}]})"),
                  precondition_error);
  CHECK_THROWS_AS(doc(R"({"vertices": [{"id": "a", "l": 0, "lq": "0"}, {"id": "a", "parent": "a", "l": 0, "lq": "0"}]})"),
                  precondition_error);
  const auto numeric = doc(R"({"vertices": [{"id": 1, "l": 0, "lq": "w"}]})");
  CHECK(numeric.name(0) == "1");
}

TEST_CASE("graph documents share one label order") {
  const auto docs = io::graphs_from_json({io::read_json_file(sample("two_trees/left_graph.json")),
                                          io::read_json_file(sample("two_trees/right_graph.json"))});
  REQUIRE(docs.size() == 2);
  REQUIRE(docs[1].labels);
  const auto& q = *docs[1].labels;
  const auto& g1 = docs[0].graph;
  const auto& g2 = docs[1].graph;
  CHECK(g2.num_edges() == 12);
  CHECK(q.leq(*g1.vertex_label(*g1.find_vertex("D")), *g2.vertex_label(*g2.find_vertex("E*"))));
  const auto w = io::witness_from_json(io::read_json_file(sample("two_trees/immersion.json")), g1, g2);
  CHECK(check_immersion(g1, g2, w, &q));
  const auto found = find_immersion(g1, g2, {true, &q, {}, {}});
  REQUIRE(found);
  CHECK(check_immersion(g1, g2, io::witness_from_json(io::to_json(*found, g1, g2), g1, g2), &q));
}

TEST_CASE("labels without an order form an antichain") {
  const auto d = io::graph_from_json(io::parse_json(
      R"({"vertices": [{"id": "a", "label": "x"}, {"id": "b", "label": "y"}], "edges": [{"u": "a", "v": "b"}]})"));
  REQUIRE(d.labels);
  CHECK(d.labels->size() == 2);
  CHECK_FALSE(d.labels->leq(0, 1));
  CHECK(d.graph.edge_id(0) == "e0");
  const auto j = io::to_json(d.graph, &*d.labels);
  CHECK(j.at("vertices")[0].at("label") == "x");
  CHECK(io::graph_from_json(j).graph.num_edges() == 1);
}

TEST_CASE("graph document errors") {
  CHECK_THROWS_AS(io::graph_from_json(io::read_json_file(data("bad_edge.json"))), foreign_element);
  CHECK_THROWS_AS(io::read_json_file(data("not_json.txt")), format_error);
  CHECK_THROWS_AS(io::read_json_file(data("missing.json")), precondition_error);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"vertices": [{"id": "a"}, {"id": "a"}]})")), precondition_error);
  CHECK_THROWS_AS(io::graph_from_json(io::parse_json(R"({"vertices": [{"id": true}]})")), format_error);
}

TEST_CASE("witness document errors") {
  const auto c4 = io::graph_from_json(io::read_json_file(sample("c4.json"))).graph;
  const auto k3 = io::graph_from_json(io::read_json_file(sample("k3.json"))).graph;
  const auto w = io::witness_from_json(io::read_json_file(sample("c4_to_k3.json")), k3, c4);
  CHECK(w.kind == expansion_kind::collapse);
  CHECK(check_collapse(c4, k3, w));
  CHECK_THROWS_AS(io::witness_from_json(json{{"kind", "bogus"}}, k3, c4), format_error);
  CHECK_THROWS_AS(io::witness_from_json(json{{"kind", "minor"}, {"branch_sets", {{"a", {"9"}}}}, {"edge_map", json::object()}}, k3, c4),
                  foreign_element);
  CHECK_THROWS_AS(io::witness_from_json(json{{"kind", "minor"}, {"branch_sets", {{"q", {"0"}}}}, {"edge_map", json::object()}}, k3, c4),
                  foreign_element);
  CHECK_THROWS_AS(io::witness_from_json(json{{"kind", "immersion"}}, k3, c4), format_error);
}

TEST_CASE("decompositions as json") {
  const auto k4 = io::graph_from_json(io::read_json_file(sample("k4.json"))).graph;
  const auto d = optimal_tree_decomposition(k4);
  const auto j = io::to_json(d, k4);
  CHECK(j.at("width") == 3);
  CHECK(j.at("bags").size() >= 1);
}

TEST_CASE("encodings as graph documents") {
  const auto t = io::tree_from_json(io::read_json_file(sample("two_trees/left_tree.json")));
  auto g = encode(t);
  const auto space = label_space<cnf_w>::covering({&g});
  space.bind(g);
  const auto j = io::to_json(g.graph, &space.order());
  const auto back = io::graph_from_json(j);
  CHECK(back.graph.num_edges() == 5);
  CHECK(back.labels->names() == space.order().names());
}

TEST_CASE("error categories") {
  CHECK(format_error("x").category() == error::kind::syntax);
  CHECK(syntax_error(0, {"a"}).category() == error::kind::syntax);
  CHECK(precondition_error("x").category() == error::kind::precondition);
  CHECK(bound_exceeded("x").category() == error::kind::budget);
}
