// Ordinal terms, a labelled tree and its multigraph encoding.
#include <iostream>

#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/ord/text.hpp"

using namespace ordgraph;

int main() {
  const auto a = parse_ord<cnf_w>("psi(0, bar(w^(w^(1))))", true);
  const auto b = parse_ord<cnf_w>("psi(0, bar(eps0))", true);
  std::cout << render(a) << (compare(a, b) < 0 ? " < " : " >= ") << render(b) << "\n";

  using label = q_label<cnf_w>;
  labelled_tree t;
  const int root = t.add_root(0, label::plus(), "p");
  t.add_child(root, 1, label::of(cnf_w::zero()), "x");
  t.add_child(root, 0, label::of(cnf_w::bottom()), "y");
  std::cout << "tree " << canonical_form(t) << "\n";
  std::cout << "o(T) = " << render(assign_ordinal(t)) << "\n";

  const auto g = encode(t);
  std::cout << "encoding: " << g.graph.num_vertices() << " vertices, " << g.graph.num_edges() << " edges\n";
  std::cout << "o(G) = " << render(assign_ordinal_graph(g)) << "\n";

  // the tree with its zero leaf lifted to l = 2 contains the original
  labelled_tree u;
  const int r2 = u.add_root(0, label::plus(), "p");
  u.add_child(r2, 2, label::of(cnf_w::zero()), "x");
  u.add_child(r2, 0, label::of(cnf_w::bottom()), "y");
  const auto h = encode(u);
  std::cout << "immersion into the heavier tree: " << (find_encoded_immersion(g, h) ? "yes" : "no") << "\n";
  std::cout << "o(G) <= o(H): " << (compare(assign_ordinal_graph(g), assign_ordinal_graph(h)) <= 0 ? "yes" : "no") << "\n";
}
