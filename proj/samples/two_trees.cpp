// The two trees of the running example: their ordinals, the encodings, and
// the immersion with its vertex map.
#include <iostream>

#include "ordgraph/encoding/encode.hpp"
#include "ordgraph/ord/text.hpp"

using namespace ordgraph;
using label = q_label<cnf_w>;

int main() {
  labelled_tree left, right;
  const int b = left.add_root(1, label::plus(), "B");
  left.add_child(b, 1, label::of(cnf_w::eps0()), "C");
  left.add_child(b, 0, label::of(cnf_w::omega()), "D");

  const int a = right.add_root(2, label::plus(), "A*");
  const int bs = right.add_child(a, 2, label::plus(), "B*");
  right.add_child(bs, 2, label::of(cnf_w::eps0()), "C*");
  right.add_child(bs, 1, label::of(cnf_w::zero()), "D*");
  right.add_child(a, 0, label::of(cnf_w::omega_pow(cnf_w::from_nat(2))), "E*");

  const auto g1 = encode(left);
  const auto g2 = encode(right);
  const auto o1 = assign_ordinal_graph(g1);
  const auto o2 = assign_ordinal_graph(g2);
  std::cout << "o(left)  = " << render(o1) << "\n";
  std::cout << "o(right) = " << render(o2) << "\n";
  std::cout << "o(left) < o(right): " << (compare(o1, o2) < 0 ? "yes" : "no") << "\n";

  const auto w = find_encoded_immersion(g1, g2);
  if (!w) {
    std::cout << "no immersion\n";
    return 1;
  }
  std::cout << "immersion:";
  for (std::size_t v = 0; v < w->vertex_map.size(); ++v) {
    std::cout << " " << g1.graph.vertex_id(static_cast<int>(v)) << "->" << g2.graph.vertex_id(w->vertex_map[v]);
  }
  std::cout << "\norder preserving: " << (preserves_tree_order(g1, g2, w->vertex_map) ? "yes" : "no") << "\n";

  const auto sub = graph_subtree(g2, g2.tree_vertex[static_cast<std::size_t>(bs)]);
  std::cout << "G^B*: " << sub.graph.num_edges() << " edges, o = " << render(assign_ordinal_graph(sub)) << "\n";
}
