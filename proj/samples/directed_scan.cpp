// Scans a small tree corpus for pairs whose encodings immerse while the
// ordinals decrease, once with directed and once with undirected encodings.
#include <cstdlib>
#include <iostream>

#include "ordgraph/encoding/scan.hpp"
#include "ordgraph/ord/text.hpp"

using namespace ordgraph;

int main(int argc, char** argv) {
  tree_bounds<cnf_w> b;
  b.max_vertices = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3;
  b.pool = {cnf_w::bottom(), cnf_w::zero(), cnf_w::omega()};
  b.max_l = 1;
  const tree_corpus<cnf_w> corpus(b);

  for (auto rel : {tree_relation::directed_immersion, tree_relation::undirected_immersion}) {
    scan_config cfg;
    cfg.relation = rel;
    cfg.keep = row_filter::violations;
    const auto rep = scan_corpus(corpus, cfg);
    std::cout << to_string(rel) << ": " << rep.summary.checked << " pairs, " << rep.summary.related
              << " immersions, " << rep.summary.violations << " violations\n";
    if (!rep.rows.empty()) {
      const auto& p = rep.rows.front();
      std::cout << "  first: " << canonical_form(corpus.materialize(p.t1)) << " -> "
                << canonical_form(corpus.materialize(p.t2)) << "\n"
                << "         " << render(*corpus.ordinal(p.t1)) << " > " << render(*corpus.ordinal(p.t2)) << "\n";
    }
  }
}
