#pragma once

#include <string>

#include "ordgraph/ord/term.hpp"
#include "ordgraph/trees/labelled_tree.hpp"

namespace ordgraph {

/// One step of the ordinal assignment: the value at a vertex with label
/// `lq`, tree label `l`, given the ordinals of its children's subtrees.
/// Children of a plus vertex may come in any order.
template <w_order W>
basic_ord<W> assign_step(const q_label<W>& lq, unsigned l,
                         const std::vector<basic_ord<W>>& kids) {
  using term = basic_ord<W>;
  switch (lq.sym) {
    case symbol::w:
      if (kids.empty()) return term::psi_w(l, lq.w);
      if (kids.size() == 1 && !lq.w.is_bottom()) return term::psi(l, term::bar(lq.w, kids[0]));
      break;
    case symbol::plus:
      if (kids.size() == 2) {
        const bool swap = compare(kids[0], kids[1]) == std::strong_ordering::less;
        return add(kids[swap ? 1 : 0], kids[swap ? 0 : 1]);
      }
      break;
    case symbol::omega_dot:
      if (kids.size() == 1) return term::omega_pow(kids[0]);
      break;
    case symbol::psi_sym:
      if (kids.size() == 1) return term::psi(l, kids[0]);
      break;
  }
  throw not_assignable("label " + lq.str() + " with " + std::to_string(kids.size()) +
                       " successor(s)");
}

/// o(T^v). Throws not_assignable when a vertex breaks the arity discipline
/// and not_normal_form when a collapsed argument is not a normal form.
template <w_order W>
basic_ord<W> assign_ordinal(const basic_labelled_tree<W>& t, int v) {
  std::vector<basic_ord<W>> kids;
  for (int c : t.children(v)) kids.push_back(assign_ordinal(t, c));
  return assign_step(t.lq(v), t.l(v), kids);
}

/// o(T).
template <w_order W>
basic_ord<W> assign_ordinal(const basic_labelled_tree<W>& t) {
  if (t.empty()) throw not_assignable("empty tree");
  return assign_ordinal(t, t.root());
}

}  // namespace ordgraph
