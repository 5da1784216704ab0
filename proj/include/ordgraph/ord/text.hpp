#pragma once

#include <string>
#include <string_view>

#include "ordgraph/detail/cursor.hpp"
#include "ordgraph/ord/term.hpp"

namespace ordgraph {

// Term grammar:
//   term  := "0" | atom { "+" atom }
//   atom  := "w^(" term ")" | "Om(" nat ")" | "psi(" nat "," arg ")"
//   arg   := term | "bar(" wterm ")" [ "+" term ] | "bot"
// Whitespace is insignificant on input. Rendering puts single spaces around
// "+" and after the comma of psi.

template <w_order W>
std::string render(const basic_ord<W>& t) {
  switch (t.kind()) {
    case ord_kind::zero: return "0";
    case ord_kind::sum: {
      std::string s;
      for (const auto& p : t.children()) {
        if (!s.empty()) s += " + ";
        s += render(p);
      }
      return s;
    }
    case ord_kind::wpow: return "w^(" + render(t.child()) + ")";
    case ord_kind::omega: return "Om(" + std::to_string(t.index()) + ")";
    case ord_kind::psi: return "psi(" + std::to_string(t.index()) + ", " + render(t.child()) + ")";
    case ord_kind::bar: {
      std::string s = "bar(" + t.bar_w().str() + ")";
      if (!t.child().is_zero()) s += " + " + render(t.child());
      return s;
    }
  }
  return {};
}

namespace detail {

template <w_order W>
class term_parser {
 public:
  using term = basic_ord<W>;

  term_parser(std::string_view text, std::size_t& pos) : text_(text), pos_(pos), in_(text, pos) {}

  term parse_term() {
    if (in_.peek("0")) {
      in_.accept("0");
      return term::zero();
    }
    std::vector<term> parts{parse_atom()};
    while (in_.accept("+")) parts.push_back(parse_atom());
    if (parts.size() == 1) return parts.front();
    return term::raw_sum(std::move(parts));
  }

  void finish() {
    if (!in_.at_end()) in_.fail({"'+'", "end of input"});
  }

 private:
  term parse_atom() {
    if (in_.accept("w^(")) {
      term e = parse_term();
      in_.expect(")");
      return term::raw_wpow(e);
    }
    if (in_.accept("Om(")) {
      const auto n = parse_index();
      if (n == 0) in_.fail({"positive index"});
      in_.expect(")");
      return term::omega(n);
    }
    if (in_.accept("psi(")) {
      const auto n = parse_index();
      in_.expect(",");
      if (in_.accept("bot")) {
        in_.expect(")");
        return term::psi_bottom(n);
      }
      term a = parse_arg();
      in_.expect(")");
      return term::raw_psi(n, a);
    }
    in_.fail({"'0'", "'w^('", "'Om('", "'psi('"});
  }

  term parse_arg() {
    if (in_.accept("bar(")) {
      W w = W::parse(text_, pos_);
      if (w.is_bottom()) in_.fail({"W element above bot"});
      in_.expect(")");
      term tail = in_.accept("+") ? parse_term() : term::zero();
      return term::raw_bar(w, tail);
    }
    return parse_term();
  }

  unsigned parse_index() { return static_cast<unsigned>(in_.natural()); }

  std::string_view text_;
  std::size_t& pos_;
  cursor in_;
};

}  // namespace detail

/// Parses a term. With `strict`, a grammatical but non-normal term raises
/// not_normal_form; otherwise the raw structure is returned. psi(n, bot)
/// is always desugared to Om(n) (1 for n = 0).
template <w_order W = cnf_w>
basic_ord<W> parse_ord(std::string_view text, bool strict = false) {
  std::size_t pos = 0;
  detail::term_parser<W> p(text, pos);
  basic_ord<W> t = p.parse_term();
  p.finish();
  if (strict) t.require_normal();
  return t;
}

}  // namespace ordgraph
