#include <catch_amalgamated.hpp>

#include "ordgraph/wqo/suite.hpp"

using namespace ordgraph;
using namespace ordgraph::wqo;

namespace {

quasi_order chain2() { return quasi_order::chain(2); }
quasi_order anti2() { return quasi_order::antichain(2); }

std::vector<quasi_order> small_orders() {
  std::vector<quasi_order> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& q : enumerate_quasi_orders(n)) out.push_back(std::move(q));
  }
  return out;
}

std::vector<subset> all_subsets(const quasi_order& x) {
  std::vector<subset> out;
  detail::for_each_subset(x.all(), [&](subset s) { out.push_back(s); });
  return out;
}

}  // namespace

TEST_CASE("construction checks the axioms") {
  CHECK_THROWS_AS(quasi_order({"a", "b"}, {{false, true}, {false, true}}), invalid_quasi_order);
  CHECK_THROWS_AS(quasi_order({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
                  invalid_quasi_order);
  try {
    quasi_order({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}});
  } catch (const invalid_quasi_order& e) {
    CHECK(std::string(e.what()).find("a <= b <= c") != std::string::npos);
  }
}

TEST_CASE("quasi-order counts up to isomorphism") {
  CHECK(enumerate_quasi_orders(1).size() == 1);
  CHECK(enumerate_quasi_orders(2).size() == 3);
  CHECK(enumerate_quasi_orders(3).size() == 9);
  CHECK(enumerate_quasi_orders(4).size() == 33);
}

TEST_CASE("smyth order examples") {
  const auto c = chain2();
  const subset a = c.make_subset({"a"}), b = c.make_subset({"b"});
  CHECK(smyth_leq(c, a, 0));
  CHECK_FALSE(smyth_leq(c, 0, a));
  CHECK(smyth_leq(c, a, b));
  CHECK_FALSE(smyth_leq(anti2(), a, b));
  CHECK_THROWS_AS(smyth_leq(c, subset{4}, a), foreign_element);
}

TEST_CASE("cut examples") {
  const auto c = chain2();
  CHECK(cut_set(c, 0) == c.all());
  CHECK(cut_set(c, c.make_subset({"b"})) == c.make_subset({"a"}));
  CHECK(cut_set(c, c.make_subset({"a"})) == 0);
}

TEST_CASE("initial ideals and prec1") {
  const auto c = chain2();
  CHECK_FALSE(prec1(c, c.all()));
  CHECK(prec1(c, c.make_subset({"a"})));
  CHECK_FALSE(prec1(c, c.make_subset({"b"})));
  const auto an = anti2();
  CHECK(is_initial_ideal(an, an.make_subset({"a"})));
  CHECK_FALSE(prec1(an, an.all()));
  CHECK_FALSE(is_initial_ideal(c, c.make_subset({"b"})));
}

TEST_CASE("less2 examples") {
  const auto c = chain2();
  const subset a = c.make_subset({"a"}), b = c.make_subset({"b"});
  CHECK_FALSE(less2(c, {a}, {a}));
  CHECK(less2(c, {b, b}, {0}));
  CHECK(less2(c, {a}, {b}));
  CHECK_THROWS_AS(less2(c, {}, {a}), precondition_error);
}

TEST_CASE("refinement") {
  const auto c = quasi_order::chain(3);
  const subset ab = c.make_subset({"a", "b"}), a = c.make_subset({"a"});
  CHECK(refinement(c, {a}, {ab}));
  CHECK_FALSE(refinement(c, {ab}, {ab}));
  CHECK(refinement(c, {a, a}, {ab}));
  CHECK(refinement(c, {a}, {ab}, refine_mode::cut));
  CHECK_FALSE(refinement(c, {a}, {a, ab}));
}

TEST_CASE("acyclicity examples") {
  const auto an = anti2();
  CHECK(strict_part_acyclic(all_subsets(an), [&](subset p, subset q) { return smyth_lt(an, p, q); }));
  const auto c = chain2();
  const auto seqs = subset_sequences(c, 2);
  CHECK(strict_part_acyclic(seqs, [&](const subset_seq& p, const subset_seq& q) { return less2(c, p, q); }));
  const std::vector<int> two{0, 1};
  CHECK_FALSE(strict_part_acyclic(two, [](int p, int q) { return p != q; }));
}

TEST_CASE("smyth order is a preorder with the empty set on top") {
  for (const auto& x : small_orders()) {
    const auto subs = all_subsets(x);
    for (subset p : subs) {
      CHECK(smyth_leq(x, p, p));
      CHECK(smyth_leq(x, p, 0));
      if (p != 0) CHECK(smyth_lt(x, p, 0));
      for (subset q : subs) {
        if (!smyth_leq(x, p, q)) continue;
        for (subset r : subs) {
          if (smyth_leq(x, q, r)) CHECK(smyth_leq(x, p, r));
        }
      }
    }
  }
}

TEST_CASE("prec1 implies initial ideal") {
  for (const auto& x : small_orders()) {
    for (subset p : all_subsets(x)) {
      if (prec1(x, p)) CHECK(is_initial_ideal(x, p));
    }
  }
}

TEST_CASE("suite holds on all orders with at most three elements") {
  for (const auto& x : small_orders()) {
    for (const auto& r : run_suite(x, 2)) {
      INFO(r.name << " on " << x.size() << " elements: " << r.detail);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("correspondence on the named examples") {
  CHECK(lemma1_correspondence(quasi_order::chain(1)));
  CHECK(lemma1_correspondence(chain2()));
  CHECK(lemma1_correspondence(anti2()));
}
