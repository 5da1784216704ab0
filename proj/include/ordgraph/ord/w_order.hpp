#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ordgraph/detail/cursor.hpp"
#include "ordgraph/error.hpp"

namespace ordgraph {

/// A well-order W with a distinguished bottom element w0 sitting below the
/// order's own zero. The notation system is parameterised over W.
template <class W>
concept w_order = std::copy_constructible<W> &&
    requires(const W& a, const W& b, std::string_view text, std::size_t& pos) {
      { W::bottom() } -> std::same_as<W>;
      { a.is_bottom() } -> std::convertible_to<bool>;
      { a <=> b } -> std::same_as<std::strong_ordering>;
      { a == b } -> std::convertible_to<bool>;
      { a.str() } -> std::convertible_to<std::string>;
      { W::parse(text, pos) } -> std::same_as<W>;
    };

/// Default W: Cantor normal forms below epsilon_0, a top atom `eps0`, and
/// the bottom element.
///
/// A CNF value is a non-increasing list of exponents, each itself a CNF
/// value; `w^(a) + w^(b)` with a >= b. Multiplicities are repeated summands.
/// Text form: "0", "1" (= w^(0)), "w^(t)", sums with "+", and "eps0".
class cnf_w {
 public:
  cnf_w() = default;  // zero

  static cnf_w bottom() { return cnf_w(tag::bottom); }
  static cnf_w zero() { return {}; }
  static cnf_w eps0() { return cnf_w(tag::eps0); }
  static cnf_w one() { return omega_pow(zero()); }
  static cnf_w omega() { return omega_pow(one()); }

  static cnf_w omega_pow(const cnf_w& e) {
    if (e.tag_ == tag::bottom) throw precondition_error("w^(bot) is undefined");
    if (e.tag_ == tag::eps0) throw precondition_error("w^(eps0) is eps0; write eps0");
    cnf_w r;
    r.exps_.push_back(e);
    return r;
  }

  static cnf_w from_nat(unsigned n) {
    cnf_w r;
    r.exps_.assign(n, zero());
    return r;
  }

  /// Ordinal sum with absorption (a + w^e drops summands of a below w^e).
  friend cnf_w operator+(const cnf_w& a, const cnf_w& b) {
    if (a.tag_ != tag::cnf || b.tag_ != tag::cnf) {
      throw precondition_error("sums may only combine CNF terms below eps0");
    }
    if (b.exps_.empty()) return a;
    cnf_w r;
    for (const auto& e : a.exps_) {
      if (e < b.exps_.front()) break;
      r.exps_.push_back(e);
    }
    r.exps_.insert(r.exps_.end(), b.exps_.begin(), b.exps_.end());
    return r;
  }

  [[nodiscard]] bool is_bottom() const noexcept { return tag_ == tag::bottom; }
  [[nodiscard]] bool is_eps0() const noexcept { return tag_ == tag::eps0; }
  [[nodiscard]] bool is_zero() const noexcept { return tag_ == tag::cnf && exps_.empty(); }
  [[nodiscard]] const std::vector<cnf_w>& exponents() const noexcept { return exps_; }

  friend std::strong_ordering operator<=>(const cnf_w& a, const cnf_w& b) {
    if (a.tag_ != b.tag_) {
      return rank(a.tag_) <=> rank(b.tag_);
    }
    if (a.tag_ != tag::cnf) return std::strong_ordering::equal;
    const std::size_t n = std::min(a.exps_.size(), b.exps_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    }
    return a.exps_.size() <=> b.exps_.size();
  }
  friend bool operator==(const cnf_w& a, const cnf_w& b) { return (a <=> b) == 0; }

  [[nodiscard]] std::string str() const {
    switch (tag_) {
      case tag::bottom: return "bot";
      case tag::eps0: return "eps0";
      case tag::cnf: break;
    }
    if (exps_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (i) s += " + ";
      s += exps_[i].is_zero() ? std::string("1") : "w^(" + exps_[i].str() + ")";
    }
    return s;
  }

  /// Parses a wterm; a bare "w" stands for w^(1). Summands out of CNF order are added with absorption,
  /// so "1 + w^(1)" reads as w^(1).
  static cnf_w parse(std::string_view text, std::size_t& pos) {
    detail::cursor in(text, pos);
    return parse_term(in);
  }

  static cnf_w parse(std::string_view text) {
    std::size_t pos = 0;
    cnf_w w = parse(text, pos);
    detail::cursor in(text, pos);
    if (!in.at_end()) in.fail({"end of input"});
    return w;
  }

 private:
  enum class tag : unsigned char { bottom, cnf, eps0 };

  explicit cnf_w(tag t) : tag_(t) {}

  static int rank(tag t) {
    switch (t) {
      case tag::bottom: return 0;
      case tag::cnf: return 1;
      case tag::eps0: return 2;
    }
    return 0;
  }

  static cnf_w parse_term(detail::cursor& in) {
    if (in.accept("eps0")) return eps0();
    if (in.peek("0")) {
      in.accept("0");
      return zero();
    }
    cnf_w acc = parse_atom(in);
    while (in.accept("+")) {
      if (in.peek("eps0")) in.fail({"'w^('", "'1'"});
      acc = acc + parse_atom(in);
    }
    return acc;
  }

  static cnf_w parse_atom(detail::cursor& in) {
    if (in.accept("1")) return one();
    if (in.accept("w^(")) {
      std::size_t at = in.position();
      cnf_w e = parse_term(in);
      if (e.is_eps0()) throw syntax_error(at, {"CNF exponent below eps0"}, "w^(eps0) = eps0");
      in.expect(")");
      return omega_pow(e);
    }
    if (in.accept("w")) return omega_pow(one());
    in.fail({"'eps0'", "'0'", "'1'", "'w^('", "'w'"});
  }

  tag tag_ = tag::cnf;
  std::vector<cnf_w> exps_;
};

static_assert(w_order<cnf_w>);

/// A finite W = {bot < 0 < 1 < 2 < ...}; used to exercise the W parameter.
class nat_w {
 public:
  nat_w() = default;
  explicit nat_w(unsigned v) : v_(static_cast<long>(v)) {}

  static nat_w bottom() {
    nat_w r;
    r.v_ = -1;
    return r;
  }
  [[nodiscard]] bool is_bottom() const noexcept { return v_ < 0; }
  [[nodiscard]] long value() const noexcept { return v_; }

  friend std::strong_ordering operator<=>(const nat_w&, const nat_w&) = default;
  friend bool operator==(const nat_w&, const nat_w&) = default;

  [[nodiscard]] std::string str() const { return is_bottom() ? "bot" : std::to_string(v_); }

  static nat_w parse(std::string_view text, std::size_t& pos) {
    detail::cursor in(text, pos);
    return nat_w(static_cast<unsigned>(in.natural()));
  }

 private:
  long v_ = 0;
};

static_assert(w_order<nat_w>);

}  // namespace ordgraph
