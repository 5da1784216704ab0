#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ordgraph/error.hpp"
#include "ordgraph/ord/w_order.hpp"

namespace ordgraph {

enum class ord_kind : unsigned char { zero, sum, wpow, omega, psi, bar };

/// A term of the relativised notation system over W.
///
/// Terms below Om_omega ("class 0") are built from 0, sums, w^(.), Om(n) and
/// psi(n, arg). A psi argument is either a class-0 term or a bar term
/// bar(w) + tail, standing for Om_omega * (1 + w) + tail. Bar terms are
/// values in their own right so that arguments compare uniformly, but they
/// never occur inside sums or exponents.
///
/// Values are immutable and share structure. The normal-form predicate is
/// evaluated once, at construction, and cached on the node.
template <w_order W>
class basic_ord {
 public:
  using w_type = W;

  basic_ord() : node_(zero_node()) {}

  // -- checked, normalising constructors ----------------------------------

  static basic_ord zero() { return {}; }
  static basic_ord one() { return make(ord_kind::wpow, 0, {zero()}); }

  static basic_ord omega(unsigned n) {
    if (n == 0) throw precondition_error("Om(n) requires n >= 1");
    return make(ord_kind::omega, n, {});
  }

  /// w^a. Om(n) and psi terms are fixed points and come back unchanged.
  static basic_ord omega_pow(const basic_ord& a) {
    a.require_normal();
    a.require_class0();
    if (a.kind() == ord_kind::omega || a.kind() == ord_kind::psi) return a;
    return make(ord_kind::wpow, 0, {a});
  }

  /// bar(w) + tail, with w above the bottom element.
  static basic_ord bar(const W& w, const basic_ord& tail = {}) {
    if (w.is_bottom()) throw precondition_error("bar(bot) is undefined");
    tail.require_normal();
    tail.require_class0();
    return make(ord_kind::bar, 0, {tail}, w);
  }

  /// psi_n(arg); throws not_normal_form when arg fails the G-set test.
  static basic_ord psi(unsigned n, const basic_ord& arg) {
    arg.require_normal();
    basic_ord r = make(ord_kind::psi, n, {arg});
    if (!r.is_normal_form()) {
      throw not_normal_form("psi(" + std::to_string(n) + ", ...): argument not in C_" +
                            std::to_string(n) + " of itself");
    }
    return r;
  }

  /// psi_n(w0) := Om(n); for n = 0 this is 1 (Om_0 := 1).
  static basic_ord psi_bottom(unsigned n) { return n == 0 ? one() : omega(n); }

  /// psi_n applied to w-bar + tail, treating w0 via psi_bottom. A non-zero
  /// tail on w0 has no meaning and is rejected.
  static basic_ord psi_w(unsigned n, const W& w, const basic_ord& tail = {}) {
    if (w.is_bottom()) {
      if (!tail.is_zero()) throw precondition_error("w0 + tail is undefined");
      return psi_bottom(n);
    }
    return psi(n, bar(w, tail));
  }

  /// Normal form of a + b; leading summands of a below the head of b are
  /// absorbed.
  friend basic_ord add(const basic_ord& a, const basic_ord& b) {
    a.require_normal();
    b.require_normal();
    a.require_class0();
    b.require_class0();
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const basic_ord head = b.summands().front();
    std::vector<basic_ord> parts;
    for (const auto& p : a.summands()) {
      if (compare_raw(p, head) == std::strong_ordering::less) break;
      parts.push_back(p);
    }
    if (parts.empty()) return b;
    for (const auto& p : b.summands()) parts.push_back(p);
    return make(ord_kind::sum, 0, std::move(parts));
  }

  // -- raw constructors (structure only; result may be non-normal) --------

  static basic_ord raw_sum(std::vector<basic_ord> parts) {
    if (parts.size() < 2) throw precondition_error("a sum needs at least two parts");
    return make(ord_kind::sum, 0, std::move(parts));
  }
  static basic_ord raw_wpow(const basic_ord& e) { return make(ord_kind::wpow, 0, {e}); }
  static basic_ord raw_psi(unsigned n, const basic_ord& arg) {
    return make(ord_kind::psi, n, {arg});
  }
  static basic_ord raw_bar(const W& w, const basic_ord& tail) {
    if (w.is_bottom()) throw precondition_error("bar(bot) is undefined");
    return make(ord_kind::bar, 0, {tail}, w);
  }

  // -- observers -----------------------------------------------------------

  [[nodiscard]] ord_kind kind() const noexcept { return node_->kind; }
  [[nodiscard]] bool is_zero() const noexcept { return kind() == ord_kind::zero; }
  /// Om / psi index.
  [[nodiscard]] unsigned index() const noexcept { return node_->index; }
  /// Sum parts, or {w-exponent}, {psi-argument}, {bar tail}.
  [[nodiscard]] const std::vector<basic_ord>& children() const noexcept { return node_->kids; }
  [[nodiscard]] const basic_ord& child() const noexcept { return node_->kids.front(); }
  [[nodiscard]] const W& bar_w() const noexcept { return node_->w; }
  [[nodiscard]] bool is_class0() const noexcept { return kind() != ord_kind::bar; }
  [[nodiscard]] bool is_normal_form() const noexcept { return node_->normal; }
  /// Number of constructor applications (0, Om, bar count one each).
  [[nodiscard]] std::size_t size() const noexcept { return node_->size; }
  [[nodiscard]] std::size_t hash() const noexcept { return node_->hash; }

  /// The summands: sum parts, the term itself if principal, empty for 0.
  [[nodiscard]] std::vector<basic_ord> summands() const {
    if (is_zero()) return {};
    if (kind() == ord_kind::sum) return children();
    return {*this};
  }

  /// Syntactic order on arbitrary terms. On normal forms this is the order
  /// of the denoted ordinals, and equal exactly on identical terms.
  friend std::strong_ordering compare_raw(const basic_ord& a, const basic_ord& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const bool abar = a.kind() == ord_kind::bar, bbar = b.kind() == ord_kind::bar;
    if (abar || bbar) {
      if (!(abar && bbar)) return abar ? std::strong_ordering::greater : std::strong_ordering::less;
      if (auto c = a.bar_w() <=> b.bar_w(); c != 0) return c;
      return compare_raw(a.child(), b.child());
    }
    if (a.is_zero() || b.is_zero()) {
      return static_cast<int>(!a.is_zero()) <=> static_cast<int>(!b.is_zero());
    }
    const bool asum = a.kind() == ord_kind::sum, bsum = b.kind() == ord_kind::sum;
    if (!asum && !bsum) return compare_principal(a, b);
    const std::size_t na = asum ? a.children().size() : 1;
    const std::size_t nb = bsum ? b.children().size() : 1;
    for (std::size_t i = 0; i < std::min(na, nb); ++i) {
      const basic_ord& pa = asum ? a.children()[i] : a;
      const basic_ord& pb = bsum ? b.children()[i] : b;
      if (auto c = compare_principal(pa, pb); c != 0) return c;
    }
    return na <=> nb;
  }

  /// Checked comparison: both sides must be normal forms.
  friend std::strong_ordering compare(const basic_ord& a, const basic_ord& b) {
    a.require_normal();
    b.require_normal();
    return compare_raw(a, b);
  }

  friend bool operator==(const basic_ord& a, const basic_ord& b) {
    return compare_raw(a, b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const basic_ord& a, const basic_ord& b) {
    return compare(a, b);
  }

  /// G_n(t): the psi-arguments that must lie below the argument for
  /// psi_n(t) to be in normal form.
  void collect_g(unsigned n, std::vector<basic_ord>& out) const {
    switch (kind()) {
      case ord_kind::zero:
      case ord_kind::omega: return;
      case ord_kind::sum:
        for (const auto& p : children()) p.collect_g(n, out);
        return;
      case ord_kind::wpow:
      case ord_kind::bar: child().collect_g(n, out); return;
      case ord_kind::psi:
        if (index() < n) return;
        out.push_back(child());
        child().collect_g(n, out);
        return;
    }
  }

  /// Reason the term fails the normal-form test, or empty.
  [[nodiscard]] std::string normal_form_violation() const {
    if (is_normal_form()) return {};
    return structural_violation(*this);
  }

  void require_normal() const {
    if (!is_normal_form()) throw not_normal_form(normal_form_violation());
  }
  void require_class0() const {
    if (!is_class0()) throw class_violation("bar term used as an ordinary summand");
  }

 private:
  struct node {
    ord_kind kind = ord_kind::zero;
    unsigned index = 0;
    std::vector<basic_ord> kids;
    W w{};
    bool normal = true;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

  explicit basic_ord(std::shared_ptr<const node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const node> zero_node() {
    static const auto z = std::make_shared<const node>();
    return z;
  }

  static basic_ord make(ord_kind k, unsigned index, std::vector<basic_ord> kids, W w = W{}) {
    auto n = std::make_shared<node>();
    n->kind = k;
    n->index = index;
    n->kids = std::move(kids);
    n->w = std::move(w);
    n->size = 1;
    std::size_t h = static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ULL + index;
    for (const auto& c : n->kids) {
      n->size += c.size();
      h = (h ^ c.hash()) * 0x100000001b3ULL + 0x7f4a7c15;
    }
    if (k == ord_kind::sum) n->size -= 1;  // k parts use k-1 additions
    if (k == ord_kind::bar) {
      h ^= std::hash<std::string>{}(n->w.str());
      if (n->kids.front().is_zero()) n->size -= 1;  // bar(w) alone counts once
    }
    n->hash = h;
    basic_ord r(std::shared_ptr<const node>(std::move(n)));
    const_cast<node&>(*r.node_).normal = structural_violation(r).empty();
    return r;
  }

  static bool is_principal(const basic_ord& t) {
    return t.kind() == ord_kind::wpow || t.kind() == ord_kind::omega ||
           t.kind() == ord_kind::psi;
  }

  // Order of additively principal class-0 terms. Om(n) (n >= 1) and psi
  // terms are epsilon numbers, so w^e sits below such a P iff e < P; psi_n
  // lies strictly between Om(n) and Om(n+1).
  static std::strong_ordering compare_principal(const basic_ord& a, const basic_ord& b) {
    using so = std::strong_ordering;
    if (a.node_ == b.node_) return so::equal;
    const bool aw = a.kind() == ord_kind::wpow, bw = b.kind() == ord_kind::wpow;
    if (aw && bw) return compare_raw(a.child(), b.child());
    if (aw) return compare_raw(a.child(), b);
    if (bw) return compare_raw(a, b.child());
    const bool ao = a.kind() == ord_kind::omega, bo = b.kind() == ord_kind::omega;
    if (ao && bo) return a.index() <=> b.index();
    if (ao) return a.index() <= b.index() ? so::less : so::greater;
    if (bo) return b.index() <= a.index() ? so::greater : so::less;
    if (auto c = a.index() <=> b.index(); c != 0) return c;
    return compare_raw(a.child(), b.child());
  }

  static std::string structural_violation(const basic_ord& t) {
    using so = std::strong_ordering;
    for (const auto& c : t.children()) {
      if (!c.is_normal_form()) return c.normal_form_violation();
    }
    switch (t.kind()) {
      case ord_kind::zero: return {};
      case ord_kind::omega:
        return t.index() >= 1 ? std::string{} : "Om(0) is not a term";
      case ord_kind::sum:
        if (t.children().size() < 2) return "sum with fewer than two parts";
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          if (!is_principal(t.children()[i])) return "sum part is not additively principal";
          if (i && compare_raw(t.children()[i - 1], t.children()[i]) == so::less) {
            return "sum parts are not non-increasing";
          }
        }
        return {};
      case ord_kind::wpow: {
        const auto k = t.child().kind();
        if (k == ord_kind::omega || k == ord_kind::psi) {
          return "w^(P) with P a fixed point of w^(.)";
        }
        if (k == ord_kind::bar) return "w^(.) of a term above Om_omega";
        return {};
      }
      case ord_kind::bar:
        if (!t.child().is_class0()) return "bar tail above Om_omega";
        return {};
      case ord_kind::psi: {
        std::vector<basic_ord> g;
        t.child().collect_g(t.index(), g);
        for (const auto& x : g) {
          if (compare_raw(x, t.child()) != so::less) {
            return "psi_" + std::to_string(t.index()) +
                   ": argument has a collapsed subterm not below it";
          }
        }
        return {};
      }
    }
    return {};
  }

  std::shared_ptr<const node> node_;
};

using ord = basic_ord<cnf_w>;

template <w_order W>
struct basic_ord_hash {
  std::size_t operator()(const basic_ord<W>& t) const noexcept { return t.hash(); }
};

}  // namespace ordgraph
