#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordgraph/error.hpp"
#include "ordgraph/wqo/quasi_order.hpp"

namespace ordgraph {

/// A finite loop-free multigraph, directed or not. Vertices and edges are
/// dense indices with string ids; labels, when present, are element indices
/// of a quasi-order supplied by the caller.
class multigraph {
 public:
  using label = std::optional<std::size_t>;

  explicit multigraph(bool directed = false) : directed_(directed) {}

  int add_vertex(std::string id = {}, label lab = std::nullopt) {
    const int v = static_cast<int>(vid_.size());
    if (id.empty()) id = std::to_string(v);
    if (find_vertex(id)) throw precondition_error("duplicate vertex id " + id);
    vid_.push_back(std::move(id));
    vlabel_.push_back(lab);
    inc_.emplace_back();
    return v;
  }

  /// For directed graphs the edge runs from u to v.
  int add_edge(int u, int v, std::string id = {}, label lab = std::nullopt) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw precondition_error("loop at vertex " + vid_[static_cast<std::size_t>(u)]);
    const int e = static_cast<int>(ends_.size());
    if (id.empty()) id = "e" + std::to_string(e);
    if (find_edge(id)) throw precondition_error("duplicate edge id " + id);
    eid_.push_back(std::move(id));
    elabel_.push_back(lab);
    ends_.emplace_back(u, v);
    inc_[static_cast<std::size_t>(u)].push_back(e);
    inc_[static_cast<std::size_t>(v)].push_back(e);
    return e;
  }

  [[nodiscard]] bool directed() const noexcept { return directed_; }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return vid_.size(); }
  [[nodiscard]] std::size_t num_edges() const noexcept { return ends_.size(); }

  [[nodiscard]] std::pair<int, int> ends(int e) const { return ends_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] int other(int e, int v) const {
    auto [a, b] = ends(e);
    return a == v ? b : a;
  }
  /// Edges incident with v, in insertion order.
  [[nodiscard]] const std::vector<int>& incident(int v) const { return inc_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] std::size_t degree(int v) const { return incident(v).size(); }
  [[nodiscard]] std::size_t out_degree(int v) const {
    std::size_t d = 0;
    for (int e : incident(v)) d += ends(e).first == v;
    return d;
  }
  [[nodiscard]] std::size_t in_degree(int v) const { return degree(v) - out_degree(v); }

  /// Number of edges joining u and v (from u to v when directed).
  [[nodiscard]] std::size_t multiplicity(int u, int v) const {
    std::size_t m = 0;
    for (int e : incident(u)) {
      auto [a, b] = ends(e);
      m += directed_ ? (a == u && b == v) : (a == v || b == v);
    }
    return m;
  }
  [[nodiscard]] bool adjacent(int u, int v) const {
    for (int e : incident(u)) {
      if (other(e, u) == v) return true;
    }
    return false;
  }

  [[nodiscard]] const std::string& vertex_id(int v) const { return vid_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::string& edge_id(int e) const { return eid_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] label vertex_label(int v) const { return vlabel_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] label edge_label(int e) const { return elabel_.at(static_cast<std::size_t>(e)); }
  void set_vertex_label(int v, label lab) { vlabel_.at(static_cast<std::size_t>(v)) = lab; }
  void set_edge_label(int e, label lab) { elabel_.at(static_cast<std::size_t>(e)) = lab; }

  [[nodiscard]] std::optional<int> find_vertex(const std::string& id) const {
    for (std::size_t i = 0; i < vid_.size(); ++i) {
      if (vid_[i] == id) return static_cast<int>(i);
    }
    return std::nullopt;
  }
  [[nodiscard]] std::optional<int> find_edge(const std::string& id) const {
    for (std::size_t i = 0; i < eid_.size(); ++i) {
      if (eid_[i] == id) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  [[nodiscard]] bool contains_vertex(int v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < vid_.size();
  }
  [[nodiscard]] bool contains_edge(int e) const noexcept {
    return e >= 0 && static_cast<std::size_t>(e) < ends_.size();
  }
  void check_vertex(int v) const {
    if (!contains_vertex(v)) throw precondition_error("unknown vertex " + std::to_string(v));
  }
  void check_edge(int e) const {
    if (!contains_edge(e)) throw precondition_error("unknown edge " + std::to_string(e));
  }

  /// Connectivity of the vertex set `vs` using only edges with both ends in it
  /// (directions ignored). The empty set is not connected.
  [[nodiscard]] bool connected(const std::vector<int>& vs) const {
    if (vs.empty()) return false;
    std::vector<char> in(num_vertices(), 0), seen(num_vertices(), 0);
    for (int v : vs) in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> stack{vs.front()};
    seen[static_cast<std::size_t>(vs.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : incident(v)) {
        const int w = other(e, v);
        const auto wi = static_cast<std::size_t>(w);
        if (in[wi] && !seen[wi]) {
          seen[wi] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    std::size_t distinct = 0;
    for (char c : in) distinct += c != 0;
    return reached == distinct;
  }

  /// Labels must be present everywhere and lie in `q`.
  void require_labels(const wqo::quasi_order& q, bool vertices, bool edges) const {
    auto ok = [&](const label& l) { return l && *l < q.size(); };
    if (vertices) {
      for (std::size_t v = 0; v < num_vertices(); ++v) {
        if (!ok(vlabel_[v])) throw precondition_error("vertex " + vid_[v] + " has no label in the label order");
      }
    }
    if (edges) {
      for (std::size_t e = 0; e < num_edges(); ++e) {
        if (!ok(elabel_[e])) throw precondition_error("edge " + eid_[e] + " has no label in the label order");
      }
    }
  }

  [[nodiscard]] bool has_vertex_labels() const {
    for (const auto& l : vlabel_) {
      if (l) return true;
    }
    return false;
  }
  [[nodiscard]] bool has_edge_labels() const {
    for (const auto& l : elabel_) {
      if (l) return true;
    }
    return false;
  }

 private:
  bool directed_;
  std::vector<std::string> vid_, eid_;
  std::vector<label> vlabel_, elabel_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<int>> inc_;
};

}  // namespace ordgraph
