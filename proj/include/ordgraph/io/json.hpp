#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordgraph/error.hpp"
#include "ordgraph/graph/multigraph.hpp"
#include "ordgraph/graph/treewidth.hpp"
#include "ordgraph/graph/witness.hpp"
#include "ordgraph/trees/labelled_tree.hpp"
#include "ordgraph/wqo/quasi_order.hpp"

namespace ordgraph::io {

using json = nlohmann::json;

inline json parse_json(const std::string& text, const std::string& what = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw format_error(what + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace detail {

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw format_error(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw format_error(where + ": field \"" + key + "\" has the wrong type");
  }
}

// ids may be given as strings or numbers
inline std::string id_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw format_error(where + ": id must be a string or an integer");
}

}  // namespace detail

// ---- quasi-orders: {elements: [...], leq: [[bool, ...], ...]}

inline wqo::quasi_order quasi_order_from_json(const json& j) {
  auto names = detail::get<std::vector<std::string>>(j, "elements", "quasi-order");
  auto leq = detail::get<std::vector<std::vector<bool>>>(j, "leq", "quasi-order");
  return {std::move(names), std::move(leq)};
}

inline json to_json(const wqo::quasi_order& q) {
  json leq = json::array();
  for (std::size_t a = 0; a < q.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < q.size(); ++b) row.push_back(q.leq(a, b));
    leq.push_back(row);
  }
  return {{"elements", q.names()}, {"leq", leq}};
}

// ---- labelled trees: {vertices: [{id, parent?, l, lq}]}

template <w_order W = cnf_w>
basic_labelled_tree<W> tree_from_json(const json& j) {
  const auto vs = detail::get<json>(j, "vertices", "tree");
  if (!vs.is_array() || vs.empty()) throw format_error("tree: \"vertices\" must be a non-empty array");
  struct entry {
    std::string id;
    std::optional<std::string> parent;
    unsigned l;
    q_label<W> lq;
  };
  std::vector<entry> es;
  std::map<std::string, std::size_t> pos;
  for (const auto& v : vs) {
    entry e{detail::id_of(v.value("id", json()), "tree vertex"), std::nullopt, 0, {}};
    if (v.contains("parent") && !v.at("parent").is_null()) e.parent = detail::id_of(v.at("parent"), "tree vertex " + e.id);
    const auto l = detail::get<long long>(v, "l", "tree vertex " + e.id);
    if (l < 0) throw precondition_error("tree vertex " + e.id + ": l must be a natural number");
    e.l = static_cast<unsigned>(l);
    e.lq = q_label<W>::parse(detail::get<std::string>(v, "lq", "tree vertex " + e.id));
    if (!pos.emplace(e.id, es.size()).second) throw precondition_error("duplicate tree vertex id " + e.id);
    es.push_back(std::move(e));
  }
  basic_labelled_tree<W> t;
  std::vector<int> at(es.size(), -1);
  // attach vertices whose parent is already placed until nothing changes
  for (std::size_t placed = 0, round = 0; placed < es.size(); ++round) {
    if (round > es.size()) throw precondition_error("tree: parent links do not form a rooted tree");
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (at[i] != -1) continue;
      const auto& e = es[i];
      if (!e.parent) {
        at[i] = t.add_root(e.l, e.lq, e.id);
        ++placed;
        continue;
      }
      auto it = pos.find(*e.parent);
      if (it == pos.end()) throw foreign_element("parent " + *e.parent + " of " + e.id);
      if (at[it->second] == -1) continue;
      at[i] = t.add_child(at[it->second], e.l, e.lq, e.id);
      ++placed;
    }
  }
  return t;
}

template <w_order W>
json to_json(const basic_labelled_tree<W>& t) {
  json vs = json::array();
  for (int v : t.preorder()) {
    json e{{"id", t.name(v)}};
    if (t.parent(v) != basic_labelled_tree<W>::none) e["parent"] = t.name(t.parent(v));
    e["l"] = t.l(v);
    e["lq"] = t.lq(v).str();
    vs.push_back(e);
  }
  return {{"vertices", vs}};
}

// ---- graphs: {directed, vertices: [{id, label?}], edges: [{id, u, v, label?}],
//      labels?: quasi-order}. Without a "labels" order, label names form an
//      antichain.

struct graph_document {
  multigraph graph;
  std::optional<wqo::quasi_order> labels;
};

namespace detail {

struct raw_graph {
  bool directed = false;
  std::vector<std::pair<std::string, std::optional<std::string>>> vertices;
  struct edge {
    std::string id, u, v;
    std::optional<std::string> label;
  };
  std::vector<edge> edges;
  std::optional<wqo::quasi_order> labels;
};

inline std::optional<std::string> label_of(const json& j) {
  if (!j.contains("label") || j.at("label").is_null()) return std::nullopt;
  return id_of(j.at("label"), "label");
}

inline raw_graph read_raw_graph(const json& j) {
  raw_graph g;
  g.directed = j.value("directed", false);
  for (const auto& v : get<json>(j, "vertices", "graph")) g.vertices.emplace_back(id_of(v.value("id", json()), "graph vertex"), label_of(v));
  if (j.contains("edges")) {
    std::size_t k = 0;
    for (const auto& e : j.at("edges")) {
      raw_graph::edge x;
      x.id = e.contains("id") ? id_of(e.at("id"), "graph edge") : "e" + std::to_string(k);
      x.u = id_of(e.value("u", json()), "graph edge " + x.id);
      x.v = id_of(e.value("v", json()), "graph edge " + x.id);
      x.label = label_of(e);
      g.edges.push_back(std::move(x));
      ++k;
    }
  }
  if (j.contains("labels")) g.labels = quasi_order_from_json(j.at("labels"));
  return g;
}

inline multigraph build(const raw_graph& r, const std::optional<wqo::quasi_order>& q) {
  multigraph g(r.directed);
  auto lab = [&](const std::optional<std::string>& s) -> multigraph::label {
    if (!s || !q) return std::nullopt;
    return q->index_of(*s);
  };
  for (const auto& [id, l] : r.vertices) g.add_vertex(id, lab(l));
  for (const auto& e : r.edges) {
    auto u = g.find_vertex(e.u), v = g.find_vertex(e.v);
    if (!u) throw foreign_element("edge " + e.id + " names unknown vertex " + e.u);
    if (!v) throw foreign_element("edge " + e.id + " names unknown vertex " + e.v);
    g.add_edge(*u, *v, e.id, lab(e.label));
  }
  return g;
}

}  // namespace detail

/// Reads graphs that share one label order: the first "labels" order found,
/// otherwise the antichain on every label name used.
inline std::vector<graph_document> graphs_from_json(const std::vector<json>& docs) {
  std::vector<detail::raw_graph> raws;
  std::optional<wqo::quasi_order> q;
  std::vector<std::string> names;
  bool any_label = false;
  for (const auto& d : docs) {
    raws.push_back(detail::read_raw_graph(d));
    if (!q && raws.back().labels) q = raws.back().labels;
    auto note = [&](const std::optional<std::string>& s) {
      if (!s) return;
      any_label = true;
      if (std::find(names.begin(), names.end(), *s) == names.end()) names.push_back(*s);
    };
    for (const auto& v : raws.back().vertices) note(v.second);
    for (const auto& e : raws.back().edges) note(e.label);
  }
  if (!q && any_label) {
    std::vector<std::vector<bool>> leq(names.size(), std::vector<bool>(names.size(), false));
    for (std::size_t i = 0; i < names.size(); ++i) leq[i][i] = true;
    q = wqo::quasi_order(names, leq);
  }
  std::vector<graph_document> out;
  for (const auto& r : raws) out.push_back({detail::build(r, q), q});
  return out;
}

inline graph_document graph_from_json(const json& j) { return graphs_from_json({j}).front(); }

inline json to_json(const multigraph& g, const wqo::quasi_order* labels = nullptr) {
  auto lab = [&](multigraph::label l) -> json {
    if (!l) return nullptr;
    if (labels) return labels->name(*l);
    return *l;
  };
  json vs = json::array(), es = json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    json e{{"id", g.vertex_id(static_cast<int>(v))}};
    if (auto l = g.vertex_label(static_cast<int>(v))) e["label"] = lab(l);
    vs.push_back(e);
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [u, v] = g.ends(static_cast<int>(i));
    json e{{"id", g.edge_id(static_cast<int>(i))}, {"u", g.vertex_id(u)}, {"v", g.vertex_id(v)}};
    if (auto l = g.edge_label(static_cast<int>(i))) e["label"] = lab(l);
    es.push_back(e);
  }
  json out{{"directed", g.directed()}, {"vertices", vs}, {"edges", es}};
  if (labels) out["labels"] = to_json(*labels);
  return out;
}

inline std::string to_dot(const multigraph& g, const wqo::quasi_order* labels = nullptr) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  auto lab = [&](multigraph::label l) { return labels ? labels->name(*l) : std::to_string(*l); };
  std::string s = g.directed() ? "digraph G {\n" : "graph G {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto id = g.vertex_id(static_cast<int>(v));
    s += "  " + quote(id);
    if (auto l = g.vertex_label(static_cast<int>(v))) s += " [label=" + quote(id + ": " + lab(l)) + "]";
    s += ";\n";
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto [u, v] = g.ends(static_cast<int>(i));
    s += "  " + quote(g.vertex_id(u)) + (g.directed() ? " -> " : " -- ") + quote(g.vertex_id(v));
    if (auto l = g.edge_label(static_cast<int>(i))) s += " [label=" + quote(lab(l)) + "]";
    s += ";\n";
  }
  return s + "}\n";
}

// ---- witnesses, by ids

inline json to_json(const expansion_witness& w, const multigraph& g1, const multigraph& g2) {
  json out{{"kind", to_string(w.kind)}};
  auto vids = [&](const std::vector<int>& vs) {
    json a = json::array();
    for (int x : vs) a.push_back(g2.vertex_id(x));
    return a;
  };
  auto eids = [&](const std::vector<int>& es) {
    json a = json::array();
    for (int x : es) a.push_back(g2.edge_id(x));
    return a;
  };
  if (w.kind == expansion_kind::immersion) {
    json vm = json::object(), pm = json::object();
    for (std::size_t v = 0; v < w.vertex_map.size(); ++v) vm[g1.vertex_id(static_cast<int>(v))] = g2.vertex_id(w.vertex_map[v]);
    for (std::size_t e = 0; e < w.paths.size(); ++e) pm[g1.edge_id(static_cast<int>(e))] = eids(w.paths[e]);
    out["vertex_map"] = vm;
    out["paths"] = pm;
    return out;
  }
  json bs = json::object(), em = json::object();
  for (std::size_t v = 0; v < w.branch_sets.size(); ++v) bs[g1.vertex_id(static_cast<int>(v))] = vids(w.branch_sets[v]);
  for (std::size_t e = 0; e < w.edge_map.size(); ++e) em[g1.edge_id(static_cast<int>(e))] = g2.edge_id(w.edge_map[e]);
  out["branch_sets"] = bs;
  out["edge_map"] = em;
  if (!w.branch_edges.empty()) {
    json be = json::object();
    for (std::size_t v = 0; v < w.branch_edges.size(); ++v) {
      json a = json::array();
      for (auto [x, y] : w.branch_edges[v]) a.push_back({g2.vertex_id(x), g2.vertex_id(y)});
      be[g1.vertex_id(static_cast<int>(v))] = a;
    }
    out["branch_edges"] = be;
  }
  return out;
}

/// Reads a witness written by to_json (ids of G1 as keys, ids of G2 as
/// values). The kind decides which fields are read.
inline expansion_witness witness_from_json(const json& j, const multigraph& g1, const multigraph& g2) {
  expansion_witness w;
  const auto kind = detail::get<std::string>(j, "kind", "witness");
  auto v1 = [&](const std::string& id) {
    auto v = g1.find_vertex(id);
    if (!v) throw foreign_element("witness names unknown G1 vertex " + id);
    return *v;
  };
  auto e1 = [&](const std::string& id) {
    auto e = g1.find_edge(id);
    if (!e) throw foreign_element("witness names unknown G1 edge " + id);
    return *e;
  };
  auto v2 = [&](const json& id) {
    auto v = g2.find_vertex(detail::id_of(id, "witness"));
    if (!v) throw foreign_element("witness names unknown G2 vertex " + detail::id_of(id, "witness"));
    return *v;
  };
  auto e2 = [&](const json& id) {
    auto e = g2.find_edge(detail::id_of(id, "witness"));
    if (!e) throw foreign_element("witness names unknown G2 edge " + detail::id_of(id, "witness"));
    return *e;
  };
  if (kind == "immersion") {
    w.kind = expansion_kind::immersion;
    w.vertex_map.assign(g1.num_vertices(), -1);
    w.paths.assign(g1.num_edges(), {});
    const auto vm = detail::get<json>(j, "vertex_map", "witness");
    for (const auto& [k, v] : vm.items()) {
      w.vertex_map[static_cast<std::size_t>(v1(k))] = v2(v);
    }
    const auto pm = detail::get<json>(j, "paths", "witness");
    for (const auto& [k, p] : pm.items()) {
      auto& path = w.paths[static_cast<std::size_t>(e1(k))];
      for (const auto& e : p) path.push_back(e2(e));
    }
    return w;
  }
  if (kind != "minor" && kind != "collapse") throw format_error("witness: unknown kind " + kind);
  w.kind = kind == "minor" ? expansion_kind::minor : expansion_kind::collapse;
  w.branch_sets.assign(g1.num_vertices(), {});
  w.edge_map.assign(g1.num_edges(), -1);
  const auto sets = detail::get<json>(j, "branch_sets", "witness");
  for (const auto& [k, s] : sets.items()) {
    auto& bs = w.branch_sets[static_cast<std::size_t>(v1(k))];
    for (const auto& x : s) bs.push_back(v2(x));
  }
  const auto em = detail::get<json>(j, "edge_map", "witness");
  for (const auto& [k, e] : em.items()) {
    w.edge_map[static_cast<std::size_t>(e1(k))] = e2(e);
  }
  if (j.contains("branch_edges")) {
    w.branch_edges.assign(g1.num_vertices(), {});
    for (const auto& [k, es] : j.at("branch_edges").items()) {
      auto& be = w.branch_edges[static_cast<std::size_t>(v1(k))];
      for (const auto& p : es) {
        if (!p.is_array() || p.size() != 2) throw format_error("witness: branch edge must be a pair");
        be.emplace_back(v2(p[0]), v2(p[1]));
      }
    }
  }
  return w;
}

inline json to_json(const tree_decomposition& d, const multigraph& g) {
  json bags = json::array();
  for (std::size_t i = 0; i < d.bag_vertices.size(); ++i) {
    json vs = json::array(), es = json::array();
    for (int v : d.bag_vertices[i]) vs.push_back(g.vertex_id(v));
    for (int e : d.bag_edges[i]) es.push_back(g.edge_id(e));
    bags.push_back({{"node", d.tree.vertex_id(static_cast<int>(i))}, {"vertices", vs}, {"edges", es}});
  }
  json tree_edges = json::array();
  for (std::size_t e = 0; e < d.tree.num_edges(); ++e) {
    auto [a, b] = d.tree.ends(static_cast<int>(e));
    tree_edges.push_back({d.tree.vertex_id(a), d.tree.vertex_id(b)});
  }
  return {{"width", width(d)}, {"bags", bags}, {"tree_edges", tree_edges}};
}

}  // namespace ordgraph::io
