#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactmath.hpp"

namespace cruciform {

struct Vertex {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  LaurentMonomial w;
};

class WeightedGraph {
 public:
  std::size_t add_vertex(std::int64_t x, std::int64_t y) {
    verts_.push_back({x, y});
    adj_.emplace_back();
    return verts_.size() - 1;
  }

  std::size_t add_edge(std::size_t u, std::size_t v, const LaurentMonomial& w) {
    if (u >= verts_.size() || v >= verts_.size())
      throw Error(Errc::InvalidArgument, "edge endpoint out of range");
    if (u == v) throw Error(Errc::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    if (find_edge(u, v))
      throw Error(Errc::InvalidArgument,
                  "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    edges_.push_back({u, v, w});
    adj_[u].push_back(edges_.size() - 1);
    adj_[v].push_back(edges_.size() - 1);
    return edges_.size() - 1;
  }

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(std::size_t v) const { return verts_[v]; }
  const std::vector<Vertex>& vertices() const { return verts_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& incident(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }

  std::size_t other(std::size_t e, std::size_t v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (auto e : adj_[v]) out.push_back(other(e, v));
    return out;
  }

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    for (auto e : a)
      if ((edges_[e].u == u && edges_[e].v == v) || (edges_[e].u == v && edges_[e].v == u))
        return e;
    return std::nullopt;
  }

  // Keeps vertices with keep[v] true; returns the old->new index map (npos for dropped).
  WeightedGraph induced(const std::vector<bool>& keep, std::vector<std::size_t>* map_out = nullptr) const {
    WeightedGraph g;
    std::vector<std::size_t> map(verts_.size(), npos);
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (keep[v]) map[v] = g.add_vertex(verts_[v].x, verts_[v].y);
    for (const auto& e : edges_)
      if (map[e.u] != npos && map[e.v] != npos) g.add_edge(map[e.u], map[e.v], e.w);
    if (map_out) *map_out = std::move(map);
    return g;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Vertex> verts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Places b's vertices after a's, shifted by (dx, dy).
inline WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b,
                                    std::int64_t dx = 0, std::int64_t dy = 0) {
  WeightedGraph g = a;
  std::size_t off = a.vertex_count();
  for (const auto& v : b.vertices()) g.add_vertex(v.x + dx, v.y + dy);
  for (const auto& e : b.edges()) g.add_edge(e.u + off, e.v + off, e.w);
  return g;
}

struct ConnectedSum {
  WeightedGraph graph;
  std::vector<std::size_t> map_b;  // index of each vertex of b in the result
};

// Identifies ga[i] with gb[i]; the identified vertex keeps a's coordinates.
inline ConnectedSum connected_sum(const WeightedGraph& a, const std::vector<std::size_t>& ga,
                                  const WeightedGraph& b, const std::vector<std::size_t>& gb,
                                  std::int64_t dx = 0, std::int64_t dy = 0) {
  if (ga.size() != gb.size())
    throw Error(Errc::InvalidArgument, "connected sum needs equally many glue vertices");
  ConnectedSum out;
  out.graph = a;
  out.map_b.assign(b.vertex_count(), WeightedGraph::npos);
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (out.map_b[gb[k]] != WeightedGraph::npos)
      throw Error(Errc::InvalidArgument, "glue vertex listed twice");
    out.map_b[gb[k]] = ga[k];
  }
  for (std::size_t v = 0; v < b.vertex_count(); ++v)
    if (out.map_b[v] == WeightedGraph::npos)
      out.map_b[v] = out.graph.add_vertex(b.vertex(v).x + dx, b.vertex(v).y + dy);
  for (const auto& e : b.edges()) out.graph.add_edge(out.map_b[e.u], out.map_b[e.v], e.w);
  return out;
}

inline std::string monomial_text(const LaurentMonomial& m) { return LaurentPoly::from(m).to_json(); }

inline std::string to_dot(const WeightedGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [pos=\"" << g.vertex(v).x << ',' << g.vertex(v).y << "!\"];\n";
  for (const auto& e : g.edges()) {
    std::string lab = monomial_text(e.w);
    std::string esc;
    for (char ch : lab) {
      if (ch == '"') esc += '\\';
      esc += ch;
    }
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << esc << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const WeightedGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back({v.x, v.y});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"w", nlohmann::json::parse(monomial_text(e.w))}});
  return j;
}

}  // namespace cruciform
