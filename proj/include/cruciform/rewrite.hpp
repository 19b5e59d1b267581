#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "graph.hpp"

namespace cruciform {

// Contract: M(input) = factor * M(graph).
struct RewriteResult {
  WeightedGraph graph;
  LaurentPoly factor;
};

inline RewriteResult vertex_split(const WeightedGraph& g, std::size_t v,
                                  const std::vector<std::size_t>& h_part,
                                  const std::vector<std::size_t>& k_part) {
  if (v >= g.vertex_count()) throw Error(Errc::InvalidArgument, "vertex out of range");
  std::set<std::size_t> nb;
  for (auto x : g.neighbors(v)) nb.insert(x);
  std::set<std::size_t> hs(h_part.begin(), h_part.end()), ks(k_part.begin(), k_part.end());
  if (hs.size() != h_part.size() || ks.size() != k_part.size())
    throw Error(Errc::BadPartition, "repeated vertex in a part");
  for (auto x : hs)
    if (ks.count(x)) throw Error(Errc::BadPartition, "parts intersect");
  std::set<std::size_t> uni = hs;
  uni.insert(ks.begin(), ks.end());
  if (uni != nb) throw Error(Errc::BadPartition, "parts do not cover the neighbourhood exactly");

  WeightedGraph out;
  for (const auto& p : g.vertices()) out.add_vertex(p.x, p.y);
  const auto& pv = g.vertex(v);
  std::size_t v2 = out.add_vertex(pv.x, pv.y + 1);
  std::size_t w = out.add_vertex(pv.x + 1, pv.y);
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) {
      std::size_t x = e.u == v ? e.v : e.u;
      out.add_edge(ks.count(x) ? v2 : v, x, e.w);
    } else {
      out.add_edge(e.u, e.v, e.w);
    }
  }
  out.add_edge(v, w, LaurentMonomial::q(0));
  out.add_edge(v2, w, LaurentMonomial::q(0));
  return {std::move(out), LaurentPoly::one()};
}

inline RewriteResult star_scale(const WeightedGraph& g, std::size_t v, const LaurentMonomial& t) {
  if (v >= g.vertex_count()) throw Error(Errc::InvalidArgument, "vertex out of range");
  WeightedGraph out;
  for (const auto& p : g.vertices()) out.add_vertex(p.x, p.y);
  for (const auto& e : g.edges())
    out.add_edge(e.u, e.v, (e.u == v || e.v == v) ? e.w * t : e.w);
  return {std::move(out), LaurentPoly::from(LaurentMonomial(Rational(1), 0) / t)};
}

inline RewriteResult star_scale(const WeightedGraph& g, std::size_t v, const Rational& t) {
  if (t == 0) throw Error(Errc::ZeroScale, "star scale factor must be nonzero");
  return star_scale(g, v, LaurentMonomial(t, 0));
}

// inner[k] is joined to outer[k] by a unit leg; inner[k]-inner[k+1] carry x, y, z, t.
struct Spider {
  std::array<std::size_t, 4> inner{};
  std::array<std::size_t, 4> outer{};
};

inline RewriteResult urban_renewal(const WeightedGraph& g, const Spider& s) {
  std::set<std::size_t> all(s.inner.begin(), s.inner.end());
  all.insert(s.outer.begin(), s.outer.end());
  if (all.size() != 8) throw Error(Errc::BadSpider, "spider vertices must be distinct");
  for (auto v : all)
    if (v >= g.vertex_count()) throw Error(Errc::BadSpider, "spider vertex out of range");
  std::array<LaurentMonomial, 4> w;
  for (int k = 0; k < 4; ++k) {
    std::size_t a = s.inner[k], b = s.inner[(k + 1) % 4];
    auto e = g.find_edge(a, b);
    if (!e) throw Error(Errc::BadSpider, "missing inner cycle edge");
    w[k] = g.edge(*e).w;
    auto leg = g.find_edge(s.inner[k], s.outer[k]);
    if (!leg) throw Error(Errc::BadSpider, "missing leg");
    if (!(g.edge(*leg).w == LaurentMonomial::q(0)))
      throw Error(Errc::BadSpider, "legs must have unit weight");
    if (g.degree(s.inner[k]) != 3)
      throw Error(Errc::BadSpider, "inner vertex has neighbours outside the spider");
  }
  LaurentPoly delta = LaurentPoly::from(w[0] * w[2]) + LaurentPoly::from(w[1] * w[3]);
  if (delta.is_zero()) throw Error(Errc::SingularWeights, "xz+yt = 0");
  if (!delta.is_monomial())
    throw Error(Errc::Unsupported, "xz+yt must be a single monomial for monomial edge weights");
  LaurentMonomial dm = delta.as_monomial();

  std::vector<bool> keep(g.vertex_count(), true);
  for (auto v : s.inner) keep[v] = false;
  std::vector<std::size_t> map;
  WeightedGraph out = g.induced(keep, &map);
  // Edge outer[k]-outer[k+1] takes the opposite inner weight over xz+yt.
  for (int k = 0; k < 4; ++k)
    out.add_edge(map[s.outer[k]], map[s.outer[(k + 1) % 4]], w[(k + 2) % 4] / dm);
  return {std::move(out), delta};
}

inline RewriteResult remove_forced_edges(const WeightedGraph& g) {
  std::vector<bool> alive(g.vertex_count(), true);
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  LaurentMonomial factor = LaurentMonomial::q(0);
  auto kill = [&](std::size_t v) {
    alive[v] = false;
    for (auto e : g.incident(v)) {
      std::size_t x = g.other(e, v);
      if (alive[x]) --deg[x];
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!alive[v]) continue;
      if (deg[v] == 0) throw Error(Errc::Unmatchable, "vertex " + std::to_string(v) + " is isolated");
      if (deg[v] != 1) continue;
      for (auto e : g.incident(v)) {
        std::size_t x = g.other(e, v);
        if (!alive[x]) continue;
        factor = factor * g.edge(e).w;
        kill(v);
        kill(x);
        break;
      }
      changed = true;
    }
  }
  return {g.induced(alive), LaurentPoly::from(factor)};
}

}  // namespace cruciform
