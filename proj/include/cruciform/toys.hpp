#pragma once

#include <random>
#include <string>
#include <vector>

#include "aztec.hpp"
#include "region.hpp"
#include "rewrite.hpp"
#include "semihex.hpp"

namespace cruciform {

struct ToyGraph {
  std::string name;
  WeightedGraph graph;
};

namespace detail {

inline LaurentMonomial toy_weight(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 3), ex(-2, 3);
  return {make_rational(num(rng), den(rng)), ex(rng)};
}

inline WeightedGraph toy_grid(std::int64_t r, std::int64_t c, std::mt19937& rng) {
  WeightedGraph g;
  for (std::int64_t i = 0; i < r; ++i)
    for (std::int64_t j = 0; j < c; ++j) g.add_vertex(j, i);
  auto id = [c](std::int64_t i, std::int64_t j) { return static_cast<std::size_t>(i * c + j); };
  for (std::int64_t i = 0; i < r; ++i)
    for (std::int64_t j = 0; j < c; ++j) {
      if (j + 1 < c) g.add_edge(id(i, j), id(i, j + 1), toy_weight(rng));
      if (i + 1 < r) g.add_edge(id(i, j), id(i + 1, j), toy_weight(rng));
    }
  return g;
}

inline WeightedGraph toy_cycle(std::size_t n, std::mt19937& rng) {
  WeightedGraph g;
  for (std::size_t k = 0; k < n; ++k) g.add_vertex(static_cast<std::int64_t>(k), 0);
  for (std::size_t k = 0; k < n; ++k) g.add_edge(k, (k + 1) % n, toy_weight(rng));
  return g;
}

// A 4-cycle with unit legs to four outer vertices. `cross` joins opposite outer vertices and adds two
// hubs; otherwise consecutive outer vertices are joined in pairs by two-edge paths.
inline WeightedGraph toy_spider(bool cross, std::mt19937& rng) {
  WeightedGraph g;
  const std::int64_t ix[4] = {0, 1, 1, 0}, iy[4] = {0, 0, 1, 1};
  for (int k = 0; k < 4; ++k) g.add_vertex(2 * ix[k], 2 * iy[k]);
  for (int k = 0; k < 4; ++k) g.add_vertex(4 * ix[k] - 1, 4 * iy[k] - 1);
  // xz + yt = 1 + 6, a single monomial
  const LaurentMonomial cyc[4] = {LaurentMonomial::q(1), {Rational(2), 0}, LaurentMonomial::q(-1), {Rational(3), 0}};
  for (std::size_t k = 0; k < 4; ++k) {
    g.add_edge(k, (k + 1) % 4, cyc[k]);
    g.add_edge(k, k + 4, LaurentMonomial::q(0));
  }
  if (cross) {
    g.add_edge(4, 6, toy_weight(rng));
    g.add_edge(5, 7, toy_weight(rng));
    std::size_t u = g.add_vertex(1, -3), v = g.add_vertex(1, 5);
    g.add_edge(u, 4, toy_weight(rng));
    g.add_edge(u, 5, toy_weight(rng));
    g.add_edge(v, 6, toy_weight(rng));
    g.add_edge(v, 7, toy_weight(rng));
  } else {
    std::size_t m1 = g.add_vertex(10, 0), m2 = g.add_vertex(10, 10);
    g.add_edge(4, m1, toy_weight(rng));
    g.add_edge(m1, 5, toy_weight(rng));
    g.add_edge(6, m2, toy_weight(rng));
    g.add_edge(m2, 7, toy_weight(rng));
    std::size_t p = g.add_vertex(12, 0), r = g.add_vertex(12, 10);
    g.add_edge(m1, p, toy_weight(rng));
    g.add_edge(m2, r, toy_weight(rng));
  }
  return g;
}

inline WeightedGraph toy_comb(std::size_t teeth, std::mt19937& rng) {
  WeightedGraph g;
  for (std::size_t k = 0; k < teeth; ++k) {
    g.add_vertex(static_cast<std::int64_t>(k), 0);
    g.add_vertex(static_cast<std::int64_t>(k), 1);
  }
  for (std::size_t k = 0; k < teeth; ++k) {
    g.add_edge(2 * k, 2 * k + 1, toy_weight(rng));
    if (k + 1 < teeth) g.add_edge(2 * k, 2 * k + 2, toy_weight(rng));
  }
  return g;
}

inline WeightedGraph toy_prism(std::mt19937& rng) {
  WeightedGraph g;
  for (int k = 0; k < 6; ++k) g.add_vertex(k % 3, k / 3);
  for (std::size_t k = 0; k < 3; ++k) {
    g.add_edge(k, (k + 1) % 3, toy_weight(rng));
    g.add_edge(k + 3, (k + 1) % 3 + 3, toy_weight(rng));
    g.add_edge(k, k + 3, toy_weight(rng));
  }
  return g;
}

inline WeightedGraph toy_cube(std::mt19937& rng) {
  WeightedGraph g;
  for (int k = 0; k < 8; ++k) g.add_vertex(k & 3, k >> 2);
  for (std::size_t u = 0; u < 8; ++u)
    for (std::size_t bit : {1u, 2u, 4u})
      if (!(u & bit)) g.add_edge(u, u | bit, toy_weight(rng));
  return g;
}

}  // namespace detail

inline std::vector<ToyGraph> toy_corpus(std::uint32_t seed = 20240917) {
  std::mt19937 rng(seed);
  std::vector<ToyGraph> out;
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {2, 5}})
    out.push_back({"grid" + std::to_string(r) + "x" + std::to_string(c), detail::toy_grid(r, c, rng)});
  for (std::size_t n : {4u, 6u, 8u}) out.push_back({"cycle" + std::to_string(n), detail::toy_cycle(n, rng)});
  ARWeights w{{Rational(1), 0}, {Rational(2), 0}, {Rational(1), 0}, {Rational(3), 0}};
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {2, 3}})
    out.push_back({"AR" + std::to_string(m) + "," + std::to_string(n), build_AR_graph(m, n, ARStyle::Wt, w).graph});
  out.push_back({"cruciform(3,2,1,1,1,1)",
                 dual_graph(build_cruciform({3, 2, 1, 1, 1, 1}), WeightSpec(Rational(2), Rational(5), Rational(7), 1))});
  out.push_back({"semihex(3,2)", semihex_dual_graph(3, 2, {1, 3, 5}, SemihexWeighting::UnitQ).graph});
  out.push_back({"semihex(2,3)", semihex_dual_graph(2, 3, {2, 4}, SemihexWeighting::Wt,
                                                   LaurentMonomial(Rational(2), 0), LaurentMonomial(Rational(3), 0))
                                     .graph});
  out.push_back({"spider-cross-a", detail::toy_spider(true, rng)});
  out.push_back({"spider-cross-b", detail::toy_spider(true, rng)});
  out.push_back({"spider-paths", detail::toy_spider(false, rng)});
  out.push_back({"comb4", detail::toy_comb(4, rng)});
  out.push_back({"comb5", detail::toy_comb(5, rng)});
  out.push_back({"prism", detail::toy_prism(rng)});
  out.push_back({"cube", detail::toy_cube(rng)});
  return out;
}

// Every spider whose inner cycle is induced, inner vertices have degree 3, and xz+yt is one monomial.
inline std::vector<Spider> find_spiders(const WeightedGraph& g) {
  std::vector<Spider> out;
  const std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a) {
    if (g.degree(a) != 3) continue;
    for (auto b : g.neighbors(a))
      for (auto c : g.neighbors(b))
        for (auto d : g.neighbors(c)) {
          if (c == a || d == b || d == a || !(a < b && a < c && a < d && b < d)) continue;
          if (!g.find_edge(d, a) || g.find_edge(a, c) || g.find_edge(b, d)) continue;
          std::array<std::size_t, 4> in{a, b, c, d};
          Spider s{in, {}};
          bool ok = true;
          for (int k = 0; k < 4 && ok; ++k) {
            if (g.degree(in[k]) != 3) { ok = false; break; }
            std::size_t leg = WeightedGraph::npos;
            for (auto x : g.neighbors(in[k]))
              if (x != in[(k + 1) % 4] && x != in[(k + 3) % 4]) leg = x;
            ok = leg != WeightedGraph::npos && std::find(in.begin(), in.end(), leg) == in.end() &&
                 g.edge(*g.find_edge(in[k], leg)).w == LaurentMonomial::q(0);
            s.outer[k] = leg;
          }
          if (!ok) continue;
          std::set<std::size_t> outer(s.outer.begin(), s.outer.end());
          if (outer.size() != 4) continue;
          try {
            urban_renewal(g, s);
            out.push_back(s);
          } catch (const Error&) {
          }
        }
  }
  return out;
}

inline VerificationReport verify_rewrite(const std::string& name, const std::string& graph_name,
                                         const WeightedGraph& in, const RewriteResult& r) {
  Stopwatch sw;
  return make_report(name, {{"graph", graph_name}, {"vertices", in.vertex_count()}}, matching_poly_brute(in),
                     r.factor * matching_poly_brute(r.graph), sw);
}

// Applies each rewrite wherever it is defined on the corpus; names match the CLI lemma names.
inline std::vector<VerificationReport> rewrite_corpus_checks(const std::string& which) {
  std::vector<VerificationReport> out;
  for (const auto& t : toy_corpus()) {
    const auto& g = t.graph;
    if (which == "star") {
      for (std::size_t v : {std::size_t{0}, g.vertex_count() - 1})
        out.push_back(verify_rewrite("star", t.name, g, star_scale(g, v, LaurentMonomial(make_rational(3, 2), 2))));
    } else if (which == "split") {
      std::size_t v = 0;
      for (std::size_t u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) > g.degree(v)) v = u;
      auto nb = g.neighbors(v);
      std::vector<std::size_t> h(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(nb.size() / 2));
      std::vector<std::size_t> k(nb.begin() + static_cast<std::ptrdiff_t>(nb.size() / 2), nb.end());
      out.push_back(verify_rewrite("split", t.name, g, vertex_split(g, v, h, k)));
    } else if (which == "forced") {
      try {
        out.push_back(verify_rewrite("forced", t.name, g, remove_forced_edges(g)));
      } catch (const Error& e) {
        if (e.code() != Errc::Unmatchable) throw;
        auto r = make_report("forced", {{"graph", t.name}}, matching_poly_brute(g), LaurentPoly::zero(), Stopwatch());
        r.note = "unmatchable: forced removal isolates a vertex";
        out.push_back(std::move(r));
      }
    } else if (which == "spider") {
      for (const auto& s : find_spiders(g)) out.push_back(verify_rewrite("spider", t.name, g, urban_renewal(g, s)));
    } else {
      throw Error(Errc::InvalidArgument, "unknown rewrite " + which);
    }
  }
  return out;
}

}  // namespace cruciform
