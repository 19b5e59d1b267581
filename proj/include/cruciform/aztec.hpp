#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "matching.hpp"
#include "report.hpp"

namespace cruciform {

enum class ARStyle { Wt, WtBar };

inline const char* ar_style_name(ARStyle s) { return s == ARStyle::Wt ? "wt" : "wt-bar"; }

struct ARWeights {
  LaurentMonomial e = LaurentMonomial::q(0);
  LaurentMonomial f = LaurentMonomial::q(0);
  LaurentMonomial g = LaurentMonomial::q(0);
  LaurentMonomial h = LaurentMonomial::q(0);

  nlohmann::json to_json() const {
    return {{"e", poly_json(LaurentPoly::from(e))},
            {"f", poly_json(LaurentPoly::from(f))},
            {"g", poly_json(LaurentPoly::from(g))},
            {"h", poly_json(LaurentPoly::from(h))}};
  }
};

// A graph with ordered attachment lists for the double connected sum.
struct Attached {
  WeightedGraph graph;
  std::vector<std::size_t> top;
  std::vector<std::size_t> bottom;
};

namespace detail {

class CoordIndex {
 public:
  explicit CoordIndex(WeightedGraph& g) : g_(g) {}
  std::size_t at(std::int64_t x, std::int64_t y) {
    auto [it, fresh] = ids_.try_emplace({x, y}, 0);
    if (fresh) it->second = g_.add_vertex(x, y);
    return it->second;
  }
  std::size_t find(std::int64_t x, std::int64_t y) const {
    auto it = ids_.find({x, y});
    return it == ids_.end() ? WeightedGraph::npos : it->second;
  }

 private:
  WeightedGraph& g_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> ids_;
};

// Diamond (i,j), 1-based from the bottom-left, weights clockwise from the northwest edge.
inline std::array<LaurentMonomial, 4> diamond_weights(ARStyle s, const ARWeights& w, std::int64_t i,
                                                      std::int64_t j) {
  auto pos = LaurentMonomial::q(i + j - 2);
  if (s == ARStyle::Wt) return {w.e, w.f, w.g * pos, w.h * pos};
  return {w.g * pos, w.h * pos, w.e, w.f};
}

// Diamonds of AR_{rows,cols}; skip_top/skip_bottom drop the outermost N / S vertices.
inline Attached build_ar_core(std::int64_t rows, std::int64_t cols, ARStyle s, const ARWeights& w,
                              bool skip_top, bool skip_bottom) {
  Attached out;
  CoordIndex idx(out.graph);
  for (std::int64_t i = 1; i <= rows; ++i) {
    for (std::int64_t j = 1; j <= cols; ++j) {
      auto wt = diamond_weights(s, w, i, j);
      std::size_t W = idx.at(2 * j - 1, 2 * i), E = idx.at(2 * j + 1, 2 * i);
      bool hasN = !(skip_top && i == rows), hasS = !(skip_bottom && i == 1);
      if (hasN) {
        std::size_t N = idx.at(2 * j, 2 * i + 1);
        out.graph.add_edge(W, N, wt[0]);
        out.graph.add_edge(N, E, wt[1]);
      }
      if (hasS) {
        std::size_t S = idx.at(2 * j, 2 * i - 1);
        out.graph.add_edge(E, S, wt[2]);
        out.graph.add_edge(S, W, wt[3]);
      }
    }
  }
  return out;
}

}  // namespace detail

inline Attached build_AR_graph(std::int64_t m, std::int64_t n, ARStyle s, const ARWeights& w) {
  if (m < 1 || n < 1) throw Error(Errc::InvalidArgument, "AR graph needs m,n >= 1");
  Attached out = detail::build_ar_core(m, n, s, w, false, false);
  for (std::int64_t j = 1; j <= n; ++j) {
    for (std::size_t v = 0; v < out.graph.vertex_count(); ++v) {
      const auto& p = out.graph.vertex(v);
      if (p.x == 2 * j && p.y == 2 * m + 1) out.top.push_back(v);
      if (p.x == 2 * j && p.y == 1) out.bottom.push_back(v);
    }
  }
  return out;
}

// AR_{m+1,n} without its top and bottom vertices, plus unit pendants on the new extreme vertices.
inline Attached build_pendant_AR_graph(std::int64_t m, std::int64_t n, ARStyle s, const ARWeights& w) {
  if (m < 0 || n < 1) throw Error(Errc::InvalidArgument, "pendant AR graph needs m >= 0, n >= 1");
  Attached out = detail::build_ar_core(m + 1, n, s, w, true, true);
  const auto one = LaurentMonomial::q(0);
  std::vector<std::size_t> tops, bots;
  for (std::int64_t k = 1; k <= n + 1; ++k) {
    for (std::size_t v = 0; v < out.graph.vertex_count(); ++v) {
      const auto& p = out.graph.vertex(v);
      if (p.x == 2 * k - 1 && p.y == 2 * (m + 1)) tops.push_back(v);
      if (p.x == 2 * k - 1 && p.y == 2) bots.push_back(v);
    }
  }
  for (auto v : tops) {
    const auto p = out.graph.vertex(v);
    std::size_t t = out.graph.add_vertex(p.x, p.y + 1);
    out.graph.add_edge(v, t, one);
    out.top.push_back(t);
  }
  for (auto v : bots) {
    const auto p = out.graph.vertex(v);
    std::size_t t = out.graph.add_vertex(p.x, p.y - 1);
    out.graph.add_edge(v, t, one);
    out.bottom.push_back(t);
  }
  return out;
}

// Orientation of the e/q^l and f edges in the top part of the wt-bar K graph.
enum class KBarTop { FLeft, FRight };

// K_{m,n} with unit pendants on its n top and n bottom vertices (requires m < n).
inline Attached build_pendant_K_graph(std::int64_t m, std::int64_t n, ARStyle s, const ARWeights& w,
                                      KBarTop bar_top = KBarTop::FLeft) {
  if (m < 1 || n <= m) throw Error(Errc::InvalidArgument, "K graph needs 1 <= m < n");
  Attached out;
  auto& g = out.graph;
  detail::CoordIndex idx(g);
  const auto one = LaurentMonomial::q(0);
  // Level l (1 = outermost) has n-l+1 rim vertices and n-l apexes; the level-m apexes are shared.
  for (int side : {+1, -1}) {
    for (std::int64_t l = 1; l <= m; ++l) {
      std::int64_t yr = side * (2 * (m - l) + 1), ya = side * 2 * (m - l);
      for (std::int64_t j = 1; j <= n - l; ++j) {
        std::size_t L = idx.at(2 * j + l - 1, yr), R = idx.at(2 * j + l + 1, yr);
        std::size_t A = idx.at(2 * j + l, ya);
        LaurentMonomial wl, wr;
        if (side > 0) {
          if (s == ARStyle::Wt) {
            wl = w.h * LaurentMonomial::q(m + j - 1);
            wr = w.g * LaurentMonomial::q(m + j - 1);
          } else {
            auto eq = w.e * LaurentMonomial::q(-l);
            wl = bar_top == KBarTop::FLeft ? w.f : eq;
            wr = bar_top == KBarTop::FLeft ? eq : w.f;
          }
        } else {
          if (s == ARStyle::Wt) {
            wl = w.e * LaurentMonomial::q(l);
            wr = w.f;
          } else {
            wl = w.g * LaurentMonomial::q(l + j - 2);
            wr = w.h * LaurentMonomial::q(l + j - 2);
          }
        }
        g.add_edge(L, A, wl);
        g.add_edge(A, R, wr);
      }
      // unit verticals from this level's rim to the previous level's apexes
      if (l > 1)
        for (std::int64_t k = 1; k <= n - l + 1; ++k)
          g.add_edge(idx.at(2 * k + l - 1, yr), idx.at(2 * k + l - 1, side * 2 * (m - l + 1)), one);
    }
    for (std::int64_t k = 1; k <= n; ++k) {
      std::int64_t yr = side * (2 * m - 1);
      std::size_t rim = idx.at(2 * k, yr);
      std::size_t t = g.add_vertex(2 * k, yr + side);
      g.add_edge(rim, t, one);
      (side > 0 ? out.top : out.bottom).push_back(t);
    }
  }
  return out;
}

struct Cap {
  WeightedGraph graph;
  std::vector<std::size_t> attach;
};

// AR_{m,n} is balanced only after n-m of its 2n attachment vertices are matched
// outside it, so every cap absorbs exactly k of them through k extra vertices.

// k extra vertices, each joined to all n attachment vertices by unit edges.
inline Cap uniform_cap(std::size_t n, std::size_t k) {
  Cap c;
  for (std::size_t i = 0; i < n; ++i) c.attach.push_back(c.graph.add_vertex(static_cast<std::int64_t>(2 * i), 0));
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t u = c.graph.add_vertex(static_cast<std::int64_t>(2 * t + 1), 1);
    for (auto a : c.attach) c.graph.add_edge(a, u, LaurentMonomial::q(0));
  }
  return c;
}

// k extra vertices joined to seeded random subsets of the attachment row, small monomial weights.
inline Cap random_cap(std::size_t n, std::size_t k, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(1, 4), ex(-1, 2), coin(0, 2);
  Cap c;
  for (std::size_t i = 0; i < n; ++i) c.attach.push_back(c.graph.add_vertex(static_cast<std::int64_t>(2 * i), 0));
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t u = c.graph.add_vertex(static_cast<std::int64_t>(2 * t + 1), 1);
    std::size_t anchor = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    for (std::size_t i = 0; i < n; ++i)
      if (i == anchor || coin(rng) != 0)
        c.graph.add_edge(c.attach[i], u, LaurentMonomial(Rational(coef(rng)), ex(rng)));
  }
  return c;
}

inline Cap mirrored(Cap c) {
  WeightedGraph g;
  for (const auto& v : c.graph.vertices()) g.add_vertex(v.x, -v.y);
  for (const auto& e : c.graph.edges()) g.add_edge(e.u, e.v, e.w);
  c.graph = std::move(g);
  return c;
}

// G # mid # H along mid.top and mid.bottom.
inline WeightedGraph sandwich(const Cap& top, const Attached& mid, const Cap& bottom) {
  if (top.attach.size() != mid.top.size() || bottom.attach.size() != mid.bottom.size())
    throw Error(Errc::InvalidArgument, "cap size does not match attachment list");
  std::int64_t ymax = 0, ymin = 0;
  for (const auto& v : mid.graph.vertices()) {
    ymax = std::max(ymax, v.y);
    ymin = std::min(ymin, v.y);
  }
  auto s1 = connected_sum(mid.graph, mid.top, top.graph, top.attach, 0, ymax + 1);
  Cap low = mirrored(bottom);
  auto s2 = connected_sum(s1.graph, mid.bottom, low.graph, low.attach, 0, ymin - 1);
  return std::move(s2.graph);
}

enum class CapKind { Uniform, Random };

inline const char* cap_kind_name(CapKind k) { return k == CapKind::Uniform ? "uniform" : "random"; }

// Splits the n-m absorbed vertices between the two caps, top first.
inline std::pair<Cap, Cap> make_caps(CapKind k, std::int64_t m, std::int64_t n, std::uint32_t seed) {
  if (m > n) throw Error(Errc::InvalidArgument, "AR_{m,n} with m > n has no balanced sandwich");
  auto un = static_cast<std::size_t>(n);
  auto total = static_cast<std::size_t>(n - m);
  std::size_t kt = (total + 1) / 2, kb = total / 2;
  if (k == CapKind::Uniform) return {uniform_cap(un, kt), uniform_cap(un, kb)};
  return {random_cap(un, kt, seed), random_cap(un, kb, seed + 1)};
}

// Factor and rewritten graph of one sandwich step (kind 1: wt, kind 2: wt-bar).
inline std::pair<LaurentPoly, Attached> sandwich_rhs(int kind, std::int64_t m, std::int64_t n,
                                                     const ARWeights& w) {
  LaurentPoly base = LaurentPoly::from(w.e * w.g) + LaurentPoly::from(w.h * w.f);
  ARWeights w2 = w;
  std::int64_t qe = binom(m, 2);
  if (kind == 1) {
    w2.e = w.e * LaurentMonomial::q(1);
  } else {
    w2.e = w.e * LaurentMonomial::q(-1);
    qe += m * (n - 1);
  }
  LaurentPoly factor = poly_pow(base, m) * LaurentMonomial::q(qe);
  return {factor, build_pendant_AR_graph(m, n - 1, kind == 1 ? ARStyle::Wt : ARStyle::WtBar, w2)};
}

inline VerificationReport verify_sandwich(int kind, std::int64_t m, std::int64_t n, const ARWeights& w,
                                          CapKind caps = CapKind::Uniform, std::uint32_t seed = 7) {
  if (kind != 1 && kind != 2) throw Error(Errc::InvalidArgument, "sandwich kind must be 1 or 2");
  if (m < 1 || n < 2) throw Error(Errc::InvalidArgument, "sandwich lemma needs m >= 1, n >= 2");
  Stopwatch sw;
  auto [G, H] = make_caps(caps, m, n, seed);
  auto ar = build_AR_graph(m, n, kind == 1 ? ARStyle::Wt : ARStyle::WtBar, w);
  auto [factor, rewritten] = sandwich_rhs(kind, m, n, w);
  LaurentPoly lhs = matching_poly_brute(sandwich(G, ar, H));
  LaurentPoly rhs = factor * matching_poly_brute(sandwich(G, rewritten, H));
  nlohmann::json inst = {{"kind", kind}, {"m", m}, {"n", n}, {"weights", w.to_json()},
                         {"caps", cap_kind_name(caps)}};
  return make_report("sandwich" + std::to_string(kind), inst, std::move(lhs), std::move(rhs), sw);
}

enum class MegaExponent { Nominal, Composed };

// Mega-sandwich prefactor. For kind 1 the nominal q-exponent is
// C(m,2)+C(m+1,3); composing the m single-step factors gives 2*C(m+1,3).
inline LaurentPoly mega_factor(int kind, std::int64_t m, std::int64_t n, const ARWeights& w,
                               MegaExponent mode = MegaExponent::Nominal) {
  LaurentPoly f = LaurentPoly::one();
  for (std::int64_t i = 1; i <= m; ++i) {
    LaurentPoly t = kind == 1 ? LaurentPoly::from(w.e * w.g * LaurentMonomial::q(i - 1)) +
                                    LaurentPoly::from(w.h * w.f)
                              : LaurentPoly::from(w.e * w.g) +
                                    LaurentPoly::from(w.h * w.f * LaurentMonomial::q(i - 1));
    f *= poly_pow(t, m - i + 1);
  }
  std::int64_t qe;
  if (kind == 1)
    qe = mode == MegaExponent::Nominal ? binom(m, 2) + binom(m + 1, 3) : 2 * binom(m + 1, 3);
  else
    qe = (n - 1) * m * (m + 1) / 2;
  return f * LaurentMonomial::q(qe);
}

inline VerificationReport verify_mega_sandwich(int kind, std::int64_t m, std::int64_t n,
                                               const ARWeights& w, CapKind caps = CapKind::Uniform,
                                               MegaExponent mode = MegaExponent::Nominal,
                                               KBarTop bar_top = KBarTop::FLeft, std::uint32_t seed = 7) {
  if (kind != 1 && kind != 2) throw Error(Errc::InvalidArgument, "mega-sandwich kind must be 1 or 2");
  if (m < 1 || n <= m) throw Error(Errc::InvalidArgument, "mega-sandwich lemma needs 1 <= m < n");
  Stopwatch sw;
  ARStyle st = kind == 1 ? ARStyle::Wt : ARStyle::WtBar;
  auto [G, H] = make_caps(caps, m, n, seed);
  auto ar = build_AR_graph(m, n, st, w);
  auto k = build_pendant_K_graph(m, n, st, w, bar_top);
  LaurentPoly lhs = matching_poly_brute(sandwich(G, ar, H));
  LaurentPoly rhs = mega_factor(kind, m, n, w, mode) * matching_poly_brute(sandwich(G, k, H));
  nlohmann::json inst = {{"kind", kind},
                         {"m", m},
                         {"n", n},
                         {"weights", w.to_json()},
                         {"caps", cap_kind_name(caps)},
                         {"exponent", mode == MegaExponent::Nominal ? "nominal" : "composed"}};
  return make_report("mega" + std::to_string(kind), inst, std::move(lhs), std::move(rhs), sw);
}

inline VerificationReport verify_factorization(const WeightedGraph& g1, const WeightedGraph& g2,
                                               const LaurentPoly& factor, Engine engine = Engine::Brute) {
  Stopwatch sw;
  auto r = make_report("factorization",
                       {{"g1_vertices", g1.vertex_count()}, {"g2_vertices", g2.vertex_count()},
                        {"factor", poly_json(factor)}},
                       matching_poly(g1, engine), factor * matching_poly(g2, engine), sw);
  r.engine = engine_name(engine);
  return r;
}

}  // namespace cruciform
