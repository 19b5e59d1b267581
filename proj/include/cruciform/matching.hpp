#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"

namespace cruciform {

namespace detail {

// Dense integer-coefficient Laurent polynomial used inside the matching kernels.
struct IntPoly {
  std::int64_t lo = 0;
  std::vector<Integer> c;

  bool empty() const { return c.empty(); }

  void add_shifted(const IntPoly& o, const Integer& s, std::int64_t shift) {
    if (o.c.empty()) return;
    std::int64_t olo = o.lo + shift;
    std::int64_t ohi = olo + static_cast<std::int64_t>(o.c.size()) - 1;
    if (c.empty()) {
      lo = olo;
      c.assign(o.c.size(), Integer(0));
    } else {
      std::int64_t hi = lo + static_cast<std::int64_t>(c.size()) - 1;
      std::int64_t nlo = std::min(lo, olo), nhi = std::max(hi, ohi);
      if (nlo < lo) c.insert(c.begin(), static_cast<std::size_t>(lo - nlo), Integer(0));
      lo = nlo;
      c.resize(static_cast<std::size_t>(nhi - nlo + 1), Integer(0));
    }
    std::size_t base = static_cast<std::size_t>(olo - lo);
    for (std::size_t k = 0; k < o.c.size(); ++k)
      mpz_addmul(c[base + k].get_mpz_t(), o.c[k].get_mpz_t(), s.get_mpz_t());
  }

  void add_term(std::int64_t e, const Integer& v) {
    IntPoly t;
    t.lo = e;
    t.c.push_back(1);
    add_shifted(t, v, 0);
  }
};

// Edge weights rescaled to integers: w_k = coef_k / den.
struct ScaledWeights {
  std::vector<Integer> coef;
  std::vector<std::int64_t> qexp;
  Integer den = 1;
};

inline ScaledWeights scale_weights(const WeightedGraph& g) {
  ScaledWeights s;
  for (const auto& e : g.edges())
    mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), e.w.coeff.get_den().get_mpz_t());
  for (const auto& e : g.edges()) {
    s.coef.push_back(e.w.coeff.get_num() * (s.den / e.w.coeff.get_den()));
    s.qexp.push_back(e.w.qexp);
  }
  return s;
}

// Every perfect matching has V/2 edges, so M = M_scaled / den^(V/2).
inline LaurentPoly unscale(const IntPoly& p, const Integer& den, std::size_t nv) {
  Integer d;
  mpz_pow_ui(d.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(nv / 2));
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (p.c[k] == 0) continue;
    Rational r(p.c[k], d);
    r.canonicalize();
    terms.emplace_back(p.lo + static_cast<std::int64_t>(k), r);
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace detail

// Oracle: depth-first enumeration of all perfect matchings.
inline LaurentPoly matching_poly_brute(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return LaurentPoly::one();
  if (n % 2) return LaurentPoly::zero();
  auto sw = detail::scale_weights(g);
  std::vector<char> matched(n, 0);
  std::vector<std::size_t> free_deg(n);
  for (std::size_t v = 0; v < n; ++v) free_deg[v] = g.degree(v);
  detail::IntPoly acc;
  std::vector<Integer> prod(n / 2 + 1);
  prod[0] = 1;

  auto mark = [&](std::size_t v, int delta) {
    for (auto e : g.incident(v)) {
      std::size_t w = g.other(e, v);
      free_deg[w] = static_cast<std::size_t>(static_cast<long>(free_deg[w]) + delta);
    }
  };

  // depth = number of edges chosen so far, lowest = first candidate for the next unmatched vertex
  auto rec = [&](auto&& self, std::size_t lowest, std::size_t depth, std::int64_t qe) -> void {
    while (lowest < n && matched[lowest]) ++lowest;
    if (lowest == n) {
      acc.add_term(qe, prod[depth]);
      return;
    }
    const std::size_t v = lowest;
    matched[v] = 1;
    mark(v, -1);
    for (auto e : g.incident(v)) {
      std::size_t w = g.other(e, v);
      if (matched[w]) continue;
      matched[w] = 1;
      mark(w, -1);
      bool dead = false;
      for (std::size_t x : {v, w}) {
        for (auto f : g.incident(x)) {
          std::size_t y = g.other(f, x);
          if (!matched[y] && free_deg[y] == 0) dead = true;
        }
      }
      if (!dead) {
        prod[depth + 1] = prod[depth] * sw.coef[e];
        self(self, v + 1, depth + 1, qe + sw.qexp[e]);
      }
      mark(w, +1);
      matched[w] = 0;
    }
    mark(v, +1);
    matched[v] = 0;
  };
  rec(rec, 0, 0, 0);
  return detail::unscale(acc, sw.den, n);
}

struct SweepOrder {
  std::string name;
  std::vector<std::size_t> order;  // order[k] = vertex processed k-th
  std::size_t bandwidth = 0;
};

inline constexpr std::size_t kDefaultFrontierBudget = 30;

// Candidate sweeps: columns (x then y) first, then rows and the two diagonals.
inline SweepOrder choose_sweep(const WeightedGraph& g) {
  using Key = std::array<std::int64_t, 2>;
  struct Cand {
    const char* name;
    Key (*key)(const Vertex&);
  };
  static const Cand cands[] = {
      {"columns", [](const Vertex& v) { return Key{v.x, v.y}; }},
      {"rows", [](const Vertex& v) { return Key{v.y, v.x}; }},
      {"diagonal+", [](const Vertex& v) { return Key{v.x + v.y, v.x}; }},
      {"diagonal-", [](const Vertex& v) { return Key{v.y - v.x, v.x}; }},
  };
  SweepOrder best;
  bool have = false;
  const std::size_t n = g.vertex_count();
  for (const auto& c : cands) {
    SweepOrder s;
    s.name = c.name;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
      return c.key(g.vertex(a)) < c.key(g.vertex(b));
    });
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[s.order[k]] = k;
    for (const auto& e : g.edges()) {
      std::size_t d = pos[e.u] > pos[e.v] ? pos[e.u] - pos[e.v] : pos[e.v] - pos[e.u];
      s.bandwidth = std::max(s.bandwidth, d);
    }
    if (!have || s.bandwidth < best.bandwidth) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

// Profile sweep: the state after vertex k is the set of later vertices within
// the bandwidth that are already matched.
inline LaurentPoly matching_poly_dp(const WeightedGraph& g,
                                    std::size_t frontier_budget = kDefaultFrontierBudget) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return LaurentPoly::one();
  if (n % 2) return LaurentPoly::zero();
  SweepOrder sweep = choose_sweep(g);
  if (sweep.bandwidth > frontier_budget || sweep.bandwidth > 62)
    throw Error(Errc::FrontierTooWide, "frontier of " + std::to_string(sweep.bandwidth) +
                                           " bits exceeds budget of " +
                                           std::to_string(frontier_budget));
  auto sw = detail::scale_weights(g);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[sweep.order[k]] = k;

  struct Fwd {
    std::size_t offset;
    std::size_t edge;
  };
  std::vector<std::vector<Fwd>> fwd(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::size_t a = pos[g.edge(e).u], b = pos[g.edge(e).v];
    if (a > b) std::swap(a, b);
    fwd[a].push_back({b - a, e});
  }

  using Map = std::unordered_map<std::uint64_t, detail::IntPoly>;
  Map cur, next;
  detail::IntPoly unit;
  unit.c.push_back(1);
  cur.emplace(0, std::move(unit));
  for (std::size_t k = 0; k < n; ++k) {
    next.clear();
    for (auto& [mask, poly] : cur) {
      if (mask & 1) {
        auto& slot = next[mask >> 1];
        if (slot.empty())
          slot = std::move(poly);
        else
          slot.add_shifted(poly, Integer(1), 0);
        continue;
      }
      for (const auto& f : fwd[k]) {
        std::uint64_t bit = std::uint64_t{1} << f.offset;
        if (mask & bit) continue;
        next[(mask | bit) >> 1].add_shifted(poly, sw.coef[f.edge], sw.qexp[f.edge]);
      }
    }
    std::swap(cur, next);
    if (cur.empty()) return LaurentPoly::zero();
  }
  auto it = cur.find(0);
  if (it == cur.end()) return LaurentPoly::zero();
  return detail::unscale(it->second, sw.den, n);
}

enum class Engine { Brute, Dp };

inline const char* engine_name(Engine e) { return e == Engine::Brute ? "brute" : "dp"; }

inline LaurentPoly matching_poly(const WeightedGraph& g, Engine e) {
  return e == Engine::Brute ? matching_poly_brute(g) : matching_poly_dp(g);
}

}  // namespace cruciform
