#pragma once

#include <functional>
#include <map>
#include <vector>

#include "graph.hpp"
#include "report.hpp"
#include "schur.hpp"

namespace cruciform {

// Tile weights on a dented semihexagon, rows counted from the base starting at 1.
//  UnitQ      right-tilting in row i -> q^i, left-tilting -> 1
//  Wt         right-tilting in row i -> x q^i, left-tilting -> y
//  WtBar      right-tilting on the k-th down triangle -> x q^k, left-tilting on the k-th -> y q^k
//  WtBarCount j-th right-tilting in its row -> x q^j, j-th left-tilting -> y q^j
enum class SemihexWeighting { UnitQ, Wt, WtBar, WtBarCount };

inline const char* weighting_name(SemihexWeighting w) {
  switch (w) {
    case SemihexWeighting::UnitQ: return "unit-q";
    case SemihexWeighting::Wt: return "wt";
    case SemihexWeighting::WtBar: return "wtbar";
    case SemihexWeighting::WtBarCount: return "wtbar-count";
  }
  return "?";
}

inline void require_dents(std::int64_t a, std::int64_t b, const IntSet& dents) {
  if (a < 0 || b < 0) throw Error(Errc::BadDents, "semihexagon sides must be nonnegative");
  if (static_cast<std::int64_t>(dents.size()) != a)
    throw Error(Errc::BadDents, "expected " + std::to_string(a) + " dents");
  for (std::size_t k = 0; k < dents.size(); ++k) {
    if (dents[k] < 1 || dents[k] > a + b) throw Error(Errc::BadDents, "dent outside [1, a+b]");
    if (k > 0 && dents[k] <= dents[k - 1]) throw Error(Errc::BadDents, "dents must be strictly increasing");
  }
}

inline IntSet complement_in(std::int64_t n, const IntSet& s) {
  IntSet r;
  std::size_t p = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (p < s.size() && s[p] == k)
      ++p;
    else
      r.push_back(k);
  }
  return r;
}

namespace detail {

struct Lozenge {
  bool right;       // right-tilting pairs up p with down p, left-tilting with down p-1
  std::int64_t down;  // index of the down triangle in its row
};

inline LaurentMonomial lozenge_weight(SemihexWeighting wt, std::int64_t row, const Lozenge& z,
                                      std::int64_t rank, const LaurentMonomial& x,
                                      const LaurentMonomial& y) {
  switch (wt) {
    case SemihexWeighting::UnitQ: return z.right ? LaurentMonomial::q(row) : LaurentMonomial::q(0);
    case SemihexWeighting::Wt: return z.right ? x * LaurentMonomial::q(row) : y;
    case SemihexWeighting::WtBar: return (z.right ? x : y) * LaurentMonomial::q(z.down);
    case SemihexWeighting::WtBarCount: return (z.right ? x : y) * LaurentMonomial::q(rank);
  }
  return {};
}

}  // namespace detail

// Row-by-row enumeration: in each row every free up triangle tilts right or left;
// unused down triangles are covered by vertical lozenges that block the row above.
inline LaurentPoly semihex_gf_brute(std::int64_t a, std::int64_t b, const IntSet& dents,
                                    SemihexWeighting wt, const LaurentMonomial& x = LaurentMonomial::q(0),
                                    const LaurentMonomial& y = LaurentMonomial::q(0)) {
  require_dents(a, b, dents);
  LaurentPoly acc;
  if (a == 0) return LaurentPoly::one();
  std::vector<detail::Lozenge> row_tiles;
  std::function<void(std::int64_t, const IntSet&, const LaurentMonomial&)> rec =
      [&](std::int64_t i, const IntSet& free_ups, const LaurentMonomial& w) {
        if (i > a) {
          acc += LaurentPoly::from(w);
          return;
        }
        const std::int64_t downs = a + b - i;  // row i has a+b-i+1 ups
        const std::size_t nf = free_ups.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nf); ++mask) {
          std::vector<char> used(static_cast<std::size_t>(downs + 1), 0);
          std::vector<detail::Lozenge> tiles;
          bool ok = true;
          for (std::size_t t = 0; t < nf && ok; ++t) {
            bool right = (mask >> t) & 1;
            std::int64_t d = right ? free_ups[t] : free_ups[t] - 1;
            if (d < 1 || d > downs || used[static_cast<std::size_t>(d)]) ok = false;
            else {
              used[static_cast<std::size_t>(d)] = 1;
              tiles.push_back({right, d});
            }
          }
          if (!ok) continue;
          IntSet next_free;
          bool vertical = false;
          for (std::int64_t k = 1; k <= downs; ++k) {
            if (used[static_cast<std::size_t>(k)])
              next_free.push_back(k);
            else
              vertical = true;
          }
          if (i == a && vertical) continue;
          LaurentMonomial rw = w;
          std::int64_t nr = 0, nl = 0;
          for (const auto& z : tiles) {
            std::int64_t rank = z.right ? ++nr : ++nl;
            rw = rw * detail::lozenge_weight(wt, i, z, rank, x, y);
          }
          rec(i + 1, next_free, rw);
        }
      };
  // Free ups are listed left to right, so rank counts from the left.
  rec(1, complement_in(a + b, dents), LaurentMonomial::q(0));
  return acc;
}

inline LaurentPoly semihex_gf_brute(std::int64_t a, std::int64_t b, const IntSet& dents, SemihexWeighting wt,
                                    const Rational& x, const Rational& y) {
  return semihex_gf_brute(a, b, dents, wt, LaurentMonomial(x, 0), LaurentMonomial(y, 0));
}

// Product side of the q-analogue of the dented semihexagon count, coded without the triangle operator.
inline LaurentPoly semihex_unit_formula(std::int64_t a, const IntSet& dents) {
  LaurentPoly num = LaurentPoly::q(square_stat(dents)), den = LaurentPoly::one();
  for (std::int64_t i = 1; i <= a; ++i)
    for (std::int64_t j = i + 1; j <= a; ++j) {
      num *= LaurentPoly::q(dents[static_cast<std::size_t>(j - 1)]) - LaurentPoly::q(dents[static_cast<std::size_t>(i - 1)]);
      den *= LaurentPoly::q(j) - LaurentPoly::q(i);
    }
  return poly_exact_div(num, den);
}

inline LaurentPoly semihex_gf_formula(std::int64_t a, std::int64_t b, const IntSet& dents,
                                      SemihexWeighting wt, const LaurentMonomial& x = LaurentMonomial::q(0),
                                      const LaurentMonomial& y = LaurentMonomial::q(0)) {
  require_dents(a, b, dents);
  LaurentPoly base = semihex_unit_formula(a, dents);
  if (wt == SemihexWeighting::UnitQ) return base;
  std::int64_t S = square_stat(complement_in(a + b, dents));
  LaurentMonomial pre = x.pow(a * b) * (y / x).pow(S);
  if (wt == SemihexWeighting::Wt) return base * pre;
  if (wt == SemihexWeighting::WtBar) return base * pre * LaurentMonomial::q(a * b * (b - a) / 2 + a * S);
  throw Error(Errc::Unsupported, "no closed form for the count-based wt-bar reading");
}

inline LaurentPoly semihex_gf_formula(std::int64_t a, std::int64_t b, const IntSet& dents, SemihexWeighting wt,
                                      const Rational& x, const Rational& y) {
  return semihex_gf_formula(a, b, dents, wt, LaurentMonomial(x, 0), LaurentMonomial(y, 0));
}

inline VerificationReport verify_semihex(std::int64_t a, std::int64_t b, const IntSet& dents, SemihexWeighting wt,
                                         const LaurentMonomial& x = LaurentMonomial::q(0),
                                         const LaurentMonomial& y = LaurentMonomial::q(0)) {
  Stopwatch sw;
  nlohmann::json inst = {{"a", a}, {"b", b}, {"dents", dents}, {"weighting", weighting_name(wt)}};
  if (wt != SemihexWeighting::UnitQ) {
    inst["x"] = poly_json(LaurentPoly::from(x));
    inst["y"] = poly_json(LaurentPoly::from(y));
  }
  return make_report(wt == SemihexWeighting::UnitQ ? "eq3" : wt == SemihexWeighting::Wt ? "lemma27" : "lemma28", inst,
                     semihex_gf_brute(a, b, dents, wt, x, y), semihex_gf_formula(a, b, dents, wt, x, y), sw);
}

struct SemihexGraph {
  WeightedGraph graph;
  std::map<std::int64_t, std::size_t> base;  // base position -> vertex of the bottom-row up triangle
};

// Dual graph of SH_{a,b} with the given base positions removed (any number of them).
// Up (i,k) sits at (2k+i-1, 2i), down (i,k) at (2k+i, 2i+1).
inline SemihexGraph semihex_dual_graph(std::int64_t a, std::int64_t b, const IntSet& removed,
                                       SemihexWeighting wt, const LaurentMonomial& x = LaurentMonomial::q(0),
                                       const LaurentMonomial& y = LaurentMonomial::q(0)) {
  if (wt == SemihexWeighting::WtBarCount)
    throw Error(Errc::Unsupported, "count-based weights depend on the whole row, not on single edges");
  if (a < 1 || b < 0) throw Error(Errc::BadDents, "semihexagon needs a >= 1, b >= 0");
  SemihexGraph out;
  auto& g = out.graph;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> up, dn;
  std::vector<char> gone(static_cast<std::size_t>(a + b + 1), 0);
  for (auto r : removed) {
    if (r < 1 || r > a + b) throw Error(Errc::BadDents, "removed position outside [1, a+b]");
    gone[static_cast<std::size_t>(r)] = 1;
  }
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t k = 1; k <= a + b - i + 1; ++k) {
      if (i == 1 && gone[static_cast<std::size_t>(k)]) continue;
      up[{i, k}] = g.add_vertex(2 * k + i - 1, 2 * i);
      if (i == 1) out.base[k] = up[{i, k}];
    }
    for (std::int64_t k = 1; k <= a + b - i; ++k) dn[{i, k}] = g.add_vertex(2 * k + i, 2 * i + 1);
  }
  for (std::int64_t i = 1; i <= a; ++i) {
    for (std::int64_t k = 1; k <= a + b - i; ++k) {
      std::size_t d = dn.at({i, k});
      if (auto it = up.find({i, k}); it != up.end())
        g.add_edge(it->second, d, detail::lozenge_weight(wt, i, {true, k}, 0, x, y));
      if (auto it = up.find({i, k + 1}); it != up.end())
        g.add_edge(it->second, d, detail::lozenge_weight(wt, i, {false, k}, 0, x, y));
      if (i < a) g.add_edge(d, up.at({i + 1, k}), LaurentMonomial::q(0));
    }
  }
  return out;
}

}  // namespace cruciform
