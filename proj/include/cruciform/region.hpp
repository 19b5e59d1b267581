#pragma once

#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "graph.hpp"

namespace cruciform {

struct CruciformParams {
  std::int64_t m = 1, n = 1, a = 1, b = 1, c = 1, d = 1;

  bool all_positive() const { return m >= 1 && n >= 1 && a >= 1 && b >= 1 && c >= 1 && d >= 1; }

  std::string describe() const {
    std::ostringstream os;
    os << "(m,n,a,b,c,d)=(" << m << ',' << n << ',' << a << ',' << b << ',' << c << ',' << d << ')';
    return os.str();
  }
  bool operator==(const CruciformParams&) const = default;
};

// Empty string when balanced, otherwise the first violated condition.
inline std::string balance_violation(const CruciformParams& p) {
  if (!p.all_positive()) return "all parameters must be >= 1";
  if (p.a + p.b + p.c + p.d != p.m + p.n - 1) return "a+b+c+d must equal m+n-1";
  if (std::max(p.a, p.c) > p.m) return "max(a,c) must be <= m";
  if (std::max(p.b, p.d) > p.n) return "max(b,d) must be <= n";
  return {};
}

inline bool is_balanced(const CruciformParams& p) { return balance_violation(p).empty(); }

inline void require_balanced(const CruciformParams& p) {
  auto why = balance_violation(p);
  if (!why.empty()) throw Error(Errc::Unbalanced, p.describe() + ": " + why);
}

struct WeightSpec {
  Rational e{1}, f{1}, h{1};
  std::int64_t c = 0;

  WeightSpec() = default;
  WeightSpec(Rational e_, Rational f_, Rational h_, std::int64_t c_)
      : e(std::move(e_)), f(std::move(f_)), h(std::move(h_)), c(c_) {
    if (e == 0 || f == 0 || h == 0) throw Error(Errc::InvalidArgument, "weights must be nonzero");
    if (c < 0) throw Error(Errc::InvalidArgument, "c must be nonnegative");
  }
  LaurentMonomial em() const { return {e, 0}; }
  LaurentMonomial fm() const { return {f, 0}; }
  LaurentMonomial hm() const { return {h, 0}; }
  // g/h = q^{-c} f/e
  LaurentMonomial g() const { return {f * h / e, -c}; }
};

struct Cell {
  std::int64_t i = 0, j = 0;
  bool white() const { return ((i + j) % 2 + 2) % 2 == 0; }
  bool operator==(const Cell&) const = default;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

enum class RegionKind { Cruciform, AztecRectangle, SemihexagonDual };

struct Region {
  std::set<Cell, CellOrder> cells;
  RegionKind kind = RegionKind::Cruciform;

  std::size_t white_count() const {
    std::size_t k = 0;
    for (const auto& c : cells) k += c.white();
    return k;
  }
  std::size_t black_count() const { return cells.size() - white_count(); }
};

enum class DominoKind { EvenVertical, OddVertical, EvenHorizontal, OddHorizontal };

inline const char* domino_kind_name(DominoKind k) {
  switch (k) {
    case DominoKind::EvenVertical: return "EvenVertical";
    case DominoKind::OddVertical: return "OddVertical";
    case DominoKind::EvenHorizontal: return "EvenHorizontal";
    case DominoKind::OddHorizontal: return "OddHorizontal";
  }
  return "?";
}

// Which coordinate of the white cell feeds the exponent of g and h.
enum class ExponentRule { SumIJ, Row, Column };

struct DominoConvention {
  bool even_vertical_white_low = true;
  bool even_horizontal_white_left = true;
  ExponentRule rule = ExponentRule::Row;
  std::int64_t offset = 0;

  std::string describe() const {
    std::ostringstream os;
    os << "vertical:" << (even_vertical_white_low ? "white-low" : "white-high")
       << " horizontal:" << (even_horizontal_white_left ? "white-left" : "white-right") << " exponent:"
       << (rule == ExponentRule::SumIJ ? "i+j" : rule == ExponentRule::Row ? "j" : "i")
       << (offset >= 0 ? "+" : "") << offset;
    return os.str();
  }
  bool operator==(const DominoConvention&) const = default;
};

// Fixed by calibration against the closed form; see calibrate_convention.
inline constexpr DominoConvention kFrozenConvention{true, true, ExponentRule::Row, 0};

// Cell (i,j) sits at (X,Y) = (i+j+2, j-i+1) in the rotated graph frame.
inline Cell cell_from_graph(std::int64_t X, std::int64_t Y) {
  return {(X - Y - 1) / 2, (X + Y - 3) / 2};
}
inline std::pair<std::int64_t, std::int64_t> graph_from_cell(const Cell& c) {
  return {c.i + c.j + 2, c.j - c.i + 1};
}

inline DominoKind classify_domino(const Cell& c1, const Cell& c2,
                                  const DominoConvention& conv = kFrozenConvention) {
  std::int64_t di = c2.i - c1.i, dj = c2.j - c1.j;
  const Cell& w = c1.white() ? c1 : c2;
  const Cell& k = c1.white() ? c2 : c1;
  if (di == 0 && (dj == 1 || dj == -1)) {
    bool white_low = w.j < k.j;
    return white_low == conv.even_vertical_white_low ? DominoKind::EvenVertical
                                                     : DominoKind::OddVertical;
  }
  if (dj == 0 && (di == 1 || di == -1)) {
    bool white_left = w.i < k.i;
    return white_left == conv.even_horizontal_white_left ? DominoKind::EvenHorizontal
                                                         : DominoKind::OddHorizontal;
  }
  throw Error(Errc::NotAdjacent, "cells do not share an edge");
}

inline std::int64_t position_exponent(const Cell& white, const DominoConvention& conv) {
  switch (conv.rule) {
    case ExponentRule::SumIJ: return white.i + white.j + conv.offset;
    case ExponentRule::Row: return white.j + conv.offset;
    case ExponentRule::Column: return white.i + conv.offset;
  }
  return 0;
}

inline LaurentMonomial domino_weight(DominoKind kind, const Cell& white, const WeightSpec& w,
                                     const DominoConvention& conv = kFrozenConvention) {
  if (!white.white()) throw Error(Errc::InvalidArgument, "weight needs the white cell");
  switch (kind) {
    case DominoKind::OddVertical: return w.em();
    case DominoKind::EvenHorizontal: return w.fm();
    case DominoKind::EvenVertical: return w.g() * LaurentMonomial::q(position_exponent(white, conv));
    case DominoKind::OddHorizontal: return w.hm() * LaurentMonomial::q(position_exponent(white, conv));
  }
  return {};
}

// Aztec rectangle cells whose graph-frame box is [X0, X0+2cols] x [Y0, Y0+2rows].
inline void add_aztec_cells(Region& r, std::int64_t rows, std::int64_t cols, std::int64_t X0,
                            std::int64_t Y0) {
  for (std::int64_t X = X0; X <= X0 + 2 * cols; ++X)
    for (std::int64_t Y = Y0; Y <= Y0 + 2 * rows; ++Y)
      if (((X + Y) % 2 + 2) % 2 == 1) r.cells.insert(cell_from_graph(X, Y));
}

// m rows of n diamonds; the origin cell (0,0) is the lowest white cell.
inline Region build_aztec_rectangle(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(Errc::InvalidArgument, "Aztec rectangle needs m,n >= 1");
  Region r;
  r.kind = RegionKind::AztecRectangle;
  add_aztec_cells(r, m, n, 1, 1);
  return r;
}

inline Region build_cruciform(const CruciformParams& p) {
  require_balanced(p);
  Region r;
  r.kind = RegionKind::Cruciform;
  add_aztec_cells(r, p.n + p.a + p.c + 1, p.m, 1, 1);
  add_aztec_cells(r, p.n, p.m + p.b + p.d + 1, -2 * p.d, 2 * p.c + 2);
  return r;
}

inline WeightedGraph dual_graph(const Region& r, const WeightSpec& w,
                                const DominoConvention& conv = kFrozenConvention) {
  if (r.cells.empty()) throw Error(Errc::InvalidArgument, "empty region");
  WeightedGraph g;
  std::vector<Cell> cells(r.cells.begin(), r.cells.end());
  for (const auto& c : cells) g.add_vertex(c.i, c.j);
  auto index = [&](const Cell& c) -> std::size_t {
    auto it = std::lower_bound(cells.begin(), cells.end(), c, CellOrder{});
    if (it == cells.end() || !(*it == c)) return WeightedGraph::npos;
    return static_cast<std::size_t>(it - cells.begin());
  };
  for (std::size_t u = 0; u < cells.size(); ++u) {
    for (Cell nb : {Cell{cells[u].i + 1, cells[u].j}, Cell{cells[u].i, cells[u].j + 1}}) {
      std::size_t v = index(nb);
      if (v == WeightedGraph::npos) continue;
      DominoKind k = classify_domino(cells[u], nb, conv);
      const Cell& white = cells[u].white() ? cells[u] : nb;
      g.add_edge(u, v, domino_weight(k, white, w, conv));
    }
  }
  return g;
}

inline std::string region_text(const Region& r) {
  std::ostringstream os;
  for (const auto& c : r.cells) os << c.i << ' ' << c.j << ' ' << (c.white() ? "white" : "black") << '\n';
  return os.str();
}

}  // namespace cruciform
