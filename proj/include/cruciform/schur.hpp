#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "exactmath.hpp"

namespace cruciform {

using IntSet = std::vector<std::int64_t>;
using Partition = std::vector<std::int64_t>;

inline void require_strictly_increasing(const IntSet& u, const char* what) {
  for (std::size_t k = 1; k < u.size(); ++k)
    if (u[k] <= u[k - 1]) throw Error(Errc::InvalidArgument, std::string(what) + " must be strictly increasing");
}

// (x_n - n, ..., x_1 - 1), largest part first.
inline Partition lambda_of_set(const IntSet& x) {
  require_strictly_increasing(x, "position set");
  Partition p;
  for (std::size_t k = x.size(); k-- > 0;) p.push_back(x[k] - static_cast<std::int64_t>(k + 1));
  return p;
}

inline std::int64_t square_stat(const IntSet& u) {
  require_strictly_increasing(u, "set");
  std::int64_t s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] - static_cast<std::int64_t>(k + 1);
  return s;
}

inline LaurentPoly triangle_prod(const IntSet& u) {
  require_strictly_increasing(u, "set");
  LaurentPoly r = LaurentPoly::one();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) r *= LaurentPoly::q(u[j]) - LaurentPoly::q(u[i]);
  return r;
}

inline IntSet range_set(std::int64_t lo, std::int64_t hi) {
  IntSet r;
  for (std::int64_t k = lo; k <= hi; ++k) r.push_back(k);
  return r;
}

// s_{lambda(X)}(q, ..., q^{|X|}); the empty set gives the empty partition, value 1.
inline LaurentPoly schur_principal(const IntSet& x) {
  if (x.empty()) return LaurentPoly::one();
  auto num = triangle_prod(x) * LaurentMonomial::q(square_stat(x));
  return poly_exact_div(num, triangle_prod(range_set(1, static_cast<std::int64_t>(x.size()))));
}

// Oracle: sum of q^{|pi|} over column-strict plane partitions of shape lambda with
// entries in [N] (rows weakly decreasing, columns strictly decreasing).
inline LaurentPoly schur_by_plane_partitions(const Partition& lambda, std::int64_t N) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (std::int64_t c = 0; c < lambda[r]; ++c) cells.emplace_back(r, static_cast<std::size_t>(c));
  std::vector<std::vector<std::int64_t>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<std::size_t>(std::max<std::int64_t>(lambda[r], 0)), 0);
  LaurentPoly acc;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t sum) {
    if (k == cells.size()) {
      acc += LaurentPoly::q(sum);
      return;
    }
    auto [r, c] = cells[k];
    std::int64_t hi = N;
    if (c > 0) hi = std::min(hi, t[r][c - 1]);
    if (r > 0) hi = std::min(hi, t[r - 1][c] - 1);
    for (std::int64_t v = 1; v <= hi; ++v) {
      t[r][c] = v;
      rec(k + 1, sum + v);
    }
  };
  rec(0, 0);
  return acc;
}

// All k-subsets of `ground` in lexicographic order of characteristic vectors.
inline void for_each_subset(const IntSet& ground, std::size_t k,
                            const std::function<void(const IntSet&, const IntSet&)>& fn) {
  const std::size_t n = ground.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IntSet in, out;
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p < k && idx[p] == i) {
        in.push_back(ground[i]);
        ++p;
      } else {
        out.push_back(ground[i]);
      }
    }
    fn(in, out);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace cruciform
