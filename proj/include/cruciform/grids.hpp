#pragma once

#include <optional>
#include <string>
#include <vector>

#include "closedform.hpp"
#include "toys.hpp"

namespace cruciform {

struct GridOptions {
  std::optional<std::int64_t> m, n, s, d;
  std::int64_t max_ab = 0;  // 0: per-lemma default
  MegaExponent exponent = MegaExponent::Nominal;
  KBarTop bar_top = KBarTop::FLeft;
};

inline const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"spider", "star",   "split",  "forced", "sandwich1",
                                              "sandwich2", "mega1", "mega2", "eq3",   "lemma27",
                                              "lemma28", "krat5",  "krat6",  "lemma211", "lemma212"};
  return names;
}

inline std::vector<ARWeights> ar_weight_grid() {
  auto c = [](long v) { return LaurentMonomial(Rational(v), 0); };
  return {{c(1), c(1), c(1), c(1)}, {c(1), c(2), c(1), c(3)}};
}

inline std::vector<std::pair<Rational, Rational>> xy_grid() {
  return {{Rational(1), Rational(1)}, {Rational(2), Rational(3)}, {Rational(5), Rational(2)}};
}

inline std::vector<std::pair<LaurentMonomial, LaurentMonomial>> krat6_xy_grid() {
  return {{LaurentMonomial(Rational(2), 0), LaurentMonomial(Rational(3), 0)},
          {LaurentMonomial::q(3), LaurentMonomial::q(2)},
          {LaurentMonomial(make_rational(-1, 2), 1), LaurentMonomial(Rational(5), 0)},
          {LaurentMonomial::q(-1), LaurentMonomial(Rational(3), 2)}};
}

// Every tuple with all entries >= 1, a+b+c+d = m+n-1, max(a,c) <= m, max(b,d) <= n and m+n <= sum_max.
inline std::vector<CruciformParams> balanced_tuples(std::int64_t sum_max) {
  std::vector<CruciformParams> out;
  for (std::int64_t m = 1; m < sum_max; ++m)
    for (std::int64_t n = 1; m + n <= sum_max; ++n)
      for (std::int64_t a = 1; a <= m; ++a)
        for (std::int64_t b = 1; b <= n; ++b)
          for (std::int64_t c = 1; c <= m; ++c) {
            std::int64_t d = m + n - 1 - a - b - c;
            if (d >= 1 && d <= n) out.push_back({m, n, a, b, c, d});
          }
  return out;
}

inline std::vector<std::array<long, 3>> theorem_weight_grid() { return {{1, 1, 1}, {1, 2, 3}, {2, 5, 7}}; }

inline std::vector<VerificationReport> lemma_grid(const std::string& name, const GridOptions& o = {}) {
  std::vector<VerificationReport> out;
  if (name == "spider" || name == "star" || name == "split" || name == "forced") return rewrite_corpus_checks(name);
  if (name == "sandwich1" || name == "sandwich2" || name == "mega1" || name == "mega2") {
    const int kind = name.back() - '0';
    const bool mega = name[0] == 'm';
    std::int64_t mmax = o.m.value_or(3), nmax = o.n.value_or(4);
    for (std::int64_t m = o.m ? mmax : 1; m <= mmax; ++m)
      for (std::int64_t n = std::max<std::int64_t>(mega ? m + 1 : std::max<std::int64_t>(2, m), o.n ? nmax : 0);
           n <= nmax; ++n)
        for (const auto& w : ar_weight_grid())
          for (auto caps : {CapKind::Uniform, CapKind::Random})
            out.push_back(mega ? verify_mega_sandwich(kind, m, n, w, caps, o.exponent, o.bar_top)
                               : verify_sandwich(kind, m, n, w, caps));
    return out;
  }
  if (name == "eq3") {
    const std::int64_t mx = o.max_ab ? o.max_ab : 6;
    for (std::int64_t a = 1; a <= mx; ++a)
      for (std::int64_t b = 0; a + b <= mx; ++b)
        for_each_subset(range_set(1, a + b), static_cast<std::size_t>(a),
                        [&](const IntSet& D, const IntSet&) { out.push_back(verify_semihex(a, b, D, SemihexWeighting::UnitQ)); });
    return out;
  }
  if (name == "lemma27" || name == "lemma28") {
    const std::int64_t mx = o.max_ab ? o.max_ab : 3;
    const auto wt = name == "lemma27" ? SemihexWeighting::Wt : SemihexWeighting::WtBar;
    for (std::int64_t a = 1; a <= mx; ++a)
      for (std::int64_t b = 0; b <= mx; ++b)
        for (const auto& [x, y] : xy_grid())
          for_each_subset(range_set(1, a + b), static_cast<std::size_t>(a), [&](const IntSet& D, const IntSet&) {
            out.push_back(verify_semihex(a, b, D, wt, LaurentMonomial(x, 0), LaurentMonomial(y, 0)));
          });
    return out;
  }
  if (name == "krat5") {
    const std::int64_t mx = o.max_ab ? o.max_ab : 6;
    for (std::int64_t m = 1; 2 * m <= mx; ++m)
      for (std::int64_t d = 0; 2 * m + d <= mx; ++d) {
        if ((o.m && *o.m != m) || (o.d && *o.d != d)) continue;
        out.push_back(krat5_verify(m, d, range_set(1, 2 * m + d)));
        IntSet shifted;
        for (std::int64_t k = 0; k < 2 * m + d; ++k) shifted.push_back(2 + k * (k + 1) / 2 + k);
        out.push_back(krat5_verify(m, d, shifted));
      }
    return out;
  }
  if (name == "krat6") {
    for (std::int64_t m = o.m.value_or(0); m <= o.m.value_or(4); ++m)
      for (std::int64_t s = o.s.value_or(0); s <= std::min(m, o.s.value_or(2)); ++s)
        for (const auto& [x, y] : krat6_xy_grid()) out.push_back(krat6_verify(m, s, x, y));
    return out;
  }
  if (name == "lemma211") {
    const std::int64_t mx = o.max_ab ? o.max_ab : 7;
    for (std::int64_t m = 1; 2 * m <= mx; ++m)
      for (std::int64_t d = 0; 2 * m + d <= mx; ++d) {
        if ((o.m && *o.m != m) || (o.d && *o.d != d)) continue;
        out.push_back(schurlem2_verify(m, d));
      }
    return out;
  }
  if (name == "lemma212") {
    const std::int64_t mx = o.max_ab ? o.max_ab : 2;
    for (std::int64_t m = 1; m <= mx; ++m)
      for (std::int64_t n = 1; n <= mx; ++n)
        for (std::int64_t a = 1; a <= mx; ++a)
          for (std::int64_t b = 1; b <= mx; ++b)
            for_each_subset(range_set(1, a + b), static_cast<std::size_t>(a), [&](const IntSet& A, const IntSet& B) {
              out.push_back(schurlem_verify(m, n, a, b, A, B));
            });
    return out;
  }
  throw Error(Errc::InvalidArgument, "unknown lemma '" + name + "'");
}

}  // namespace cruciform
