#pragma once

#include <algorithm>

#include "report.hpp"
#include "schur.hpp"

namespace cruciform {

inline nlohmann::json set_json(const IntSet& s) { return nlohmann::json(s); }

inline LaurentPoly schur_pair_sum(const IntSet& ground, std::size_t size_a) {
  LaurentPoly acc;
  for_each_subset(ground, size_a, [&](const IntSet& A, const IntSet& B) {
    acc += schur_principal(A) * schur_principal(B);
  });
  return acc;
}

// Schur factors on the right are taken in m and m+d variables (one per element).
inline VerificationReport krat5_verify(std::int64_t m, std::int64_t d, const IntSet& T) {
  if (m < 1 || d < 0) throw Error(Errc::InvalidArgument, "need m >= 1, d >= 0");
  if (static_cast<std::int64_t>(T.size()) != 2 * m + d) throw Error(Errc::InvalidArgument, "|T| must be 2m+d");
  require_strictly_increasing(T, "T");
  Stopwatch sw;
  LaurentPoly lhs = schur_pair_sum(T, static_cast<std::size_t>(m));
  IntSet E, O;
  for (std::size_t k = 0; k < T.size(); ++k) ((k % 2) ? E : O).push_back(T[k]);
  const std::int64_t h = d / 2;
  LaurentPoly sum;
  for_each_subset(range_set(1, m + h), static_cast<std::size_t>(h), [&](const IntSet& K, const IntSet&) {
    IntSet moved;
    for (auto k : K) moved.push_back(T[static_cast<std::size_t>(2 * k - 1)]);
    IntSet e2, o2 = O;
    for (auto v : E)
      if (std::find(moved.begin(), moved.end(), v) == moved.end()) e2.push_back(v);
    o2.insert(o2.end(), moved.begin(), moved.end());
    std::sort(o2.begin(), o2.end());
    sum += schur_principal(e2) * schur_principal(o2);
  });
  Integer two_m;
  mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
  auto r = make_report("krat5", {{"m", m}, {"d", d}, {"T", set_json(T)}}, std::move(lhs),
                       sum * LaurentPoly::constant(Rational(two_m)), sw);
  r.note = "right-hand Schur factors evaluated in m and m+d variables";
  return r;
}

// Both sides multiplied by ((q;q)_m)^{2s} so every quotient becomes a polynomial.
inline VerificationReport krat6_verify(std::int64_t m, std::int64_t s, const LaurentMonomial& x,
                                       const LaurentMonomial& y) {
  if (s < 0 || m < s) throw Error(Errc::InvalidArgument, "need 0 <= s <= m");
  Stopwatch sw;
  const LaurentPoly qm = qpoch_q(1, 1, m);
  LaurentPoly lhs;
  for_each_subset(range_set(0, m), static_cast<std::size_t>(s), [&](const IntSet& K, const IntSet&) {
    std::int64_t ksum = 0;
    for (auto k : K) ksum += k;
    LaurentPoly t = LaurentPoly::from(y.pow(ksum));
    for (std::size_t i = 0; i < K.size(); ++i)
      for (std::size_t j = i + 1; j < K.size(); ++j) t *= poly_pow(LaurentPoly::q(K[j]) - LaurentPoly::q(K[i]), 2);
    for (auto k : K) {
      t *= qpoch(x, 1, k) * qpoch(y, 1, m - k);
      t *= poly_exact_div(qm, qpoch_q(1, 1, k)) * poly_exact_div(qm, qpoch_q(1, 1, m - k));
    }
    lhs += t;
  });
  LaurentPoly rhs = LaurentPoly::from(y.pow(binom(s, 2)) * LaurentMonomial::q(binom(s, 3)));
  for (std::int64_t i = 1; i <= s; ++i) {
    rhs *= qpoch(x, 1, i - 1) * qpoch(y, 1, i - 1) * qpoch(x * y * LaurentMonomial::q(i + s - 2), 1, m - s + 1) *
           qpoch_q(1, 1, i - 1);
    rhs *= poly_exact_div(qm, qpoch_q(1, 1, m - i + 1)) * qm;
  }
  auto r = make_report("krat6",
                       {{"m", m}, {"s", s}, {"x", poly_json(LaurentPoly::from(x))}, {"y", poly_json(LaurentPoly::from(y))}},
                       std::move(lhs), std::move(rhs), sw);
  r.note = "both sides multiplied by (q;q)_m^{2s} = " + poly_pow(qm, 2 * s).to_json();
  return r;
}

inline std::int64_t integral_exponent(const Rational& e, const char* what) {
  if (e.get_den() != 1) throw Error(Errc::NonIntegerExponent, std::string(what) + " = " + rational_text(e));
  return checked_exponent(e.get_num().get_si());
}

// Closed form of the Schur pair sum over [2m+d] with |A| = m, |B| = m+d.
// With cubic_term the exponent carries -s(s-1)(s-2)/3; that term is zero for s <= 2
// and the sum itself equals the form without it for every s tried (s <= 5).
inline LaurentPoly schurlem2_closed(std::int64_t m, std::int64_t d, bool cubic_term = true) {
  if (m < 1 || d < 0) throw Error(Errc::InvalidArgument, "need m >= 1, d >= 0");
  const std::int64_t s = d / 2;
  const bool odd = d % 2;
  Rational e = odd ? Rational(m * (m + 1) * (m + 3 * s + 2), 3) : Rational(m * (m + 1) * (2 * m + 6 * s + 1), 6);
  if (cubic_term) e -= Rational(s * (s - 1) * (s - 2), 3);
  e.canonicalize();
  Integer two_m;
  mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
  LaurentPoly num = poly_pow(LaurentPoly::one() - LaurentPoly::q(1), odd ? 2 * s : s) *
                    LaurentMonomial(Rational(two_m), integral_exponent(e, "schur pair-sum exponent"));
  num *= odd ? hyperq(m + s, 2) * hyperq(m + s + 1, 2) : poly_pow(hyperq(m + s, 2), 2);
  LaurentPoly den = hyperq(m) * hyperq(m + 2 * s + (odd ? 1 : 0));
  for (std::int64_t i = 1; i <= s; ++i) {
    num *= qpoch_q(3, 2, i - 1) * (odd ? qpoch_q(3, 2, i - 1) : qpoch_q(1, 2, i - 1)) *
           qpoch_q(2 * (i + s + (odd ? 1 : 0)), 2, m) * qpoch_q(2, 2, i - 1);
    den *= qpoch_q(2, 2, m + s - i);
  }
  return poly_exact_div(num, den);
}

inline VerificationReport schurlem2_verify(std::int64_t m, std::int64_t d) {
  Stopwatch sw;
  LaurentPoly lhs = schur_pair_sum(range_set(1, 2 * m + d), static_cast<std::size_t>(m));
  return make_report("lemma211", {{"m", m}, {"d", d}}, std::move(lhs), schurlem2_closed(m, d), sw);
}

inline IntSet lifted_set(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b, const IntSet& A) {
  IntSet r = range_set(1, m);
  for (auto v : A) r.push_back(m + v);
  for (std::int64_t k = 1; k <= n; ++k) r.push_back(m + a + b + k);
  return r;
}

inline VerificationReport schurlem_verify(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b,
                                          const IntSet& A, const IntSet& B) {
  if (m < 1 || n < 1 || a < 1 || b < 1) throw Error(Errc::InvalidArgument, "need m,n,a,b >= 1");
  if (static_cast<std::int64_t>(A.size()) != a || static_cast<std::int64_t>(B.size()) != b)
    throw Error(Errc::InvalidArgument, "|A| must be a and |B| must be b");
  IntSet u = A;
  u.insert(u.end(), B.begin(), B.end());
  std::sort(u.begin(), u.end());
  if (u != range_set(1, a + b)) throw Error(Errc::InvalidArgument, "A and B must split [a+b]");
  Stopwatch sw;
  LaurentPoly lhs = schur_principal(lifted_set(m, n, a, b, A)) * schur_principal(lifted_set(m, n, a, b, B));
  LaurentPoly num = LaurentPoly::q(a * b * n + (a + b) * binom(n + 1, 2));
  for (std::int64_t i = 1; i <= a + b; ++i) num *= qpoch_q(i, 1, m) * qpoch_q(a + b - i + 1, 1, n);
  for (std::int64_t j = 1; j <= n; ++j) num *= poly_pow(qpoch_q(a + b + j, 1, m), 2);
  num *= hyperq(a) * hyperq(b) * poly_pow(hyperq(m), 2) * poly_pow(hyperq(n), 2);
  LaurentPoly rhs = poly_exact_div(num, hyperq(m + n + a) * hyperq(m + n + b)) * schur_principal(A) *
                    schur_principal(B);
  return make_report("lemma212", {{"m", m}, {"n", n}, {"a", a}, {"b", b}, {"A", set_json(A)}, {"B", set_json(B)}},
                     std::move(lhs), std::move(rhs), sw);
}

}  // namespace cruciform
