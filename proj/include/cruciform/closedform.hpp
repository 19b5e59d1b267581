#pragma once

#include <array>

#include "aztec.hpp"
#include "identities.hpp"
#include "matching.hpp"
#include "region.hpp"
#include "semihex.hpp"

namespace cruciform {

struct TheoremInstance {
  CruciformParams params;
  WeightSpec weights;
  std::int64_t s = 0;
  bool odd = false;  // |c-a| = 2s+1

  TheoremInstance(const CruciformParams& p, const Rational& e, const Rational& f, const Rational& h)
      : params(p), weights(e, f, h, p.c) {
    require_balanced(p);
    std::int64_t diff = p.c > p.a ? p.c - p.a : p.a - p.c;
    s = diff / 2;
    odd = diff % 2;
  }
};

inline Rational q_exponent_rational(const CruciformParams& p, std::int64_t s) {
  const Rational a(p.a), b(p.b), c(p.c), d(p.d), m(p.m), n(p.n), S(s);
  auto fr = [](long num, long den) { return make_rational(num, den); };
  Rational Q = fr(5, 6) * a + 2 * a * a + fr(1, 6) * a * a * a + fr(1, 2) * a * b - fr(1, 2) * a * b * b +
               fr(2, 3) * c + fr(3, 2) * a * c + fr(1, 2) * a * a * c + fr(1, 2) * b * c - a * b * c -
               fr(1, 2) * b * b * c + fr(5, 2) * c * c - fr(1, 6) * c * c * c + a * d + c * d + c * c * d -
               fr(7, 3) * m - 2 * a * m - b * m + a * b * m + b * b * m - 4 * c * m + b * c * m +
               fr(1, 2) * c * c * m - 2 * d * m - c * d * m + 2 * m * m - b * m * m - fr(1, 2) * c * m * m +
               fr(1, 3) * m * m * m + a * n + fr(3, 2) * a * a * n + fr(1, 2) * b * n + a * b * n + c * n +
               2 * a * c * n + b * c * n - fr(1, 2) * c * c * n + a * d * n + c * d * n - fr(1, 2) * m * n -
               3 * a * m * n - 2 * b * m * n - 2 * c * m * n - 2 * d * m * n + fr(5, 2) * m * m * n -
               fr(1, 2) * a * n * n + fr(1, 2) * b * n * n - fr(1, 2) * c * n * n + 2 * m * n * n -
               fr(2, 3) * S - c * S + c * c * S + m * S - 2 * c * m * S + m * m * S + S * S -
               fr(1, 3) * S * S * S;
  Q.canonicalize();
  return Q;
}

inline std::int64_t q_exponent(const CruciformParams& p, std::int64_t s) {
  require_balanced(p);
  Rational Q = q_exponent_rational(p, s);
  if (Q.get_den() != 1) throw Error(Errc::NonIntegerQ, p.describe() + ": Q = " + rational_text(Q));
  return checked_exponent(Q.get_num().get_si());
}

namespace detail {

// (eg q^{i-1} + hf) and (eg + hf q^i) products shared by every form of the right-hand side.
inline LaurentPoly edge_products(const CruciformParams& p, const WeightSpec& w) {
  const LaurentMonomial eg = w.em() * w.g(), hf = w.hm() * w.fm();
  LaurentPoly r = LaurentPoly::one();
  for (std::int64_t k : {p.c, p.a})
    for (std::int64_t i = 1; i <= k; ++i)
      r *= poly_pow(LaurentPoly::from(eg * LaurentMonomial::q(i - 1)) + LaurentPoly::from(hf), k - i + 1);
  for (std::int64_t i = 1; i <= p.n; ++i)
    r *= poly_pow(LaurentPoly::from(eg) + LaurentPoly::from(hf * LaurentMonomial::q(i)), p.n - i + 1);
  return r;
}

inline LaurentMonomial weight_monomial(const CruciformParams& p, const WeightSpec& w) {
  const auto [m, n, a, b, c, d] = std::array{p.m, p.n, p.a, p.b, p.c, p.d};
  return w.em().pow((n - b) * (m - a)) * w.fm().pow((m + n - c - d) * (m - a)) * w.g().pow((n - d) * (m - c)) *
         w.hm().pow((d + c + 1) * (m - c));
}

// Pochhammer double products (numerator) and H_q(n+a+1) H_q(n+c+1) (denominator).
inline std::pair<LaurentPoly, LaurentPoly> pochhammer_parts(const CruciformParams& p) {
  const auto [m, n, a, b, c, d] = std::array{p.m, p.n, p.a, p.b, p.c, p.d};
  const std::int64_t L = 2 * m - a - c;
  LaurentPoly num = LaurentPoly::one();
  for (std::int64_t i = 1; i <= L; ++i) num *= qpoch_q(i, 1, n - d) * qpoch_q(L - i + 1, 1, n - b);
  for (std::int64_t j = 1; j <= n - b; ++j) num *= poly_pow(qpoch_q(L + j, 1, n - d), 2);
  num *= hyperq(m - c) * hyperq(m - a) * poly_pow(hyperq(n - d), 2) * poly_pow(hyperq(n - b), 2);
  return {num, hyperq(n + a + 1) * hyperq(n + c + 1)};
}

}  // namespace detail

// Nominal closed form with the parity branch chosen explicitly (the odd branch at s=0 is
// exposed so the two branches can be compared).
inline LaurentPoly theorem_rhs_branch(const TheoremInstance& inst, bool odd, std::int64_t s) {
  const CruciformParams& p = inst.params;
  require_balanced(p);
  const std::int64_t mc = p.m - p.c;
  std::int64_t qe = q_exponent(p, s) + (odd ? binom(mc + 1, 2) : 0);
  Integer two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(mc));
  LaurentPoly num = poly_pow(LaurentPoly::one() - LaurentPoly::q(1), odd ? 2 * s : s) *
                    (detail::weight_monomial(p, inst.weights) * LaurentMonomial(Rational(two), qe));
  num *= detail::edge_products(p, inst.weights);
  auto [pn, pd] = detail::pochhammer_parts(p);
  num *= pn;
  num *= odd ? hyperq(mc + s, 2) * hyperq(mc + s + 1, 2) : poly_pow(hyperq(mc + s, 2), 2);
  LaurentPoly den = pd * hyperq(mc) * hyperq(mc + 2 * s + (odd ? 1 : 0));
  for (std::int64_t i = 1; i <= s; ++i) {
    num *= qpoch_q(3, 2, i - 1) * (odd ? qpoch_q(3, 2, i - 1) : qpoch_q(1, 2, i - 1)) *
           qpoch_q(2 * (i + s + (odd ? 1 : 0)), 2, mc) * qpoch_q(2, 2, i - 1);
    den *= qpoch_q(2, 2, mc + s - i);
  }
  return poly_exact_div(num, den);
}

// Nominal: the closed form with no corrections; a > c is Unsupported because the (a,c),(b,d) swap fails.
// Corrected: each Aztec part contributes 2*C(k+1,3) in place of C(k,2)+C(k+1,3), and the Schur
// sum is evaluated by its closed form for whichever of m-a, m-c is smaller.
enum class RhsVariant { Nominal, Corrected };

inline const char* variant_name(RhsVariant v) { return v == RhsVariant::Nominal ? "nominal" : "corrected"; }

inline std::int64_t pipeline_exponent(const CruciformParams& p, MegaExponent mode) {
  const auto [m, n, a, b, c, d] = std::array{p.m, p.n, p.a, p.b, p.c, p.d};
  auto part = [&](std::int64_t k) {
    return mode == MegaExponent::Nominal ? binom(k, 2) + binom(k + 1, 3) : 2 * binom(k + 1, 3);
  };
  return part(c) + part(a) + (m + b + d) * binom(n + 1, 2) + (n + c + 1) * binom(a + 1, 2) +
         (c - d) * binom(n + 1, 2);
}

inline LaurentPoly pipeline_prefactor(const CruciformParams& p, const WeightSpec& w,
                                     MegaExponent mode = MegaExponent::Nominal) {
  return detail::edge_products(p, w) * LaurentMonomial::q(pipeline_exponent(p, mode));
}

// M(F) without the Schur sum: weight monomial, q-power, Pochhammer and H_q factors.
inline LaurentPoly semihex_pair_factor(const CruciformParams& p, const WeightSpec& w) {
  const auto [m, n, a, b, c, d] = std::array{p.m, p.n, p.a, p.b, p.c, p.d};
  Rational ex = Rational((n + c + 1) * (m - c) * (n + m - 2 * d - 3), 2) - (n + 1) * (a + d + 1) * (m - a) +
                (n + 1) * (m - a) * (m - c) + (m - a) * (m - c) * (n - b) + (2 * m - a - c) * binom(n - b + 1, 2);
  ex.canonicalize();
  auto [num, den] = detail::pochhammer_parts(p);
  num = num * (detail::weight_monomial(p, w) * LaurentMonomial::q(integral_exponent(ex, "semihex pair exponent")));
  return poly_exact_div(num, den);
}

inline LaurentPoly schur_pair_closed(std::int64_t small, std::int64_t diff) {
  if (small == 0) return LaurentPoly::one();  // the only split puts everything in one consecutive block
  return schurlem2_closed(small, diff, false);
}

inline LaurentPoly theorem_rhs(const TheoremInstance& inst, RhsVariant v = RhsVariant::Nominal) {
  const CruciformParams& p = inst.params;
  require_balanced(p);
  if (v == RhsVariant::Nominal) {
    if (p.a > p.c) throw Error(Errc::Unsupported, p.describe() + ": nominal closed form needs c >= a");
    return theorem_rhs_branch(inst, inst.odd, inst.s);
  }
  std::int64_t small = std::min(p.m - p.a, p.m - p.c);
  std::int64_t diff = p.c > p.a ? p.c - p.a : p.a - p.c;
  return pipeline_prefactor(p, inst.weights, MegaExponent::Composed) * semihex_pair_factor(p, inst.weights) *
         schur_pair_closed(small, diff);
}

inline nlohmann::json instance_json(const TheoremInstance& inst) {
  const auto& p = inst.params;
  return {{"m", p.m},
          {"n", p.n},
          {"a", p.a},
          {"b", p.b},
          {"c", p.c},
          {"d", p.d},
          {"e", rational_text(inst.weights.e)},
          {"f", rational_text(inst.weights.f)},
          {"h", rational_text(inst.weights.h)},
          {"parity", inst.odd ? "odd" : "even"},
          {"s", inst.s}};
}

inline VerificationReport verify_theorem(const TheoremInstance& inst, Engine engine = Engine::Dp,
                                         RhsVariant v = RhsVariant::Nominal,
                                         const DominoConvention& conv = kFrozenConvention) {
  Stopwatch sw;
  LaurentPoly lhs = matching_poly(dual_graph(build_cruciform(inst.params), inst.weights, conv), engine);
  LaurentPoly rhs = theorem_rhs(inst, v);
  auto j = instance_json(inst);
  j["variant"] = variant_name(v);
  auto r = make_report("theorem", j, std::move(lhs), std::move(rhs), sw);
  r.engine = engine_name(engine);
  return r;
}

inline VerificationReport verify_theorem(const CruciformParams& p, const Rational& e, const Rational& f,
                                         const Rational& h, Engine engine = Engine::Dp,
                                         RhsVariant v = RhsVariant::Nominal) {
  return verify_theorem(TheoremInstance(p, e, f, h), engine, v);
}

// Connected sum of the two dented semihexagons, glued along the base positions n-d+1..m+b+1.
// The lower one is reflected through the base line.
inline WeightedGraph build_F_graph(const CruciformParams& p, const WeightSpec& w) {
  require_balanced(p);
  const auto [m, n, a, b, c, d] = std::array{p.m, p.n, p.a, p.b, p.c, p.d};
  IntSet removed = range_set(1, n - d);
  for (std::int64_t k = 1; k <= n - b; ++k) removed.push_back(m + b + 1 + k);
  auto top = semihex_dual_graph(n + a + 1, m - a, removed, SemihexWeighting::Wt,
                                w.em() * LaurentMonomial::q(-n - 1), w.fm());
  auto bot = semihex_dual_graph(n + c + 1, m - c, removed, SemihexWeighting::WtBar,
                                w.hm() * LaurentMonomial::q(c - 1), w.g() * LaurentMonomial::q(c - 1));
  WeightedGraph flipped;
  for (const auto& v : bot.graph.vertices()) flipped.add_vertex(v.x, -v.y);
  for (const auto& e : bot.graph.edges()) flipped.add_edge(e.u, e.v, e.w);
  std::vector<std::size_t> ga, gb;
  for (std::int64_t k = n - d + 1; k <= m + b + 1; ++k) {
    ga.push_back(top.base.at(k));
    gb.push_back(bot.base.at(k));
  }
  return connected_sum(top.graph, ga, flipped, gb).graph;
}

inline VerificationReport verify_pipeline(const CruciformParams& p, const WeightSpec& w,
                                          MegaExponent mode = MegaExponent::Nominal, Engine engine = Engine::Brute) {
  auto C = dual_graph(build_cruciform(p), w);
  auto F = build_F_graph(p, w);
  auto r = verify_factorization(C, F, pipeline_prefactor(p, w, mode), engine);
  r.name = "pipeline";
  r.instance["params"] = p.describe();
  r.instance["exponent"] = mode == MegaExponent::Nominal ? "nominal" : "composed";
  return r;
}

struct Calibration {
  std::vector<DominoConvention> candidates;
  std::vector<DominoConvention> matches;
};

// Every parity choice, exponent rule and offset in [-2,2] against the nominal closed form
// on the two smallest balanced tuples, each with two weight triples.
inline Calibration calibrate_convention(Engine engine = Engine::Brute) {
  Calibration out;
  for (bool v : {true, false})
    for (bool hz : {true, false})
      for (auto rule : {ExponentRule::SumIJ, ExponentRule::Row, ExponentRule::Column})
        for (std::int64_t off = -2; off <= 2; ++off) out.candidates.push_back({v, hz, rule, off});
  const std::array<CruciformParams, 2> tuples{CruciformParams{3, 2, 1, 1, 1, 1}, CruciformParams{2, 3, 1, 1, 1, 1}};
  std::vector<TheoremInstance> insts;
  for (const auto& p : tuples)
    for (auto [e, f, h] : {std::array{1, 2, 3}, std::array{2, 5, 7}})
      insts.emplace_back(p, Rational(e), Rational(f), Rational(h));
  std::vector<LaurentPoly> rhs;
  for (const auto& t : insts) rhs.push_back(theorem_rhs(t));
  for (const auto& conv : out.candidates) {
    bool all = true;
    for (std::size_t k = 0; k < insts.size() && all; ++k)
      all = matching_poly(dual_graph(build_cruciform(insts[k].params), insts[k].weights, conv), engine) == rhs[k];
    if (all) out.matches.push_back(conv);
  }
  return out;
}

}  // namespace cruciform
