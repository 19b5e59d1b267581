#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cruciform {

enum class Errc {
  NotDivisible,
  ExponentOverflow,
  FrontierTooWide,
  BadPartition,
  ZeroScale,
  BadSpider,
  SingularWeights,
  Unmatchable,
  Unbalanced,
  NotAdjacent,
  BadDents,
  NonIntegerExponent,
  NonIntegerQ,
  Unsupported,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::FrontierTooWide: return "FrontierTooWide";
    case Errc::BadPartition: return "BadPartition";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::BadSpider: return "BadSpider";
    case Errc::SingularWeights: return "SingularWeights";
    case Errc::Unmatchable: return "Unmatchable";
    case Errc::Unbalanced: return "Unbalanced";
    case Errc::NotAdjacent: return "NotAdjacent";
    case Errc::BadDents: return "BadDents";
    case Errc::NonIntegerExponent: return "NonIntegerExponent";
    case Errc::NonIntegerQ: return "NonIntegerQ";
    case Errc::Unsupported: return "Unsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", with optional sign; result is reduced.
inline Rational parse_rational(std::string_view s) {
  std::string t(s);
  auto bad = [&] { return Error(Errc::InvalidArgument, "not a rational: '" + t + "'"); };
  if (t.empty()) throw bad();
  auto slash = t.find('/');
  auto is_int = [](const std::string& u) {
    if (u.empty()) return false;
    std::size_t k = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (k == u.size()) return false;
    return std::all_of(u.begin() + static_cast<long>(k), u.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw bad();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string rational_text(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 30;

inline std::int64_t checked_exponent(std::int64_t e) {
  if (e > kMaxExponent || e < -kMaxExponent)
    throw Error(Errc::ExponentOverflow, "exponent " + std::to_string(e) + " exceeds 2^30");
  return e;
}

struct LaurentMonomial {
  Rational coeff{1};
  std::int64_t qexp = 0;

  LaurentMonomial() = default;
  LaurentMonomial(Rational c, std::int64_t e) : coeff(std::move(c)), qexp(checked_exponent(e)) {
    coeff.canonicalize();
    if (coeff == 0) throw Error(Errc::InvalidArgument, "monomial coefficient must be nonzero");
  }

  static LaurentMonomial q(std::int64_t e) { return {Rational(1), e}; }
  static LaurentMonomial constant(const Rational& c) { return {c, 0}; }

  LaurentMonomial operator*(const LaurentMonomial& o) const {
    return {coeff * o.coeff, qexp + o.qexp};
  }
  LaurentMonomial operator/(const LaurentMonomial& o) const {
    return {coeff / o.coeff, qexp - o.qexp};
  }
  LaurentMonomial pow(std::int64_t k) const {
    if (k < 0) return LaurentMonomial(Rational(1), 0) / pow(-k);
    Rational c(1);
    for (std::int64_t i = 0; i < k; ++i) c *= coeff;
    return {c, qexp * k};
  }
  bool operator==(const LaurentMonomial& o) const { return qexp == o.qexp && coeff == o.coeff; }
};

// Dense storage: coefficient of q^(lo_+k) in c_[k]; both ends nonzero unless empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return constant(Rational(1)); }
  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly q(std::int64_t e = 1) { return monomial(Rational(1), e); }
  static LaurentPoly monomial(const Rational& c, std::int64_t e) {
    LaurentPoly p;
    if (c == 0) return p;
    p.lo_ = checked_exponent(e);
    p.c_.push_back(c);
    p.c_.back().canonicalize();
    return p;
  }
  static LaurentPoly from(const LaurentMonomial& m) { return monomial(m.coeff, m.qexp); }
  static LaurentPoly from_terms(const std::vector<std::pair<std::int64_t, Rational>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  std::int64_t min_exp() const { return lo_; }
  std::int64_t max_exp() const { return lo_ + static_cast<std::int64_t>(c_.size()) - 1; }

  Rational coeff(std::int64_t e) const {
    if (c_.empty() || e < lo_ || e > max_exp()) return Rational(0);
    return c_[static_cast<std::size_t>(e - lo_)];
  }

  std::vector<std::pair<std::int64_t, Rational>> terms() const {
    std::vector<std::pair<std::int64_t, Rational>> out;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) out.emplace_back(lo_ + static_cast<std::int64_t>(k), c_[k]);
    return out;
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const Rational& r) { return r != 0; }));
  }

  // Only meaningful when term_count() == 1.
  bool is_monomial() const { return term_count() == 1; }
  LaurentMonomial as_monomial() const {
    if (!is_monomial()) throw Error(Errc::InvalidArgument, "not a monomial");
    return {c_.front(), lo_};
  }

  const std::vector<Rational>& dense() const { return c_; }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, Rational(1), 0); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, Rational(-1), 0); }

  // this += s * q^shift * o
  LaurentPoly& add_scaled(const LaurentPoly& o, const Rational& s, std::int64_t shift) {
    if (o.is_zero() || s == 0) return *this;
    std::int64_t olo = checked_exponent(o.lo_ + shift);
    std::int64_t ohi = checked_exponent(o.max_exp() + shift);
    if (is_zero()) {
      lo_ = olo;
      c_.assign(o.c_.size(), Rational(0));
    } else {
      std::int64_t nlo = std::min(lo_, olo), nhi = std::max(max_exp(), ohi);
      if (nlo < lo_) c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), Rational(0));
      lo_ = nlo;
      c_.resize(static_cast<std::size_t>(nhi - nlo + 1), Rational(0));
    }
    std::size_t base = static_cast<std::size_t>(olo - lo_);
    if (s == 1) {
      for (std::size_t k = 0; k < o.c_.size(); ++k) c_[base + k] += o.c_[k];
    } else {
      for (std::size_t k = 0; k < o.c_.size(); ++k) c_[base + k] += s * o.c_[k];
    }
    normalize();
    return *this;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  LaurentPoly times(const LaurentMonomial& m) const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.lo_ = checked_exponent(lo_ + m.qexp);
    checked_exponent(max_exp() + m.qexp);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * m.coeff);
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.c_.empty()) return true;
    if (a.lo_ != b.lo_) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (a.c_[k] != b.c_[k]) return false;
    return true;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Canonical serialization: [[exp,"num/den"],...] ascending.
  std::string to_json() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [e, c] : terms()) {
      if (!first) os << ',';
      first = false;
      os << '[' << e << ",\"" << rational_text(c) << "\"]";
    }
    os << ']';
    return os.str();
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      Rational a = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = a == 1;
      if (!unit || e == 0) os << a.get_str();
      if (e != 0) {
        if (!unit) os << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    std::size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    c_.erase(c_.begin() + static_cast<long>(e), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(b));
    lo_ += static_cast<std::int64_t>(b);
  }

  friend LaurentPoly poly_mul(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly poly_exact_div(const LaurentPoly&, const LaurentPoly&);

  std::int64_t lo_ = 0;
  std::vector<Rational> c_;
};

namespace detail {

// p = nums / den with integer nums.
inline void integer_form(const std::vector<Rational>& c, std::vector<Integer>& nums, Integer& den) {
  den = 1;
  for (const auto& x : c)
    if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  nums.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) nums[k] = c[k].get_num() * (den / c[k].get_den());
}

}  // namespace detail

inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Integer> na, nb;
  Integer da, db;
  detail::integer_form(a.c_, na, da);
  detail::integer_form(b.c_, nb, db);
  std::vector<Integer> acc(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
  }
  Integer den = da * db;
  r.lo_ = checked_exponent(a.lo_ + b.lo_);
  checked_exponent(a.max_exp() + b.max_exp());
  r.c_.reserve(acc.size());
  for (auto& x : acc) {
    Rational q(x, den);
    q.canonicalize();
    r.c_.push_back(std::move(q));
  }
  r.normalize();
  return r;
}

inline LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = poly_mul(*this, o);
  return *this;
}

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return poly_mul(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentMonomial& m) { return a.times(m); }
inline LaurentPoly operator*(const LaurentMonomial& m, const LaurentPoly& a) { return a.times(m); }

inline LaurentPoly poly_pow(const LaurentPoly& p, std::int64_t k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative power of a polynomial");
  LaurentPoly r = LaurentPoly::one(), base = p;
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

// Exact quotient; throws NotDivisible when d does not divide p.
inline LaurentPoly poly_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  LaurentPoly out;
  if (p.is_zero()) return out;
  const std::int64_t qlo = p.lo_ - d.lo_, qhi = p.max_exp() - d.max_exp();
  if (qhi < qlo) throw Error(Errc::NotDivisible, "degree span of divisor exceeds dividend");
  std::vector<Rational> rem = p.c_;
  const std::size_t dn = d.c_.size();
  const Rational& lead = d.c_.back();
  std::vector<Rational> quo(static_cast<std::size_t>(qhi - qlo + 1));
  for (std::int64_t k = qhi - qlo; k >= 0; --k) {
    std::size_t top = static_cast<std::size_t>(k) + dn - 1;
    if (rem[top] == 0) continue;
    Rational t = rem[top] / lead;
    quo[static_cast<std::size_t>(k)] = t;
    for (std::size_t j = 0; j < dn; ++j) {
      if (d.c_[j] == 0) continue;
      rem[static_cast<std::size_t>(k) + j] -= t * d.c_[j];
    }
  }
  for (const auto& x : rem)
    if (x != 0) throw Error(Errc::NotDivisible, "nonzero remainder");
  out.lo_ = qlo;
  out.c_ = std::move(quo);
  out.normalize();
  return out;
}

inline Rational eval_at(const LaurentPoly& p, const Rational& q0) {
  if (q0 == 0) throw Error(Errc::InvalidArgument, "evaluation point must be nonzero");
  if (p.is_zero()) return Rational(0);
  // Horner on the dense part, then scale by q0^lo.
  Rational acc(0);
  const auto& c = p.dense();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * q0 + c[k];
  std::int64_t lo = p.min_exp();
  Rational s(1);
  Rational base = lo >= 0 ? q0 : Rational(1) / q0;
  for (std::int64_t k = 0; k < (lo >= 0 ? lo : -lo); ++k) s *= base;
  return acc * s;
}

// (x; q^b)_k
inline LaurentPoly qpoch(const LaurentMonomial& x, std::int64_t base_exp, std::int64_t k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "qpoch length must be nonnegative");
  LaurentPoly r = LaurentPoly::one();
  for (std::int64_t j = 0; j < k; ++j)
    r *= LaurentPoly::one() - LaurentPoly::monomial(x.coeff, x.qexp + base_exp * j);
  return r;
}

// (q^a; q^b)_k with unit coefficient
inline LaurentPoly qpoch_q(std::int64_t a, std::int64_t base_exp, std::int64_t k) {
  return qpoch(LaurentMonomial::q(a), base_exp, k);
}

// H_{q^b}(n) = prod_{k=1}^{n-1} (q^b; q^b)_k; H(0) is the empty product as well.
inline LaurentPoly hyperq(std::int64_t n, std::int64_t base_exp = 1) {
  if (n < 0) throw Error(Errc::InvalidArgument, "hyperq needs n >= 0");
  LaurentPoly r = LaurentPoly::one();
  for (std::int64_t k = 1; k < n; ++k) r *= qpoch_q(base_exp, base_exp, k);
  return r;
}

// Binomial with the convention C(n,k)=0 outside 0<=k<=n; used in exponents.
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_json(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentMonomial& m) { return os << LaurentPoly::from(m).to_json(); }

}  // namespace cruciform
