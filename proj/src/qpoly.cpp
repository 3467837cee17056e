#include "qpoly.hpp"

#include <cassert>
#include <sstream>

namespace hecke {

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw invalid_argument_error("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(long value) {
  if (value != 0) terms_[0] = Rational(value);
}

LaurentPoly::LaurentPoly(const Rational& value) { add_term(0, value); }

LaurentPoly LaurentPoly::monomial(int exp, const Rational& coeff) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

int LaurentPoly::min_exp() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
  Rational canon = c;
  canon.canonicalize();
  add_term_raw(exp, canon);
}

void LaurentPoly::add_term_raw(int exp, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term_raw(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term_raw(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term_raw(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + dexp] = c;
  return r;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) return Rational(0);
  if (q0 == 0 && min_exp() < 0) throw pole_at_point("q = 0 with negative exponents");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    if (e >= 0) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), q0.get_num().get_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), q0.get_den().get_mpz_t(), e);
      p = Rational(num, den);
    } else {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), q0.get_den().get_mpz_t(), -e);
      mpz_pow_ui(den.get_mpz_t(), q0.get_num().get_mpz_t(), -e);
      p = Rational(num, den);
    }
    p.canonicalize();
    acc += c * p;
  }
  return acc;
}

bool LaurentPoly::is_integer_polynomial() const {
  for (const auto& [e, c] : terms_)
    if (e < 0 || c.get_den() != 1) return false;
  return true;
}

namespace {

void append_term(std::string& out, const Rational& c, int e, bool latex) {
  const bool neg = c < 0;
  Rational a = neg ? Rational(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? "-" : "+";
  }
  std::string cs = a.get_str();
  const bool unit = (a == 1);
  if (e == 0) {
    out += cs;
    return;
  }
  if (!unit) {
    if (cs.find('/') != std::string::npos) cs = "(" + cs + ")";
    out += cs;
  }
  out += "q";
  if (e != 1) {
    if (latex)
      out += "^{" + std::to_string(e) + "}";
    else
      out += "^" + std::to_string(e);
  }
}

}  // namespace

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append_term(out, it->second, it->first, false);
  return out;
}

std::string LaurentPoly::latex() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append_term(out, it->second, it->first, true);
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({e, rational_to_string(c)});
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw invalid_argument_error("bad polynomial term");
    p.add_term(term[0].get<int>(), rational_from_string(term[1].get<std::string>()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Polynomial gcd over Q (dense helpers, local to this file)
// ---------------------------------------------------------------------------

namespace {

using QVec = std::vector<Rational>;  // QVec[i] multiplies q^i; no trailing zeros

void trim(QVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

QVec to_dense(const LaurentPoly& p, int shift) {
  QVec v;
  if (p.is_zero()) return v;
  v.assign(p.max_exp() + shift + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    assert(e + shift >= 0);
    v[e + shift] = c;
  }
  return v;
}

LaurentPoly from_dense(const QVec& v, int shift) {
  LaurentPoly p;
  for (size_t i = 0; i < v.size(); ++i) p.add_term(static_cast<int>(i) + shift, v[i]);
  return p;
}

// Long division over Q; returns remainder, quotient optional.
QVec qvec_mod(QVec a, const QVec& b, QVec* quot = nullptr) {
  assert(!b.empty());
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational f = a.back() / lead;
    size_t off = a.size() - b.size();
    if (quot) (*quot)[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
    if (a.empty()) break;
    while (a.size() >= b.size() && a.back() == 0) a.pop_back();
  }
  trim(a);
  return a;
}

QVec qvec_gcd(QVec a, QVec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QVec r = qvec_mod(a, b);
    a.swap(b);
    b.swap(r);
    if (!b.empty()) {
      const Rational lead = b.back();
      for (auto& c : b) c /= lead;
    }
  }
  assert(!a.empty());
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

QVec qvec_div_exact(const QVec& a, const QVec& b) {
  QVec quot;
  QVec rem = qvec_mod(a, b, &quot);
  assert(rem.empty());
  trim(quot);
  return quot;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalFn
// ---------------------------------------------------------------------------

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFn::canonicalize() {
  if (den_.is_zero()) throw division_by_zero();
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int a = num_.min_exp();
  const int b = den_.min_exp();
  QVec n = to_dense(num_, -a);
  QVec d = to_dense(den_, -b);
  if (d.size() > 1) {  // nontrivial denominator: reduce by gcd
    QVec g = qvec_gcd(n, d);
    if (g.size() > 1) {
      n = qvec_div_exact(n, g);
      d = qvec_div_exact(d, g);
    }
  }
  const Rational lead = d.back();
  if (lead != 1) {
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
  }
  num_ = from_dense(n, a - b);
  den_ = from_dense(d, 0);
}

const LaurentPoly& RationalFn::exact_poly() const {
  if (!is_polynomial()) throw not_polynomial();
  return num_;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  if (is_polynomial() && o.is_polynomial()) {
    RationalFn r;
    r.num_ = num_ + o.num_;
    return r;
  }
  return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  if (is_polynomial() && o.is_polynomial()) {
    RationalFn r;
    r.num_ = num_ - o.num_;
    return r;
  }
  return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  if (is_polynomial() && o.is_polynomial()) {
    RationalFn r;
    r.num_ = num_ * o.num_;
    return r;
  }
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) throw division_by_zero();
  return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::pow(int k) const {
  if (k == 0) return RationalFn(1);
  RationalFn base = k > 0 ? *this : RationalFn(1) / *this;
  int e = k > 0 ? k : -k;
  RationalFn acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

Rational RationalFn::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw pole_at_point();
  return num_.eval(q0) / d;
}

std::string RationalFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

nlohmann::json RationalFn::to_json() const {
  return nlohmann::json{{"num", num_.to_json()}, {"den", den_.to_json()}};
}

RationalFn RationalFn::from_json(const nlohmann::json& j) {
  return RationalFn(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
}

// ---------------------------------------------------------------------------
// Named coefficient families
// ---------------------------------------------------------------------------

LaurentPoly f_coeff(int p) {
  if (p < 0) throw invalid_argument_error("f_coeff: negative index");
  LaurentPoly f;
  for (int i = 0; i < p; ++i) f.add_term(p - 1 - i, (i % 2 == 0) ? Rational(1) : Rational(-1));
  return f;
}

LaurentPoly q_integer_poly(int x) {
  LaurentPoly p;
  if (x >= 0) {
    for (int k = 0; k < x; ++k) p.add_term(k, Rational(1));
  } else {
    for (int k = x; k < 0; ++k) p.add_term(k, Rational(-1));
  }
  return p;
}

RationalFn q_integer(int x) { return RationalFn(q_integer_poly(x)); }

Rational specialize(const RationalFn& p, const Rational& q0) { return p.eval(q0); }

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  bool ovf = __builtin_add_overflow(a, b, &r);
  assert(!ovf);
  (void)ovf;
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  bool ovf = __builtin_mul_overflow(a, b, &r);
  assert(!ovf);
  (void)ovf;
  return r;
}

}  // namespace

IntPoly::IntPoly(long long value) {
  if (value != 0) coeffs_.push_back(value);
}

IntPoly IntPoly::monomial(int exp, long long coeff) {
  IntPoly p;
  if (coeff != 0) {
    p.min_exp_ = exp;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

IntPoly IntPoly::qm1() {
  IntPoly p;
  p.coeffs_ = {-1, 1};
  return p;
}

long long IntPoly::coeff(int exp) const {
  int i = exp - min_exp_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    min_exp_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_exp_ = 0;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(max_exp(), o.max_exp());
  IntPoly r;
  r.min_exp_ = lo;
  r.coeffs_.assign(hi - lo + 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[min_exp_ - lo + i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    r.coeffs_[o.min_exp_ - lo + i] = checked_add(r.coeffs_[o.min_exp_ - lo + i], o.coeffs_[i]);
  r.trim();
  return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  IntPoly neg = o;
  for (auto& c : neg.coeffs_) c = -c;
  return *this + neg;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  IntPoly r;
  r.min_exp_ = min_exp_ + o.min_exp_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  }
  r.trim();
  return r;
}

IntPoly IntPoly::shifted(int dexp) const {
  IntPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += dexp;
  return r;
}

IntPoly IntPoly::div_exact_qm1() const {
  if (is_zero()) return IntPoly();
  // synthetic division by (q - 1) from the top
  IntPoly r;
  r.min_exp_ = min_exp_;
  r.coeffs_.assign(coeffs_.size() - 1, 0);
  long long carry = 0;
  for (size_t i = coeffs_.size(); i-- > 1;) {
    carry = checked_add(carry, coeffs_[i]);
    r.coeffs_[i - 1] = carry;
  }
  assert(checked_add(carry, coeffs_[0]) == 0 && "division by q-1 not exact");
  r.trim();
  return r;
}

LaurentPoly IntPoly::to_laurent() const {
  LaurentPoly p;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) p.add_term(min_exp_ + static_cast<int>(i), Rational(static_cast<long>(coeffs_[i])));
  return p;
}

bool IntPoly::try_from_laurent(const LaurentPoly& p, IntPoly* out) {
  IntPoly r;
  if (p.is_zero()) {
    *out = r;
    return true;
  }
  r.min_exp_ = p.min_exp();
  r.coeffs_.assign(p.max_exp() - p.min_exp() + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) return false;
    if (!c.get_num().fits_slong_p()) return false;
    r.coeffs_[e - r.min_exp_] = c.get_num().get_si();
  }
  *out = r;
  return true;
}

IntPoly f_coeff_int(int p) {
  if (p < 0) throw invalid_argument_error("f_coeff_int: negative index");
  IntPoly f;
  for (int i = 0; i < p; ++i) f += IntPoly::monomial(p - 1 - i, (i % 2 == 0) ? 1 : -1);
  return f;
}

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hecke
