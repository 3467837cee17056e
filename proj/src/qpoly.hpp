#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "json.hpp"

namespace hecke {

using Rational = mpq_class;

/// Parses "a/b" or "a" (base 10) into a canonical rational.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/// Laurent polynomial in q over arbitrary-precision rationals. Terms live in
/// a sorted exponent -> coefficient map that never stores zeros, so two
/// values are equal exactly when their term maps coincide.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long value);  // NOLINT: constants embed implicitly
  explicit LaurentPoly(const Rational& value);

  static LaurentPoly monomial(int exp, const Rational& coeff = Rational(1));
  static LaurentPoly q() { return monomial(1); }
  static LaurentPoly q_power(int exp) { return monomial(exp); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero
  Rational coeff(int exp) const;
  Rational leading_coeff() const;  // coefficient at max_exp

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(int dexp) const;  // multiply by q^dexp

  /// q -> 1/q (negates every exponent).
  LaurentPoly substitute_inverse() const;

  /// Exact evaluation at a rational point. q0 = 0 with negative exponents
  /// present throws pole_at_point.
  Rational eval(const Rational& q0) const;

  bool is_integer_polynomial() const;  // all exponents >= 0, all coeffs in Z

  std::string str() const;
  std::string latex() const;

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

  /// Adds c * q^exp in place. c need not be in canonical form.
  void add_term(int exp, const Rational& c);

 private:
  void add_term_raw(int exp, const Rational& c);  // pre: c canonical

  std::map<int, Rational> terms_;
};

/// Ratio of Laurent polynomials kept in canonical form: numerator and
/// denominator coprime, denominator an ordinary polynomial with nonzero
/// constant term and leading coefficient 1 (any power of q is carried by the
/// numerator). den == 1 embeds LaurentPoly losslessly.
class RationalFn {
 public:
  RationalFn() : num_(), den_(1) {}
  RationalFn(long value) : num_(value), den_(1) {}  // NOLINT
  RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }

  /// Returns the numerator when den == 1, else throws not_polynomial.
  const LaurentPoly& exact_poly() const;

  RationalFn operator-() const;
  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;  // division_by_zero
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  RationalFn pow(int k) const;  // integer power, k may be negative

  Rational eval(const Rational& q0) const;  // pole_at_point

  std::string str() const;

  nlohmann::json to_json() const;
  static RationalFn from_json(const nlohmann::json& j);

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// f_p = (q^p - (-1)^p)/(q+1) = q^{p-1} - q^{p-2} + ... + (-1)^{p-1},
/// with f_0 = 0 and f_1 = 1.
LaurentPoly f_coeff(int p);

/// [x]_q = (q^x - 1)/(q - 1), a Laurent polynomial for every integer x.
LaurentPoly q_integer_poly(int x);
RationalFn q_integer(int x);

Rational specialize(const RationalFn& p, const Rational& q0);

/// Dense Laurent polynomial over int64 used by the combinatorial kernels,
/// where every coefficient provably stays small. Arithmetic asserts against
/// overflow; conversion to LaurentPoly is exact.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long long value);  // NOLINT
  static IntPoly q() { return monomial(1, 1); }
  static IntPoly qm1();  // q - 1
  static IntPoly monomial(int exp, long long coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int exp) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  bool operator==(const IntPoly& o) const { return min_exp_ == o.min_exp_ && coeffs_ == o.coeffs_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly shifted(int dexp) const;

  /// Exact division by (q - 1); asserts a zero remainder.
  IntPoly div_exact_qm1() const;

  LaurentPoly to_laurent() const;

  /// Converts an integer-coefficient LaurentPoly whose coefficients fit in
  /// int64; returns false on any coefficient that does not.
  static bool try_from_laurent(const LaurentPoly& p, IntPoly* out);

 private:
  void trim();

  int min_exp_ = 0;
  std::vector<long long> coeffs_;  // coeffs_[i] multiplies q^{min_exp_ + i}
};

IntPoly f_coeff_int(int p);
long long binomial_ll(int n, int k);

}  // namespace hecke
