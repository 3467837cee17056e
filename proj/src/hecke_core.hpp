#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpoly.hpp"

namespace hecke {

inline constexpr int kMaxN = 8;

/// Permutation of {1..n} in one-line notation, n <= 8.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  static Permutation adjacent_transposition(int n, int i);  // s_i = (i, i+1)
  static Permutation from_images(const std::vector<int>& images);

  int n() const { return n_; }
  int operator()(int j) const { return img_[j - 1]; }  // 1-based

  Permutation operator*(const Permutation& o) const;  // (a*b)(j) = a(b(j))
  Permutation inverse() const;
  bool is_identity() const;

  int length() const;  // inversion count
  bool right_descent(int i) const { return img_[i - 1] > img_[i]; }
  bool left_descent(int i) const;
  int min_right_descent() const;  // 0 if none
  int min_left_descent() const;   // 0 if none

  Permutation right_times_s(int i) const;  // w * s_i
  Permutation left_times_s(int i) const;   // s_i * w

  /// Lexicographically smallest reduced word (greedy on left descents).
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation& o) const { return n_ == o.n_ && img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string str() const;  // "2,3,1"

 private:
  int n_ = 0;
  std::array<uint8_t, kMaxN> img_{};  // img_[j] = w(j+1); unused slots zero
};

/// All n! permutations, identity first, in length-compatible generation order.
std::vector<Permutation> all_permutations(int n);

/// A word in the generators g_1..g_{n-1}: a sequence of indices, repeats
/// allowed, the empty word standing for the identity.
struct Word {
  int n = 2;
  std::vector<int> letters;

  Word() = default;
  Word(int ambient, std::vector<int> ls);

  static Word parse(int ambient, const std::string& csv);  // "1,2,1,4"
  std::string str() const;

  bool operator==(const Word& o) const { return n == o.n && letters == o.letters; }
};

/// (g_i)_len = g_i g_{i+1} ... g_{i+len-1}
Word asc_seq(int n, int i, int len);
/// (g_i)^(len) = g_i ... g_{i+len-1} ... g_i
Word hump(int n, int i, int len);

enum class Side { left, right };

/// Element of H_n(q) on the permutation basis {T_w}. Multiplication uses the
/// standard rule: T_w T_{s_i} = T_{w s_i} when the length goes up, and
/// (q-1) T_w + q T_{w s_i} otherwise (same on the left).
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement identity(int n);
  static HeckeElement generator(int n, int i);
  static HeckeElement basis(int n, const Permutation& w, const RationalFn& c = RationalFn(1));

  int n() const { return n_; }
  const std::map<Permutation, RationalFn>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }
  RationalFn coeff(const Permutation& w) const;

  void add(const Permutation& w, const RationalFn& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement scaled(const RationalFn& c) const;
  bool operator==(const HeckeElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  nlohmann::json to_json() const;

 private:
  int n_ = 2;
  std::map<Permutation, RationalFn> terms_;
};

HeckeElement mul_by_generator(const HeckeElement& h, int i, Side side);
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
HeckeElement word_to_element(const Word& w);

/// L_p = sum_{i=1}^{p-1} q^{-(p-1-i)} (g_i)^(p-i), 2 <= p <= n.
HeckeElement murphy_op(int p, int n);

/// C_n = L_2 + ... + L_n.
HeckeElement fundamental_invariant(int n);

/// Trace of left multiplication by h on the n!-dimensional permutation
/// basis. Linear, tracial, and equal to sum_lambda dim(lambda) chi_lambda in
/// the generic split-semisimple regime; used here as the independent
/// brute-force oracle for everything downstream.
RationalFn regular_trace(const HeckeElement& h);

/// Same trace with q specialized to an exact rational point (the n = 7
/// module is kept numeric).
Rational regular_trace_at(const HeckeElement& h, const Rational& q0);

RationalFn regular_trace_word(const Word& w);
Rational regular_trace_word_at(const Word& w, const Rational& q0);

}  // namespace hecke
