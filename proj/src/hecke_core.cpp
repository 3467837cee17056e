#include "hecke_core.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hecke {

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxN) throw invalid_argument_error("n out of range (1.." + std::to_string(kMaxN) + ")");
  Permutation w;
  w.n_ = n;
  for (int j = 0; j < n; ++j) w.img_[j] = static_cast<uint8_t>(j + 1);
  return w;
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw index_out_of_range("s_" + std::to_string(i) + " not in S_" + std::to_string(n));
  Permutation w = identity(n);
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxN) throw invalid_argument_error("permutation size out of range");
  Permutation w;
  w.n_ = n;
  std::array<bool, kMaxN + 1> seen{};
  for (int j = 0; j < n; ++j) {
    int v = images[j];
    if (v < 1 || v > n || seen[v]) throw invalid_argument_error("not a permutation");
    seen[v] = true;
    w.img_[j] = static_cast<uint8_t>(v);
  }
  return w;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (n_ != o.n_) throw ambient_mismatch();
  Permutation r;
  r.n_ = n_;
  for (int j = 0; j < n_; ++j) r.img_[j] = img_[o.img_[j] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int j = 0; j < n_; ++j) r.img_[img_[j] - 1] = static_cast<uint8_t>(j + 1);
  return r;
}

bool Permutation::is_identity() const {
  for (int j = 0; j < n_; ++j)
    if (img_[j] != j + 1) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

bool Permutation::left_descent(int i) const {
  // position of value i comes after position of value i+1
  int pi = 0, pj = 0;
  for (int j = 0; j < n_; ++j) {
    if (img_[j] == i) pi = j;
    if (img_[j] == i + 1) pj = j;
  }
  return pi > pj;
}

int Permutation::min_right_descent() const {
  for (int i = 1; i < n_; ++i)
    if (right_descent(i)) return i;
  return 0;
}

int Permutation::min_left_descent() const {
  for (int i = 1; i < n_; ++i)
    if (left_descent(i)) return i;
  return 0;
}

Permutation Permutation::right_times_s(int i) const {
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Permutation Permutation::left_times_s(int i) const {
  Permutation r = *this;
  for (int j = 0; j < n_; ++j) {
    if (r.img_[j] == i)
      r.img_[j] = static_cast<uint8_t>(i + 1);
    else if (r.img_[j] == i + 1)
      r.img_[j] = static_cast<uint8_t>(i);
  }
  return r;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation w = *this;
  for (int i = w.min_left_descent(); i != 0; i = w.min_left_descent()) {
    word.push_back(i);
    w = w.left_times_s(i);
  }
  return word;
}

std::string Permutation::str() const {
  std::string out;
  for (int j = 0; j < n_; ++j) {
    if (j) out += ',';
    out += std::to_string(img_[j]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(n);
  for (int j = 0; j < n; ++j) images[j] = j + 1;
  std::sort(images.begin(), images.end());
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Word
// ---------------------------------------------------------------------------

Word::Word(int ambient, std::vector<int> ls) : n(ambient), letters(std::move(ls)) {
  if (n < 2 || n > kMaxN) throw invalid_argument_error("ambient n out of range");
  for (int i : letters)
    if (i < 1 || i >= n) throw index_out_of_range("g_" + std::to_string(i) + " not in H_" + std::to_string(n));
}

Word Word::parse(int ambient, const std::string& csv) {
  std::vector<int> ls;
  if (!csv.empty()) {
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw invalid_argument_error("bad word: " + csv);
      ls.push_back(std::stoi(item));
    }
  }
  return Word(ambient, std::move(ls));
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

Word asc_seq(int n, int i, int len) {
  std::vector<int> ls;
  for (int k = 0; k < len; ++k) ls.push_back(i + k);
  return Word(n, std::move(ls));
}

Word hump(int n, int i, int len) {
  std::vector<int> ls;
  for (int k = 0; k < len; ++k) ls.push_back(i + k);
  for (int k = len - 2; k >= 0; --k) ls.push_back(i + k);
  return Word(n, std::move(ls));
}

// ---------------------------------------------------------------------------
// HeckeElement
// ---------------------------------------------------------------------------

HeckeElement HeckeElement::identity(int n) { return basis(n, Permutation::identity(n)); }

HeckeElement HeckeElement::generator(int n, int i) { return basis(n, Permutation::adjacent_transposition(n, i)); }

HeckeElement HeckeElement::basis(int n, const Permutation& w, const RationalFn& c) {
  HeckeElement h(n);
  h.add(w, c);
  return h;
}

RationalFn HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalFn(0) : it->second;
}

void HeckeElement::add(const Permutation& w, const RationalFn& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  r += o;
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (n_ != o.n_) throw ambient_mismatch();
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  if (n_ != o.n_) throw ambient_mismatch();
  HeckeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

HeckeElement HeckeElement::scaled(const RationalFn& c) const {
  HeckeElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : terms_) r.terms_.emplace(w, cw * c);
  return r;
}

nlohmann::json HeckeElement::to_json() const {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [w, c] : terms_) obj[w.str()] = c.to_json();
  return obj;
}

HeckeElement mul_by_generator(const HeckeElement& h, int i, Side side) {
  if (i < 1 || i >= h.n()) throw index_out_of_range("g_" + std::to_string(i));
  static const RationalFn Q(LaurentPoly::q());
  static const RationalFn QM1(LaurentPoly::q() - 1);
  HeckeElement r(h.n());
  for (const auto& [w, c] : h.terms()) {
    if (side == Side::right) {
      Permutation ws = w.right_times_s(i);
      if (!w.right_descent(i)) {
        r.add(ws, c);
      } else {
        r.add(w, c * QM1);
        r.add(ws, c * Q);
      }
    } else {
      Permutation sw = w.left_times_s(i);
      if (!w.left_descent(i)) {
        r.add(sw, c);
      } else {
        r.add(w, c * QM1);
        r.add(sw, c * Q);
      }
    }
  }
  return r;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.n() != b.n()) throw ambient_mismatch();
  HeckeElement r(a.n());
  for (const auto& [v, cv] : b.terms()) {
    HeckeElement cur = a;
    for (int i : v.reduced_word()) cur = mul_by_generator(cur, i, Side::right);
    for (const auto& [w, cw] : cur.terms()) r.add(w, cw * cv);
  }
  return r;
}

HeckeElement word_to_element(const Word& w) {
  HeckeElement cur = HeckeElement::identity(w.n);
  for (int i : w.letters) cur = mul_by_generator(cur, i, Side::right);
  return cur;
}

HeckeElement murphy_op(int p, int n) {
  if (p < 2 || p > n) throw index_out_of_range("L_" + std::to_string(p) + " not in H_" + std::to_string(n));
  HeckeElement sum(n);
  for (int i = 1; i <= p - 1; ++i) {
    RationalFn coeff(LaurentPoly::q_power(-(p - 1 - i)));
    sum += word_to_element(hump(n, i, p - i)).scaled(coeff);
  }
  return sum;
}

HeckeElement fundamental_invariant(int n) {
  if (n < 2) throw invalid_argument_error("fundamental invariant needs n >= 2");
  HeckeElement sum(n);
  for (int i = 2; i <= n; ++i) sum += murphy_op(i, n);
  return sum;
}

// ---------------------------------------------------------------------------
// Regular trace
//
// The trace of left multiplication is summed along a spanning tree of the
// right weak order: E_e = h, and E_{w s_i} = E_w T_{s_i} whenever w s_i has
// its smallest right descent at i. Each basis element is visited once and
// built from its parent by a single generator step.
// ---------------------------------------------------------------------------

namespace {

template <class C>
struct RegularCtx {
  C q;
  C qm1;
};

template <class C>
void regular_walk(int n, const Permutation& w, const std::map<Permutation, C>& e, const RegularCtx<C>& ctx,
                  C& total) {
  auto it = e.find(w);
  if (it != e.end()) total += it->second;
  for (int i = 1; i < n; ++i) {
    if (w.right_descent(i)) continue;
    Permutation v = w.right_times_s(i);
    bool canonical = true;
    for (int j = 1; j < i; ++j)
      if (v.right_descent(j)) {
        canonical = false;
        break;
      }
    if (!canonical) continue;
    std::map<Permutation, C> child;
    for (const auto& [u, c] : e) {
      if (!u.right_descent(i)) {
        child[u.right_times_s(i)] += c;
      } else {
        child[u] += c * ctx.qm1;
        child[u.right_times_s(i)] += c * ctx.q;
      }
    }
    regular_walk(n, v, child, ctx, total);
  }
}

template <class C>
C regular_trace_generic(int n, std::map<Permutation, C> h, const RegularCtx<C>& ctx) {
  C total{};
  regular_walk(n, Permutation::identity(n), h, ctx, total);
  return total;
}

}  // namespace

RationalFn regular_trace(const HeckeElement& h) {
  // Factor out a common multiple of the denominators so the walk itself
  // stays polynomial.
  LaurentPoly den(1);
  for (const auto& [w, c] : h.terms()) {
    if (c.is_polynomial()) continue;
    RationalFn ratio(den, c.den());        // den/gcd up to a unit
    den = ratio.num() * c.den();
  }
  std::map<Permutation, LaurentPoly> scaled;
  bool int_ok = true;
  for (const auto& [w, c] : h.terms()) {
    RationalFn s = c * RationalFn(den);
    scaled[w] = s.exact_poly();
    int_ok = int_ok && scaled[w].is_integer_polynomial();
  }
  IntPoly probe;
  if (int_ok) {
    std::map<Permutation, IntPoly> hi;
    for (const auto& [w, p] : scaled) {
      if (!IntPoly::try_from_laurent(p, &probe)) {
        int_ok = false;
        break;
      }
      hi[w] = probe;
    }
    if (int_ok) {
      RegularCtx<IntPoly> ctx{IntPoly::q(), IntPoly::qm1()};
      IntPoly tr = regular_trace_generic(h.n(), std::move(hi), ctx);
      return RationalFn(tr.to_laurent(), den);
    }
  }
  RegularCtx<LaurentPoly> ctx{LaurentPoly::q(), LaurentPoly::q() - 1};
  LaurentPoly tr = regular_trace_generic(h.n(), std::move(scaled), ctx);
  return RationalFn(tr, den);
}

Rational regular_trace_at(const HeckeElement& h, const Rational& q0) {
  std::map<Permutation, Rational> hq;
  for (const auto& [w, c] : h.terms()) hq[w] = c.eval(q0);
  RegularCtx<Rational> ctx{q0, q0 - 1};
  return regular_trace_generic(h.n(), std::move(hq), ctx);
}

RationalFn regular_trace_word(const Word& w) { return regular_trace(word_to_element(w)); }

Rational regular_trace_word_at(const Word& w, const Rational& q0) {
  return regular_trace_at(word_to_element(w), q0);
}

}  // namespace hecke
