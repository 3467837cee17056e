#include "trace_reduce.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <shared_mutex>

namespace hecke {

// ---------------------------------------------------------------------------
// ReducedTraceCombo
// ---------------------------------------------------------------------------

void ReducedTraceCombo::add(const CycleType& c, const RationalFn& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(c);
  if (it == terms.end()) {
    terms.emplace(c, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

ReducedTraceCombo& ReducedTraceCombo::axpy(const RationalFn& coeff, const ReducedTraceCombo& other) {
  for (const auto& [c, v] : other.terms) add(c, coeff * v);
  return *this;
}

nlohmann::json ReducedTraceCombo::certificate() const {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [c, v] : terms) obj[c.str()] = v.str();
  return obj;
}

// ---------------------------------------------------------------------------
// Square-free canonicalization
// ---------------------------------------------------------------------------

CycleType canonical_cycle_type(const Word& w) {
  std::vector<int> sorted = w.letters;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      throw not_square_free("g_" + std::to_string(sorted[i]) + " repeats in " + w.str());
  std::vector<int> lengths;
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[j - 1] + 1) ++j;
    lengths.push_back(static_cast<int>(j - i));
    i = j;
  }
  return CycleType(std::move(lengths), w.n);
}

Word representative_word(const CycleType& c) {
  std::vector<int> letters;
  int start = 1;
  for (int len : c.seq_lengths()) {  // ascending
    for (int k = 0; k < len; ++k) letters.push_back(start + k);
    start += len + 1;
  }
  if (start - 2 > c.ambient_n() - 1) throw does_not_fit("cycle type " + c.str());
  return Word(c.ambient_n(), std::move(letters));
}

// ---------------------------------------------------------------------------
// The generic rewriting engine.
//
// A trace argument is a cyclic word in the generators. One rewriting step
// picks the lowest index l that repeats, finds two cyclically consecutive
// occurrences whose gap is free of g_{l-1} (at most one gap can contain it),
// commutes the gap's low letters out, and then walks inward: as long as the
// bracketing pair g_j ... g_j encloses two or more copies of g_{j+1}, the
// problem moves to the first two of those. The innermost pair is resolved by
// the quadratic relation when no g_{j+1} lies between (everything else
// commutes past g_j) and by the braid relation when exactly one does. Each
// step lowers the occurrence-count vector lexicographically, so the process
// terminates; square-free words are read off as cycle types directly.
//
// Coefficients stay integer polynomials throughout, and results are memoized
// under a canonical key (commutation-sorted, minimal rotation).
// ---------------------------------------------------------------------------

namespace {

using Wd = std::vector<int>;
using TypeKey = std::vector<int>;

struct EngineCombo {
  std::map<TypeKey, IntPoly> terms;

  void add(const TypeKey& k, const IntPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  void axpy(const IntPoly& c, const EngineCombo& o) {
    for (const auto& [k, v] : o.terms) add(k, c * v);
  }
};

bool is_square_free(const Wd& w) {
  Wd s = w;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

TypeKey square_free_type(const Wd& w) {
  Wd s = w;
  std::sort(s.begin(), s.end());
  TypeKey lengths;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = i + 1;
    while (j < s.size() && s[j] == s[j - 1] + 1) ++j;
    lengths.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Wd commute_sort(Wd w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1] + 1) {
        std::swap(w[i], w[i + 1]);
        changed = true;
      }
    }
  }
  return w;
}

Wd canon_word(const Wd& w) {
  Wd base = commute_sort(w);
  if (base.size() <= 1) return base;
  Wd best = base;
  Wd cur = base;
  for (size_t r = 1; r < base.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

class Engine {
 public:
  EngineCombo reduce(const Wd& word) {
    Wd key = canon_word(word);
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    EngineCombo result = compute(key);
    {
      std::unique_lock lock(mu_);
      memo_.emplace(key, result);
    }
    return result;
  }

 private:
  EngineCombo compute(const Wd& w);

  std::shared_mutex mu_;
  std::map<Wd, EngineCombo> memo_;
};

EngineCombo Engine::compute(const Wd& w) {
  EngineCombo out;
  if (is_square_free(w)) {
    out.add(square_free_type(w), IntPoly(1));
    return out;
  }

  // lowest repeated index
  std::map<int, std::vector<size_t>> occ_map;
  for (size_t i = 0; i < w.size(); ++i) occ_map[w[i]].push_back(i);
  int lmin = 0;
  for (const auto& [letter, occ] : occ_map)
    if (occ.size() >= 2) {
      lmin = letter;
      break;
    }
  const auto& occ = occ_map[lmin];

  // a cyclic gap free of g_{lmin-1}; at most one gap can hold the single
  // g_{lmin-1}, so one of the occ.size() >= 2 gaps qualifies
  size_t gap_idx = occ.size();
  for (size_t j = 0; j < occ.size(); ++j) {
    bool ok = true;
    for (size_t i = (occ[j] + 1) % w.size(); i != occ[(j + 1) % occ.size()]; i = (i + 1) % w.size()) {
      if (w[i] == lmin - 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gap_idx = j;
      break;
    }
  }
  assert(gap_idx < occ.size());

  Wd rot(w.begin() + occ[gap_idx], w.end());
  rot.insert(rot.end(), w.begin(), w.begin() + occ[gap_idx]);
  size_t p2 = std::find(rot.begin() + 1, rot.end(), lmin) - rot.begin();

  Wd small, big;
  for (size_t i = 1; i < p2; ++i) (rot[i] < lmin ? small : big).push_back(rot[i]);
  Wd rest(rot.begin() + p2 + 1, rot.end());

  // walk inward while the enclosed letter one higher still repeats
  struct Frame {
    Wd prefix, suffix;
  };
  std::vector<Frame> frames;
  Wd a = big;
  while (true) {
    int next = lmin + static_cast<int>(frames.size()) + 1;
    std::vector<size_t> pos;
    for (size_t i = 0; i < a.size() && pos.size() < 2; ++i)
      if (a[i] == next) pos.push_back(i);
    if (pos.size() < 2) break;
    frames.push_back({Wd(a.begin(), a.begin() + pos[0]), Wd(a.begin() + pos[1] + 1, a.end())});
    a = Wd(a.begin() + pos[0] + 1, a.begin() + pos[1]);
  }
  const int x = lmin + static_cast<int>(frames.size());  // innermost bracket letter

  std::vector<std::pair<IntPoly, Wd>> variants;
  auto braid_at = std::find(a.begin(), a.end(), x + 1);
  if (braid_at == a.end()) {
    // g_x a g_x = a g_x^2 = a ((q-1) g_x + q)
    Wd keep = a;
    keep.push_back(x);
    variants.emplace_back(IntPoly::qm1(), std::move(keep));
    variants.emplace_back(IntPoly::q(), a);
  } else {
    // g_x a1 g_{x+1} a2 g_x = a1 g_{x+1} g_x g_{x+1} a2
    Wd repl(a.begin(), braid_at);
    repl.push_back(x + 1);
    repl.push_back(x);
    repl.push_back(x + 1);
    repl.insert(repl.end(), braid_at + 1, a.end());
    variants.emplace_back(IntPoly(1), std::move(repl));
  }

  for (auto& [coeff, repl] : variants) {
    Wd cur = repl;
    for (size_t k = frames.size(); k-- > 0;) {
      Wd next = frames[k].prefix;
      next.insert(next.end(), cur.begin(), cur.end());
      next.insert(next.end(), frames[k].suffix.begin(), frames[k].suffix.end());
      if (k > 0) {
        int bracket = lmin + static_cast<int>(k);
        next.insert(next.begin(), bracket);
        next.push_back(bracket);
      }
      cur.swap(next);
    }
    Wd nw;
    if (frames.empty()) {
      nw = cur;
    } else {
      nw.push_back(lmin);
      nw.insert(nw.end(), cur.begin(), cur.end());
      nw.push_back(lmin);
    }
    nw.insert(nw.end(), small.begin(), small.end());
    nw.insert(nw.end(), rest.begin(), rest.end());
    out.axpy(coeff, reduce(nw));
  }
  return out;
}

Engine& engine() {
  static Engine e;
  return e;
}

ReducedTraceCombo to_public(const EngineCombo& c, int n) {
  ReducedTraceCombo out;
  out.n = n;
  for (const auto& [k, v] : c.terms) out.add(CycleType(k, n), RationalFn(v.to_laurent()));
  return out;
}

}  // namespace

ReducedTraceCombo reduce_trace(const Word& w) { return to_public(engine().reduce(w.letters), w.n); }

// ---------------------------------------------------------------------------
// The f-expansion fast path.
//
// An instance is a sequence g_1..g_p with cuts, against the hump
// (g_s)^(p+r-s+1) whose top is pinned at p+r. Three moves reduce any
// instance:
//   flatten  s = p+1: the hump merges with whatever sits below it through
//            the binomial expansion, one term per surviving top length;
//   split    s sits on a cut: the cut trace is (A - qB)/(q-1) where A, B
//            are the same instance without the cut and hump starts s, s+1;
//   lift     s sits inside a piece [a, b]: the overlap of length b-s+1
//            f-expands, raising the hump start to b+1 and placing one new
//            cut per term near the bottom of the piece.
// Every move either raises the hump start or removes the cut under it, so
// the recursion ends at flatten instances.
// ---------------------------------------------------------------------------

namespace {

struct FastKey {
  int p, r, s;
  std::vector<int> cuts;
  bool operator<(const FastKey& o) const {
    return std::tie(p, r, s, cuts) < std::tie(o.p, o.r, o.s, o.cuts);
  }
};

class FastReducer {
 public:
  EngineCombo reduce(int p, int r, std::vector<int> cuts, int s) {
    FastKey key{p, r, s, cuts};
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    EngineCombo result = compute(p, r, std::move(cuts), s);
    {
      std::unique_lock lock(mu_);
      memo_.emplace(std::move(key), result);
    }
    return result;
  }

 private:
  EngineCombo compute(int p, int r, std::vector<int> cuts, int s) {
    EngineCombo out;
    if (s == p + 1) {  // flatten
      int ctop = cuts.empty() ? 0 : cuts.back();
      TypeKey lower;
      int prev = 0;
      for (int c : cuts) {
        if (c - prev - 1 > 0) lower.push_back(c - prev - 1);
        prev = c;
      }
      for (int l = 0; l <= r - 1; ++l) {
        IntPoly coeff = IntPoly(binomial_ll(r - 1, l)).shifted(l);
        for (int i = 0; i < r - 1 - l; ++i) coeff = coeff * IntPoly::qm1();
        TypeKey type = lower;
        type.push_back(p + r - l - ctop);
        std::sort(type.begin(), type.end());
        out.add(type, coeff);
      }
      return out;
    }
    auto cut_it = std::find(cuts.begin(), cuts.end(), s);
    if (cut_it != cuts.end()) {  // split at the cut under the hump
      std::vector<int> rest = cuts;
      rest.erase(std::find(rest.begin(), rest.end(), s));
      EngineCombo a = reduce(p, r, rest, s);
      EngineCombo b = reduce(p, r, rest, s + 1);
      a.axpy(IntPoly::monomial(1, -1), b);  // a - q b
      for (const auto& [k, v] : a.terms) out.add(k, v.div_exact_qm1());
      return out;
    }
    // lift within the piece [a, b] containing s
    int lo = 1, hi = p;
    for (int c : cuts) {
      if (c < s)
        lo = c + 1;
      else {
        hi = c - 1;
        break;
      }
    }
    const int overlap = hi - s + 1;
    assert(overlap >= 1);
    out.axpy(f_coeff_int(2 * overlap + 1), reduce(p, r, cuts, hi + 1));
    for (int k = 1; k <= overlap; ++k) {
      std::vector<int> ncuts = cuts;
      ncuts.push_back(lo - 1 + k);
      std::sort(ncuts.begin(), ncuts.end());
      IntPoly coeff = IntPoly::qm1().shifted(k) * f_coeff_int(2 * (overlap - k) + 1);
      out.axpy(coeff, reduce(p, r, std::move(ncuts), hi + 1));
    }
    return out;
  }

  std::shared_mutex mu_;
  std::map<FastKey, EngineCombo> memo_;
};

FastReducer& fast_reducer() {
  static FastReducer f;
  return f;
}

}  // namespace

void CutSequenceSpec::validate() const {
  if (p < 1) throw malformed_spec("p must be positive");
  if (reach < 1) throw malformed_spec("hump reach must be positive");
  if (hump_start < 1 || hump_start > p + 1) throw malformed_spec("hump start outside 1..p+1");
  int prev = 0;
  for (int c : cuts) {
    if (c <= prev || c > p - 1) throw malformed_spec("cuts must increase strictly inside 1..p-1");
    prev = c;
  }
}

Word CutSequenceSpec::flattened(int n) const {
  validate();
  std::vector<int> letters;
  int prev = 0;
  for (int c : cuts) {
    for (int i = prev + 1; i <= c - 1; ++i) letters.push_back(i);
    prev = c;
  }
  for (int i = prev + 1; i <= p; ++i) letters.push_back(i);
  int top = p + reach;
  for (int i = hump_start; i <= top; ++i) letters.push_back(i);
  for (int i = top - 1; i >= hump_start; --i) letters.push_back(i);
  return Word(n, std::move(letters));
}

ReducedTraceCombo reduce_hump_product(const CutSequenceSpec& spec, int n) {
  spec.validate();
  if (spec.p + spec.reach > n - 1) throw does_not_fit("hump tops out above g_{n-1}");
  return to_public(fast_reducer().reduce(spec.p, spec.reach, spec.cuts, spec.hump_start), n);
}

ReducedTraceCombo seq_times_seq_tail(int len, int m, SeqTailVariant variant, int n) {
  if (len < 1 || m < 0) throw invalid_argument_error("seq_times_seq_tail: bad parameters");
  if (len + m > n - 1) throw does_not_fit("sequence tail tops out above g_{n-1}");
  ReducedTraceCombo out;
  out.n = n;
  auto single = [&](int length) { return CycleType(length == 0 ? std::vector<int>{} : std::vector<int>{length}, n); };
  if (variant == SeqTailVariant::touching) {
    // tr((g_1)_{len-1} (g_len)^(m+1)) = sum_i C(m,i) q^{m-i} (q-1)^i tr((g_1)_{len+i})
    for (int i = 0; i <= m; ++i) {
      IntPoly coeff = IntPoly(binomial_ll(m, i)).shifted(m - i);
      for (int j = 0; j < i; ++j) coeff = coeff * IntPoly::qm1();
      out.add(single(len + i), RationalFn(coeff.to_laurent()));
    }
    return out;
  }
  // overlapping_one: tr((g_1)_len (g_len)^(m+1))
  if (m == 0) {  // plain quadratic relation
    out.add(single(len), RationalFn(LaurentPoly::q() - 1));
    out.add(single(len - 1), RationalFn(LaurentPoly::q()));
    return out;
  }
  for (int i = 0; i <= m; ++i) {
    IntPoly coeff = IntPoly(binomial_ll(m, i)).shifted(m - i);
    for (int j = 0; j <= i; ++j) coeff = coeff * IntPoly::qm1();
    if (i >= 1) {
      IntPoly second = IntPoly(binomial_ll(m - 1, i - 1)).shifted(m - i + 1);
      for (int j = 0; j < i - 1; ++j) second = second * IntPoly::qm1();
      coeff = coeff + second;
    }
    out.add(single(len + i), RationalFn(coeff.to_laurent()));
  }
  return out;
}

}  // namespace hecke
