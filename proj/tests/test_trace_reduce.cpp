#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "trace_reduce.hpp"

using namespace hecke;

namespace {

const RationalFn Q{LaurentPoly::q()};
const RationalFn QM1{LaurentPoly::q() - 1};

CycleType T(std::vector<int> lengths, int n) { return CycleType(std::move(lengths), n); }

ReducedTraceCombo combo_of(int n, std::initializer_list<std::pair<std::vector<int>, RationalFn>> items) {
  ReducedTraceCombo c;
  c.n = n;
  for (const auto& [lengths, coeff] : items) c.add(T(lengths, n), coeff);
  return c;
}

// glue two words within one trace argument
Word glue(int n, const Word& a, const Word& b) {
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return Word(n, std::move(ls));
}

RationalFn recombine_through_regular_trace(const ReducedTraceCombo& c) {
  RationalFn total(0);
  for (const auto& [type, coeff] : c.terms) total += coeff * regular_trace_word(representative_word(type));
  return total;
}

Word random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, n - 1);
  std::vector<int> ls;
  int k = len(rng);
  for (int i = 0; i < k; ++i) ls.push_back(letter(rng));
  return Word(n, std::move(ls));
}

}  // namespace

TEST_CASE("canonical cycle type") {
  CHECK(canonical_cycle_type(Word(5, {3, 1})) == T({1, 1}, 5));
  CHECK(canonical_cycle_type(Word(6, {1, 2, 4})) == T({1, 2}, 6));
  CHECK(canonical_cycle_type(Word(6, {1, 3, 4})) == T({1, 2}, 6));
  CHECK(canonical_cycle_type(Word(5, {2})) == T({1}, 5));
  CHECK(canonical_cycle_type(Word(5, {})) == T({}, 5));
  CHECK_THROWS_AS(canonical_cycle_type(Word(5, {1, 2, 1})), not_square_free);
}

TEST_CASE("representative word") {
  CHECK(representative_word(T({1, 1}, 4)) == Word(4, {1, 3}));
  CHECK(representative_word(T({1, 2}, 5)) == Word(5, {1, 3, 4}));
  CHECK(representative_word(T({2, 2}, 6)) == Word(6, {1, 2, 4, 5}));
  CHECK(representative_word(T({}, 3)) == Word(3, {}));
  // CycleType construction itself rejects types that do not fit
  CHECK_THROWS_AS(T({2, 2}, 5), does_not_fit);
}

TEST_CASE("reduce_trace base cases") {
  CHECK(reduce_trace(Word(4, {1, 2, 1})) == combo_of(4, {{{2}, QM1}, {{1}, Q}}));
  CHECK(reduce_trace(Word(4, {1, 1})) == combo_of(4, {{{1}, QM1}, {{}, Q}}));
  CHECK(reduce_trace(Word(6, {2, 4, 5})) == combo_of(6, {{{1, 2}, RationalFn(1)}}));
  CHECK(reduce_trace(Word(3, {})) == combo_of(3, {{{}, RationalFn(1)}}));
}

TEST_CASE("hump expansion closed form") {
  // tr((g_1)^(p)) = q^{p-1} sum_i C(p-1,i) ((q-1)/q)^i tr((g_1)_{i+1})
  for (int p = 1; p <= 6; ++p) {
    int n = p + 1;
    ReducedTraceCombo expect;
    expect.n = n;
    for (int i = 0; i <= p - 1; ++i) {
      RationalFn coeff(LaurentPoly(binomial_ll(p - 1, i)) * LaurentPoly::q_power(p - 1 - i));
      for (int j = 0; j < i; ++j) coeff *= QM1;
      expect.add(T({i + 1}, n), coeff);
    }
    CHECK(reduce_trace(hump(n, 1, p)) == expect);
  }
}

TEST_CASE("sequence traces depend only on length") {
  for (int n = 3; n <= 7; ++n)
    for (int len = 1; len < n; ++len)
      for (int i = 1; i + len - 1 <= n - 1; ++i)
        CHECK(reduce_trace(asc_seq(n, i, len)) == combo_of(n, {{{len}, RationalFn(1)}}));
}

TEST_CASE("square-free words reduce to their cycle type") {
  std::mt19937 rng(417);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);  // 4..7
    std::vector<int> indices;
    for (int i = 1; i < n; ++i)
      if (rng() % 2) indices.push_back(i);
    std::shuffle(indices.begin(), indices.end(), rng);
    Word w(n, indices);
    ReducedTraceCombo c = reduce_trace(w);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms.begin()->first == canonical_cycle_type(w));
    CHECK(c.terms.begin()->second == RationalFn(1));
  }
}

TEST_CASE("reducer against the regular-representation oracle") {
  std::mt19937 rng(20240812);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      Word w = random_word(rng, n, 9);
      CAPTURE(n);
      CAPTURE(w.str());
      CHECK(recombine_through_regular_trace(reduce_trace(w)) == regular_trace_word(w));
    }
  }
}

TEST_CASE("reduction coefficients are integer polynomials") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Word w = random_word(rng, 5, 8);
    for (const auto& [type, coeff] : reduce_trace(w).terms) {
      CHECK(coeff.is_polynomial());
      CHECK(coeff.exact_poly().is_integer_polynomial());
    }
  }
}

TEST_CASE("overlap recurrences from the reduction formulas") {
  // tr((g_1)_p (g_1)^(l)) = f_{2p+1} tr((g_1)_p (g_{p+1})^(l-p))
  //   + (q-1) sum_k q^k f_{2(p-k)+1} tr((g_1)_{k-1} (g_{k+1})_{p-k} (g_{p+1})^(l-p))
  for (int p = 1; p <= 3; ++p) {
    for (int l = p + 1; l <= 5; ++l) {
      int n = l + 2 <= 7 ? l + 2 : 7;
      if (l + 1 > n - 1) continue;
      Word lhs_word = glue(n, asc_seq(n, 1, p), hump(n, 1, l));
      ReducedTraceCombo lhs = reduce_trace(lhs_word);
      ReducedTraceCombo rhs;
      rhs.n = n;
      {
        Word w = glue(n, asc_seq(n, 1, p), hump(n, p + 1, l - p));
        rhs.axpy(RationalFn(f_coeff(2 * p + 1)), reduce_trace(w));
      }
      for (int k = 1; k <= p; ++k) {
        std::vector<int> ls;
        for (int i = 1; i <= k - 1; ++i) ls.push_back(i);
        for (int i = k + 1; i <= p; ++i) ls.push_back(i);
        Word w = glue(n, Word(n, ls), hump(n, p + 1, l - p));
        RationalFn coeff = QM1 * RationalFn(LaurentPoly::q_power(k) * f_coeff(2 * (p - k) + 1));
        rhs.axpy(coeff, reduce_trace(w));
      }
      CAPTURE(p);
      CAPTURE(l);
      CHECK(lhs == rhs);
    }
  }

  // simplest special case: tr(g_1 (g_1)^(l)) = f_3 tr(g_1 (g_2)^(l-1)) + q(q-1) tr((g_2)^(l-1))
  for (int l = 2; l <= 5; ++l) {
    int n = l + 1;
    ReducedTraceCombo lhs = reduce_trace(glue(n, asc_seq(n, 1, 1), hump(n, 1, l)));
    ReducedTraceCombo rhs;
    rhs.n = n;
    rhs.axpy(RationalFn(f_coeff(3)), reduce_trace(glue(n, asc_seq(n, 1, 1), hump(n, 2, l - 1))));
    rhs.axpy(Q * QM1, reduce_trace(hump(n, 2, l - 1)));
    CHECK(lhs == rhs);
  }

  // two-step case: tr((g_1)_2 (g_1)^(l)) = f_5 tr((g_1)_2 (g_3)^(l-2))
  //   + q(q-1) f_3 tr(g_1 (g_2)^(l-2)) + q^2 (q-1) tr(g_1 (g_3)^(l-2))
  for (int l = 3; l <= 5; ++l) {
    int n = l + 1;
    ReducedTraceCombo lhs = reduce_trace(glue(n, asc_seq(n, 1, 2), hump(n, 1, l)));
    ReducedTraceCombo rhs;
    rhs.n = n;
    rhs.axpy(RationalFn(f_coeff(5)), reduce_trace(glue(n, asc_seq(n, 1, 2), hump(n, 3, l - 2))));
    rhs.axpy(Q * QM1 * RationalFn(f_coeff(3)), reduce_trace(glue(n, asc_seq(n, 1, 1), hump(n, 2, l - 2))));
    rhs.axpy(Q * Q * QM1, reduce_trace(glue(n, asc_seq(n, 1, 1), hump(n, 3, l - 2))));
    CAPTURE(l);
    CHECK(lhs == rhs);
  }

  // same structure one slot up: tr((g_1)_3 (g_2)^(k)) = f_5 tr((g_1)_3 (g_4)^(k-2))
  //   + q(q-1) f_3 tr((g_1)_2 (g_3)^(k-2)) + q^2 (q-1) tr(g_1 g_3 (g_4)^(k-2))
  for (int k = 3; k <= 4; ++k) {
    int n = k + 3;
    ReducedTraceCombo lhs = reduce_trace(glue(n, asc_seq(n, 1, 3), hump(n, 2, k)));
    ReducedTraceCombo rhs;
    rhs.n = n;
    rhs.axpy(RationalFn(f_coeff(5)), reduce_trace(glue(n, asc_seq(n, 1, 3), hump(n, 4, k - 2))));
    rhs.axpy(Q * QM1 * RationalFn(f_coeff(3)), reduce_trace(glue(n, asc_seq(n, 1, 2), hump(n, 3, k - 2))));
    rhs.axpy(Q * Q * QM1, reduce_trace(glue(n, Word(n, {1, 3}), hump(n, 4, k - 2))));
    CAPTURE(k);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("doubly-cut overlap identities") {
  // tr(g_1 g_3 (g_2)^(4)) at n = 7
  int n = 7;
  ReducedTraceCombo lhs = reduce_trace(glue(n, Word(n, {1, 3}), hump(n, 2, 4)));
  ReducedTraceCombo rhs;
  rhs.n = n;
  RationalFn q2p1(LaurentPoly::q() * LaurentPoly::q() + 1);
  rhs.axpy(QM1 * q2p1, reduce_trace(glue(n, asc_seq(n, 1, 3), hump(n, 4, 2))));
  rhs.axpy(QM1 * QM1 * Q, reduce_trace(glue(n, asc_seq(n, 1, 2), hump(n, 3, 2))));
  rhs.axpy(Q * Q, reduce_trace(glue(n, Word(n, {1, 3}), hump(n, 4, 2))));
  CHECK(lhs == rhs);

  // tr(g_1 g_3 (g_1)^(5)) at n = 7
  RationalFn q2mq1(LaurentPoly::q() * LaurentPoly::q() - LaurentPoly::q() + 1);
  RationalFn poly2(LaurentPoly(2) * LaurentPoly::q() * LaurentPoly::q() - LaurentPoly::q() + 2);
  ReducedTraceCombo lhs2 = reduce_trace(glue(n, Word(n, {1, 3}), hump(n, 1, 5)));
  ReducedTraceCombo rhs2;
  rhs2.n = n;
  rhs2.axpy(QM1 * q2p1 * q2mq1, reduce_trace(glue(n, asc_seq(n, 1, 3), hump(n, 4, 2))));
  rhs2.axpy(QM1 * QM1 * Q * poly2, reduce_trace(glue(n, asc_seq(n, 2, 2), hump(n, 4, 2))));
  rhs2.axpy(Q * Q * q2mq1, reduce_trace(glue(n, Word(n, {1, 3}), hump(n, 4, 2))));
  rhs2.axpy(Q * Q * QM1 * QM1 * QM1, reduce_trace(glue(n, Word(n, {3}), hump(n, 4, 2))));
  rhs2.axpy(QM1 * Q * Q * Q, reduce_trace(glue(n, Word(n, {2}), hump(n, 4, 2))));
  CHECK(lhs2 == rhs2);
}

TEST_CASE("fast path equals the generic engine on small instances") {
  for (int p = 1; p <= 5; ++p) {
    for (int r = 1; p + r <= 6; ++r) {
      int n = p + r + 1;
      std::vector<int> all_cuts;
      for (int c = 1; c <= p - 1; ++c) all_cuts.push_back(c);
      for (unsigned mask = 0; mask < (1u << all_cuts.size()); ++mask) {
        std::vector<int> cuts;
        for (size_t b = 0; b < all_cuts.size(); ++b)
          if (mask & (1u << b)) cuts.push_back(all_cuts[b]);
        for (int k = 1; k <= p + 1; ++k) {
          CutSequenceSpec spec{p, cuts, k, r};
          CAPTURE(p);
          CAPTURE(r);
          CAPTURE(k);
          ReducedTraceCombo fast = reduce_hump_product(spec, n);
          ReducedTraceCombo generic = reduce_trace(spec.flattened(n));
          CHECK(fast == generic);
        }
      }
    }
  }
}

TEST_CASE("fast path flatten term") {
  // no cut, hump just above the sequence
  int p = 2, r = 3, n = 6;
  CutSequenceSpec spec{p, {}, p + 1, r};
  ReducedTraceCombo expect;
  expect.n = n;
  for (int l = 0; l <= r - 1; ++l) {
    RationalFn coeff(LaurentPoly(binomial_ll(r - 1, l)) * LaurentPoly::q_power(l));
    for (int j = 0; j < r - 1 - l; ++j) coeff *= QM1;
    expect.add(T({p + r - l}, n), coeff);
  }
  CHECK(reduce_hump_product(spec, n) == expect);
  CHECK_THROWS_AS(reduce_hump_product(CutSequenceSpec{2, {2}, 1, 1}, 6), malformed_spec);
  CHECK_THROWS_AS(reduce_hump_product(CutSequenceSpec{3, {}, 5, 1}, 6), malformed_spec);
  CHECK_THROWS_AS(reduce_hump_product(CutSequenceSpec{4, {}, 1, 3}, 6), does_not_fit);
}

TEST_CASE("sequence-tail closed forms") {
  CHECK(seq_times_seq_tail(3, 0, SeqTailVariant::touching, 6) == combo_of(6, {{{3}, RationalFn(1)}}));
  CHECK(seq_times_seq_tail(3, 0, SeqTailVariant::overlapping_one, 6) ==
        combo_of(6, {{{3}, QM1}, {{2}, Q}}));
  CHECK(seq_times_seq_tail(1, 0, SeqTailVariant::overlapping_one, 4) ==
        combo_of(4, {{{1}, QM1}, {{}, Q}}));

  // against the generic engine: touching is (g_1)_{len-1} (g_len)^(m+1),
  // overlapping_one is (g_1)_len (g_len)^(m+1)
  for (int len = 1; len <= 4; ++len) {
    for (int m = 0; len + m <= 6; ++m) {
      int n = len + m + 1 < 3 ? 3 : len + m + 1;
      Word touching = glue(n, asc_seq(n, 1, len - 1), hump(n, len, m + 1));
      CHECK(seq_times_seq_tail(len, m, SeqTailVariant::touching, n) == reduce_trace(touching));
      if (len + m + 1 <= n - 1 || len + m <= n - 1) {
        Word overlapping = glue(n, asc_seq(n, 1, len), hump(n, len, m + 1));
        CHECK(seq_times_seq_tail(len, m, SeqTailVariant::overlapping_one, n) == reduce_trace(overlapping));
      }
    }
  }
  CHECK_THROWS_AS(seq_times_seq_tail(5, 4, SeqTailVariant::touching, 6), does_not_fit);
}

TEST_CASE("certificate json") {
  auto cert = reduce_trace(Word(4, {1, 2, 1})).certificate();
  CHECK(cert["{2}"] == "q-1");
  CHECK(cert["{1}"] == "q");
  auto cert2 = reduce_trace(Word(4, {1, 1})).certificate();
  CHECK(cert2["{1}"] == "q-1");
  CHECK(cert2["{}"] == "q");
}
