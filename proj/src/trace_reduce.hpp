#pragma once

#include <map>
#include <vector>

#include "hecke_core.hpp"
#include "json.hpp"
#include "qpoly.hpp"
#include "young.hpp"

namespace hecke {

/// Linear combination of cycle-type reduced traces: in every irrep
/// simultaneously, tr(w) = sum coeff_c * tr(representative(c)).
struct ReducedTraceCombo {
  int n = 2;
  std::map<CycleType, RationalFn> terms;

  void add(const CycleType& c, const RationalFn& coeff);
  ReducedTraceCombo& axpy(const RationalFn& coeff, const ReducedTraceCombo& other);
  bool operator==(const ReducedTraceCombo& o) const { return terms == o.terms; }

  nlohmann::json certificate() const;  // {"{1,2}": "q-1", ...}
};

/// Cycle type of a square-free word: sort the indices and read off the
/// maximal runs of consecutive values. Throws not_square_free on repeats.
CycleType canonical_cycle_type(const Word& w);

/// Minimal-spacing representative with lengths ascending:
/// (g_1)_{l_1} (g_{l_1+2})_{l_2} ...
Word representative_word(const CycleType& c);

/// Reduces tr(w) to a combination of cycle-type reduced traces by repeated
/// use of the quadratic relation, braiding and free cyclic rotations.
ReducedTraceCombo reduce_trace(const Word& w);

/// A sequence g_1..g_p with cuts, times the hump (g_k)^(p+r-k+1) contributed
/// by the Murphy operator L_{p+r+1}.
struct CutSequenceSpec {
  int p = 1;
  std::vector<int> cuts;  // strictly increasing, inside 1..p-1
  int hump_start = 1;     // 1 <= k <= p+1
  int reach = 1;          // r >= 1; the hump tops out at p+r

  void validate() const;        // malformed_spec
  Word flattened(int n) const;  // the same trace argument as one word
};

/// f-expansion evaluation of a CutSequenceSpec; agrees with reduce_trace on
/// the flattened word but never touches the generic rewriting engine.
ReducedTraceCombo reduce_hump_product(const CutSequenceSpec& spec, int n);

enum class SeqTailVariant { touching, overlapping_one };

/// Closed binomial forms for a single sequence against a hump directly above
/// it: touching is tr((g_1)_{len-1} (g_len)^(m+1)), overlapping_one is
/// tr((g_1)_len (g_len)^(m+1)).
ReducedTraceCombo seq_times_seq_tail(int len, int m, SeqTailVariant variant, int n);

}  // namespace hecke
