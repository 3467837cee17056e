#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "murphy_traces.hpp"
#include "qpoly.hpp"
#include "trace_reduce.hpp"
#include "young.hpp"

namespace hecke {

/// Linear combination of Murphy-product traces.
using MurphyCombo = std::map<MurphyProduct, RationalFn>;

/// Cycle types as bare length tuples (sorted ascending); combos are
/// n-independent, so this is the natural key.
using LengthsKey = std::vector<int>;

/// tr((g_1)_{k-1}) = (q/(q-1))^{k-2} sum_i (-1)^i C(k-1,i) tr(L_{k-i}).
MurphyCombo single_cycle_combo(int k);

/// Every cycle type realizable in H_n(q), ordered by number of cycles and
/// then lexicographically; the identity type comes first. This is the order
/// in which the solver can proceed and the column order of every export.
std::vector<LengthsKey> sweep_cycle_types(int n);

/// Full character table of H_n(q): diagrams in reverse-lexicographic order
/// against cycle types in sweep order, every entry an exact Laurent
/// polynomial.
struct CharacterTable {
  int n = 2;
  std::vector<YoungDiagram> diagrams;
  std::vector<CycleType> cycle_types;
  std::vector<std::vector<LaurentPoly>> entries;  // [diagram][cycle type]

  const LaurentPoly& at(size_t d, size_t c) const { return entries[d][c]; }
  const LaurentPoly& at(const YoungDiagram& d, const CycleType& c) const;
  size_t diagram_index(const YoungDiagram& d) const;
};

nlohmann::ordered_json table_to_json(const CharacterTable& t);
std::string table_to_csv(const CharacterTable& t);
std::string table_to_latex(const CharacterTable& t);

struct VerifyCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> counterexamples;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
  std::string text() const;
};

/// Expresses every reduced trace as a combination of Murphy-product traces by
/// the recursive pivot procedure, and assembles character tables. Solved
/// combos are cached in memory and, when a cache directory is set, as one
/// JSON file per cycle type (written atomically, keyed by a schema version).
class CharSolver {
 public:
  CharSolver() = default;
  explicit CharSolver(std::string cache_dir);

  /// Solves the combo for one cycle type, pulling in whatever earlier types
  /// it needs. Throws singular_pivot when the pivot procedure degenerates.
  const MurphyCombo& combo(const LengthsKey& lengths);

  /// Extends a solved base combo by one more cycle of length l_new >= max,
  /// via tr(Psi_base L_m) with m minimal.
  MurphyCombo extend_cycle_combo(const LengthsKey& base, int l_new);

  std::map<LengthsKey, MurphyCombo> solve_all(int n);

  CharacterTable character_table(int n);

 private:
  MurphyCombo solve(const LengthsKey& lengths);
  bool load_cached(const LengthsKey& lengths, MurphyCombo* out) const;
  void store_cached(const LengthsKey& lengths, const MurphyCombo& combo) const;

  std::map<LengthsKey, MurphyCombo> solved_;
  std::set<LengthsKey> in_progress_;
  std::string cache_dir_;
};

/// Runs the table checks: "q1" (Murnaghan-Nakayama at q = 1), "conjugate"
/// (coefficient reversal between conjugate diagrams), "regular" (dimension-
/// weighted column sums against the regular trace; exact through n = 6,
/// three random rational points at n = 7), "integrality" (entries are
/// integer polynomials of degree at most the generator count). An empty
/// selection runs everything.
VerifyReport verify_table(const CharacterTable& t, const std::set<std::string>& checks = {});

nlohmann::json combos_to_json(int n, const std::map<LengthsKey, MurphyCombo>& combos);

}  // namespace hecke
