#include "char_solver.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "hecke_core.hpp"
#include "sym_oracle.hpp"

namespace hecke {

namespace {

const int kCacheSchemaVersion = 1;

std::string lengths_str(const LengthsKey& lengths) {
  std::string out = "{";
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths[i]);
  }
  return out + "}";
}

void combo_axpy(MurphyCombo& acc, const RationalFn& c, const MurphyCombo& other) {
  for (const auto& [p, v] : other) {
    auto it = acc.find(p);
    if (it == acc.end()) {
      RationalFn add = c * v;
      if (!add.is_zero()) acc.emplace(p, std::move(add));
    } else {
      it->second += c * v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

}  // namespace

MurphyCombo single_cycle_combo(int k) {
  if (k < 2) throw index_out_of_range("single cycle needs k >= 2");
  MurphyCombo combo;
  RationalFn factor = (RationalFn(LaurentPoly::q()) / RationalFn(LaurentPoly::q() - 1)).pow(k - 2);
  for (int i = 0; i <= k - 2; ++i) {
    RationalFn coeff = factor * RationalFn((i % 2 == 0 ? 1 : -1) * binomial_ll(k - 1, i));
    combo.emplace(MurphyProduct({k - i}), coeff);
  }
  return combo;
}

namespace {

void sweep_rec(int min_len, int budget, LengthsKey& prefix, int want, std::vector<LengthsKey>& out) {
  if (static_cast<int>(prefix.size()) == want) {
    out.push_back(prefix);
    return;
  }
  for (int l = min_len; l + 1 <= budget; ++l) {
    prefix.push_back(l);
    sweep_rec(l, budget - (l + 1), prefix, want, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LengthsKey> sweep_cycle_types(int n) {
  std::vector<LengthsKey> out;
  out.push_back({});
  for (int kappa = 1; 2 * kappa <= n; ++kappa) {
    LengthsKey prefix;
    sweep_rec(1, n, prefix, kappa, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CharSolver
// ---------------------------------------------------------------------------

CharSolver::CharSolver(std::string cache_dir) : cache_dir_(std::move(cache_dir)) {}

const MurphyCombo& CharSolver::combo(const LengthsKey& lengths) {
  auto it = solved_.find(lengths);
  if (it != solved_.end()) return it->second;
  if (in_progress_.count(lengths))
    throw singular_pivot("cyclic dependency while solving " + lengths_str(lengths));
  in_progress_.insert(lengths);
  MurphyCombo c;
  if (!load_cached(lengths, &c)) {
    c = solve(lengths);
    store_cached(lengths, c);
  }
  in_progress_.erase(lengths);
  return solved_.emplace(lengths, std::move(c)).first->second;
}

MurphyCombo CharSolver::solve(const LengthsKey& lengths) {
  if (lengths.empty()) {
    MurphyCombo c;
    c.emplace(MurphyProduct({}), RationalFn(1));
    return c;
  }
  if (lengths.size() == 1) return single_cycle_combo(lengths[0] + 1);
  LengthsKey base(lengths.begin(), lengths.end() - 1);
  return extend_cycle_combo(base, lengths.back());
}

MurphyCombo CharSolver::extend_cycle_combo(const LengthsKey& base, int l_new) {
  if (base.empty()) throw invalid_argument_error("extend needs a nonempty base");
  if (l_new < base.back()) throw invalid_argument_error("new cycle must be at least the largest in the base");
  const int kappa = static_cast<int>(base.size());
  const int sigma = std::accumulate(base.begin(), base.end(), 0);
  const int m = sigma + kappa + l_new + 1;  // minimal admissible level
  if (m > kMaxN)
    throw does_not_fit("type " + lengths_str(base) + "+" + std::to_string(l_new) + " needs n = " +
                       std::to_string(m) + " > " + std::to_string(kMaxN));

  // Right side: append L_m inside every Murphy product of the base combo;
  // L_m commutes with everything in Psi_base, so the base identity carries
  // through unchanged.
  const MurphyCombo base_combo = combo(base);  // copy: combo() may rehash solved_
  MurphyCombo rhs;
  for (const auto& [p, c] : base_combo) {
    std::vector<int> idx = p.indices();
    idx.push_back(m);
    rhs.emplace(MurphyProduct(std::move(idx)), c);
  }

  // Left side: expand L_m into humps and reduce each tr(Psi_base * hump).
  Word psi = representative_word(CycleType(base, m));
  std::map<LengthsKey, RationalFn> lhs;
  for (int i = 1; i <= m - 1; ++i) {
    std::vector<int> letters = psi.letters;
    Word h = hump(m, i, m - i);
    letters.insert(letters.end(), h.letters.begin(), h.letters.end());
    ReducedTraceCombo red = reduce_trace(Word(m, std::move(letters)));
    RationalFn scale(LaurentPoly::q_power(-(m - 1 - i)));
    for (const auto& [ct, v] : red.terms) {
      auto lit = lhs.find(ct.seq_lengths());
      if (lit == lhs.end())
        lhs.emplace(ct.seq_lengths(), scale * v);
      else {
        lit->second += scale * v;
        if (lit->second.is_zero()) lhs.erase(lit);
      }
    }
  }

  LengthsKey target = base;
  target.push_back(l_new);
  std::sort(target.begin(), target.end());

  auto pivot_it = lhs.find(target);
  if (pivot_it == lhs.end() || pivot_it->second.is_zero())
    throw singular_pivot("target " + lengths_str(target) + " does not appear in tr(Psi L_" +
                         std::to_string(m) + ")");
  RationalFn pivot = pivot_it->second;
  lhs.erase(pivot_it);

  for (const auto& [lengths, coeff] : lhs) combo_axpy(rhs, -coeff, combo(lengths));

  RationalFn inv = RationalFn(1) / pivot;
  MurphyCombo result;
  for (const auto& [p, v] : rhs) {
    RationalFn scaled = v * inv;
    if (!scaled.is_zero()) result.emplace(p, std::move(scaled));
  }
  return result;
}

std::map<LengthsKey, MurphyCombo> CharSolver::solve_all(int n) {
  std::map<LengthsKey, MurphyCombo> out;
  for (const auto& lengths : sweep_cycle_types(n)) out.emplace(lengths, combo(lengths));
  return out;
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

namespace {

std::string cache_file_name(const LengthsKey& lengths) {
  if (lengths.empty()) return "type-id.json";
  std::string name = "type";
  for (int l : lengths) name += "-" + std::to_string(l);
  return name + ".json";
}

}  // namespace

bool CharSolver::load_cached(const LengthsKey& lengths, MurphyCombo* out) const {
  if (cache_dir_.empty()) return false;
  std::filesystem::path file = std::filesystem::path(cache_dir_) / cache_file_name(lengths);
  std::ifstream in(file);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return false;
    if (j.at("cycle_type").get<std::vector<int>>() != lengths) return false;
    MurphyCombo combo;
    for (const auto& term : j.at("murphy")) {
      MurphyProduct p(term.at("indices").get<std::vector<int>>());
      combo.emplace(std::move(p), RationalFn::from_json(term.at("coeff")));
    }
    *out = std::move(combo);
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable cache entries are recomputed
  }
}

void CharSolver::store_cached(const LengthsKey& lengths, const MurphyCombo& combo) const {
  if (cache_dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(cache_dir_, ec);
  nlohmann::json murphy = nlohmann::json::array();
  for (const auto& [p, v] : combo)
    murphy.push_back({{"indices", p.indices()}, {"coeff", v.to_json()}});
  nlohmann::json j{{"schema_version", kCacheSchemaVersion}, {"cycle_type", lengths}, {"murphy", murphy}};
  std::filesystem::path file = std::filesystem::path(cache_dir_) / cache_file_name(lengths);
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream o(tmp);
    if (!o) throw io_error("cannot write " + tmp.string());
    o << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw io_error("cannot move " + tmp.string() + " into place: " + ec.message());
}

// ---------------------------------------------------------------------------
// Character table
// ---------------------------------------------------------------------------

const LaurentPoly& CharacterTable::at(const YoungDiagram& d, const CycleType& c) const {
  for (size_t ci = 0; ci < cycle_types.size(); ++ci)
    if (cycle_types[ci] == c) return entries[diagram_index(d)][ci];
  throw invalid_argument_error("cycle type " + c.str() + " not in table");
}

size_t CharacterTable::diagram_index(const YoungDiagram& d) const {
  for (size_t di = 0; di < diagrams.size(); ++di)
    if (diagrams[di] == d) return di;
  throw invalid_argument_error("diagram " + d.str() + " not in table");
}

CharacterTable CharSolver::character_table(int n) {
  if (n < 2) throw invalid_argument_error("character_table: n >= 2");
  auto combos = solve_all(n);
  MurphyTraceTable traces = murphy_trace_table(n, n);

  CharacterTable t;
  t.n = n;
  t.diagrams = enumerate_diagrams(n);
  for (const auto& lengths : sweep_cycle_types(n)) t.cycle_types.emplace_back(lengths, n);

  t.entries.resize(t.diagrams.size());
  for (size_t di = 0; di < t.diagrams.size(); ++di) {
    const auto& g = t.diagrams[di];
    for (const auto& ct : t.cycle_types) {
      RationalFn value(0);
      for (const auto& [p, c] : combos.at(ct.seq_lengths())) value += c * traces.at(p, g);
      // denominators must cancel here; anything else is an upstream bug
      t.entries[di].push_back(value.exact_poly());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------------

nlohmann::ordered_json table_to_json(const CharacterTable& t) {
  nlohmann::ordered_json out;
  out["n"] = t.n;
  nlohmann::ordered_json diagrams = nlohmann::ordered_json::array();
  for (const auto& d : t.diagrams) diagrams.push_back(d.str());
  out["diagrams"] = diagrams;
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& c : t.cycle_types) {
    types.push_back(c.str());
    classes.push_back(cycle_type_partition(c).str());
  }
  out["cycle_types"] = types;
  out["class_partitions"] = classes;
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (size_t di = 0; di < t.diagrams.size(); ++di) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (size_t ci = 0; ci < t.cycle_types.size(); ++ci)
      row[cycle_type_partition(t.cycle_types[ci]).str()] = t.at(di, ci).str();
    entries[t.diagrams[di].str()] = row;
  }
  out["entries"] = entries;
  return out;
}

std::string table_to_csv(const CharacterTable& t) {
  std::string out = "\"diagram\"";
  for (const auto& c : t.cycle_types) out += ",\"" + cycle_type_partition(c).str() + "\"";
  out += "\n";
  for (size_t di = 0; di < t.diagrams.size(); ++di) {
    out += "\"" + t.diagrams[di].str() + "\"";
    for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) out += ",\"" + t.at(di, ci).str() + "\"";
    out += "\n";
  }
  return out;
}

std::string table_to_latex(const CharacterTable& t) {
  std::string out = "\\begin{tabular}{l|";
  out += std::string(t.cycle_types.size(), 'r');
  out += "}\n\\hline\n";
  for (const auto& c : t.cycle_types) out += " & $(" + cycle_type_partition(c).str() + ")$";
  out += " \\\\\n\\hline\n";
  for (size_t di = 0; di < t.diagrams.size(); ++di) {
    out += "$(" + t.diagrams[di].str() + ")$";
    for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) out += " & $" + t.at(di, ci).latex() + "$";
    out += " \\\\\n";
  }
  out += "\\hline\n\\end{tabular}\n";
  return out;
}

nlohmann::json combos_to_json(int n, const std::map<LengthsKey, MurphyCombo>& combos) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& lengths : sweep_cycle_types(n)) {
    const auto& combo = combos.at(lengths);
    nlohmann::json murphy = nlohmann::json::array();
    for (const auto& [p, v] : combo)
      murphy.push_back({{"indices", p.indices()}, {"coeff", v.to_json()}, {"coeff_str", v.str()}});
    arr.push_back({{"cycle_type", lengths},
                   {"partition", cycle_type_partition(CycleType(lengths, n)).str()},
                   {"murphy", murphy}});
  }
  return nlohmann::json{{"n", n}, {"combos", arr}};
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::text() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name + "\n";
    for (const auto& ce : c.counterexamples) out += "  " + ce + "\n";
  }
  return out;
}

VerifyReport verify_table(const CharacterTable& t, const std::set<std::string>& checks) {
  auto selected = [&](const std::string& name) { return checks.empty() || checks.count(name) > 0; };
  VerifyReport report;

  if (selected("q1")) {
    VerifyCheck check{"q1: table at q = 1 equals the Murnaghan-Nakayama table", true, {}};
    for (size_t di = 0; di < t.diagrams.size(); ++di) {
      for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) {
        Rational got = t.at(di, ci).eval(1);
        long long expect = mn_character(t.diagrams[di].rows(), cycle_type_partition(t.cycle_types[ci]).rows());
        if (got != Rational(static_cast<long>(expect))) {
          check.passed = false;
          check.counterexamples.push_back("chi_(" + t.diagrams[di].str() + ")(" + t.cycle_types[ci].str() +
                                          ")(1) = " + got.get_str() + " != " + std::to_string(expect));
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  if (selected("conjugate")) {
    VerifyCheck check{"conjugate: chi_conj(c)(q) = (-q)^len chi(c)(1/q)", true, {}};
    for (size_t di = 0; di < t.diagrams.size(); ++di) {
      size_t cj = t.diagram_index(conjugate(t.diagrams[di]));
      for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) {
        int len = t.cycle_types[ci].total_generators();
        LaurentPoly expect = t.at(di, ci).substitute_inverse().shifted(len);
        if (len % 2 == 1) expect = -expect;
        if (!(t.at(cj, ci) == expect)) {
          check.passed = false;
          check.counterexamples.push_back("diagram " + t.diagrams[di].str() + ", type " +
                                          t.cycle_types[ci].str());
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  if (selected("regular")) {
    VerifyCheck check{"regular: dimension-weighted column sums match the regular trace", true, {}};
    if (t.n <= 6) {
      for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) {
        RationalFn sum(0);
        for (size_t di = 0; di < t.diagrams.size(); ++di)
          sum += RationalFn(dimension(t.diagrams[di])) * RationalFn(t.at(di, ci));
        RationalFn reg = regular_trace_word(representative_word(t.cycle_types[ci]));
        if (!(sum == reg)) {
          check.passed = false;
          check.counterexamples.push_back("type " + t.cycle_types[ci].str());
        }
      }
    } else {
      // the n! basis is too large to keep symbolic; check at random points
      std::mt19937 rng(0x48656b65u);  // fixed seed: reproducible q values
      std::uniform_int_distribution<int> num(2, 19), den(2, 7), sign(0, 1);
      for (int trial = 0; trial < 3; ++trial) {
        Rational q0;
        do {
          q0 = Rational(num(rng), den(rng));
          q0.canonicalize();
          if (sign(rng)) q0 = -q0;
        } while (q0 == 1 || q0 == -1);
        for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) {
          Rational sum(0);
          for (size_t di = 0; di < t.diagrams.size(); ++di)
            sum += Rational(dimension(t.diagrams[di])) * t.at(di, ci).eval(q0);
          Rational reg = regular_trace_word_at(representative_word(t.cycle_types[ci]), q0);
          if (sum != reg) {
            check.passed = false;
            check.counterexamples.push_back("type " + t.cycle_types[ci].str() + " at q = " + q0.get_str());
          }
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  if (selected("integrality")) {
    VerifyCheck check{"integrality: entries are integer polynomials of degree <= generator count", true, {}};
    for (size_t di = 0; di < t.diagrams.size(); ++di) {
      for (size_t ci = 0; ci < t.cycle_types.size(); ++ci) {
        const LaurentPoly& e = t.at(di, ci);
        int len = t.cycle_types[ci].total_generators();
        bool ok = e.is_integer_polynomial() && (e.is_zero() || (e.min_exp() >= 0 && e.max_exp() <= len));
        if (ci == 0) ok = ok && e == LaurentPoly(dimension(t.diagrams[di]));
        if (!ok) {
          check.passed = false;
          check.counterexamples.push_back("diagram " + t.diagrams[di].str() + ", type " +
                                          t.cycle_types[ci].str() + ": " + e.str());
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace hecke
