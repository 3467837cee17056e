#include "murphy_traces.hpp"

#include <algorithm>

namespace hecke {

MurphyProduct::MurphyProduct(std::vector<int> indices) : indices_(std::move(indices)) {
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 2) throw invalid_product("Murphy indices start at 2");
    if (i > 0 && indices_[i] < indices_[i - 1] + 2)
      throw invalid_product("Murphy indices must be non-consecutive and increasing");
  }
}

std::string MurphyProduct::str() const {
  std::string out;
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

namespace {

using Accumulator = std::map<YoungDiagram, RationalFn>;

Accumulator level_start(int k) {
  Accumulator acc;
  for (const auto& g : enumerate_diagrams(k)) acc.emplace(g, RationalFn(dimension(g)));
  return acc;
}

Accumulator ascend(const Accumulator& acc, int to_level, bool apply_content) {
  Accumulator next;
  for (const auto& g : enumerate_diagrams(to_level)) {
    RationalFn total(0);
    for (const auto& [smaller, box] : branch_down(g)) {
      auto it = acc.find(smaller);
      if (it == acc.end()) continue;
      total += apply_content ? it->second * content_eigenvalue(box) : it->second;
    }
    if (!total.is_zero()) next.emplace(g, total);
  }
  return next;
}

}  // namespace

RationalFn murphy_product_trace(const YoungDiagram& g, const MurphyProduct& m) {
  const int n = g.size();
  if (n < 1) throw invalid_product("empty diagram");
  if (m.max_index() > n) throw invalid_product("product index exceeds diagram size");
  if (m.empty()) return RationalFn(dimension(g));
  Accumulator acc = level_start(m.indices().front() - 1);
  size_t next_idx = 0;
  for (int k = m.indices().front(); k <= n; ++k) {
    bool apply = next_idx < m.indices().size() && m.indices()[next_idx] == k;
    if (apply) ++next_idx;
    acc = ascend(acc, k, apply);
  }
  auto it = acc.find(g);
  return it == acc.end() ? RationalFn(0) : it->second;
}

const RationalFn& MurphyTraceTable::at(const MurphyProduct& m, const YoungDiagram& g) const {
  return rows.at(m).at(g);
}

nlohmann::json MurphyTraceTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, row] : rows) {
    nlohmann::json cols = nlohmann::json::object();
    for (const auto& [g, v] : row) cols[g.str()] = v.str();
    arr.push_back({{"indices", m.str()}, {"traces", cols}});
  }
  return nlohmann::json{{"n", n}, {"rows", arr}};
}

std::string MurphyTraceTable::to_csv() const {
  std::string out = "indices";
  std::vector<YoungDiagram> diagrams = enumerate_diagrams(n);
  for (const auto& g : diagrams) out += ",\"" + g.str() + "\"";
  out += "\n";
  for (const auto& [m, row] : rows) {
    out += "\"" + m.str() + "\"";
    for (const auto& g : diagrams) {
      auto it = row.find(g);
      out += ",\"" + (it == row.end() ? RationalFn(0) : it->second).str() + "\"";
    }
    out += "\n";
  }
  return out;
}

namespace {

void sweep(int level, int n, int max_factors, const Accumulator& acc, std::vector<int>& chosen,
           MurphyTraceTable& table) {
  if (level == n) {
    auto& row = table.rows[MurphyProduct(chosen)];
    for (const auto& [g, v] : acc) row.emplace(g, v);
    return;
  }
  int next = level + 1;
  sweep(next, n, max_factors, ascend(acc, next, false), chosen, table);
  bool can_apply = next >= 2 && static_cast<int>(chosen.size()) < max_factors &&
                   (chosen.empty() || next >= chosen.back() + 2);
  if (can_apply) {
    chosen.push_back(next);
    sweep(next, n, max_factors, ascend(acc, next, true), chosen, table);
    chosen.pop_back();
  }
}

}  // namespace

MurphyTraceTable murphy_trace_table(int n, int max_factors) {
  if (n < 2) throw invalid_argument_error("murphy_trace_table: n >= 2");
  MurphyTraceTable table;
  table.n = n;
  std::vector<int> chosen;
  sweep(1, n, max_factors, level_start(1), chosen, table);
  return table;
}

}  // namespace hecke
