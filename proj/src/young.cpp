#include "young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hecke {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw invalid_argument_error("diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw invalid_argument_error("diagram rows must be weakly decreasing");
  }
  size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::string YoungDiagram::str() const {
  std::string out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

YoungDiagram YoungDiagram::parse(const std::string& s) {
  std::vector<int> rows;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw invalid_argument_error("bad diagram: " + s);
    rows.push_back(std::stoi(item));
  }
  if (rows.empty()) throw invalid_argument_error("bad diagram: " + s);
  return YoungDiagram(rows);
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(int n) {
  if (n < 1) throw invalid_argument_error("enumerate_diagrams: n must be positive");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

std::vector<std::pair<YoungDiagram, Box>> branch_down(const YoungDiagram& g) {
  if (g.size() < 1) throw invalid_argument_error("branch_down: empty diagram");
  std::vector<std::pair<YoungDiagram, Box>> out;
  const auto& rows = g.rows();
  for (size_t i = 0; i < rows.size(); ++i) {
    bool corner = (i + 1 == rows.size()) || (rows[i] > rows[i + 1]);
    if (!corner) continue;
    std::vector<int> smaller = rows;
    smaller[i] -= 1;
    if (smaller[i] == 0) smaller.erase(smaller.begin() + i);
    out.emplace_back(YoungDiagram(smaller), Box{static_cast<int>(i) + 1, rows[i]});
  }
  return out;
}

LaurentPoly content_eigenvalue_poly(const Box& b) { return q_integer_poly(b.col - b.row).shifted(1); }

RationalFn content_eigenvalue(const Box& b) { return RationalFn(content_eigenvalue_poly(b)); }

long long dimension(const YoungDiagram& g) {
  if (g.size() <= 1) return 1;
  long long total = 0;
  for (const auto& [smaller, box] : branch_down(g)) total += dimension(smaller);
  return total;
}

YoungDiagram conjugate(const YoungDiagram& g) {
  const auto& rows = g.rows();
  if (rows.empty()) return g;
  std::vector<int> cols(rows[0], 0);
  for (int r : rows)
    for (int c = 0; c < r; ++c) cols[c] += 1;
  return YoungDiagram(cols);
}

CycleType::CycleType(std::vector<int> seq_lengths, int n) : lengths_(std::move(seq_lengths)), n_(n) {
  std::sort(lengths_.begin(), lengths_.end());
  int need = 0;
  for (int l : lengths_) {
    if (l < 1) throw invalid_argument_error("sequence lengths must be positive");
    need += l + 1;
  }
  if (need > n_) throw does_not_fit("cycle type needs n >= " + std::to_string(need));
}

int CycleType::total_generators() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

std::string CycleType::str() const {
  std::string out = "{";
  for (size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  out += "}";
  return out;
}

YoungDiagram cycle_type_partition(const CycleType& c) {
  std::vector<int> parts;
  int used = 0;
  for (int l : c.seq_lengths()) {
    parts.push_back(l + 1);
    used += l + 1;
  }
  for (int i = used; i < c.ambient_n(); ++i) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return YoungDiagram(parts);
}

}  // namespace hecke
