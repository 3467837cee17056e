#include "sym_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace hecke {

namespace {

// beta-set recursion: removing a rim hook of length t moves one bead down by
// t onto an empty slot; the sign counts the beads jumped over
long long mn_rec(std::vector<int> beta, const Partition& mu, size_t idx,
                 std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
  if (idx == mu.size()) return 1;
  auto key = std::make_pair(beta, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int t = mu[idx];
  long long total = 0;
  for (size_t j = 0; j < beta.size(); ++j) {
    int target = beta[j] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[j]) ++jumped;
    std::vector<int> next = beta;
    next[j] = target;
    std::sort(next.begin(), next.end());
    total += (jumped % 2 == 0 ? 1 : -1) * mn_rec(std::move(next), mu, idx + 1, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

void partitions_rec(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::string partition_str(const Partition& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  long long nl = std::accumulate(lambda.begin(), lambda.end(), 0LL);
  long long nm = std::accumulate(mu.begin(), mu.end(), 0LL);
  if (nl != nm) throw size_mismatch("partition sizes " + std::to_string(nl) + " vs " + std::to_string(nm));
  const int rows = static_cast<int>(nl);  // enough beads for every strip removal
  std::vector<int> beta(rows, 0);
  for (int j = 0; j < rows; ++j) {
    int part = j < static_cast<int>(lambda.size()) ? lambda[j] : 0;
    beta[j] = part + (rows - 1 - j);
  }
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<std::vector<int>, size_t>, long long> memo;
  return mn_rec(std::move(beta), mu, 0, memo);
}

SnCharTable sn_character_table(int n) {
  if (n < 1) throw invalid_argument_error("sn_character_table: n >= 1");
  SnCharTable table;
  table.n = n;
  Partition prefix;
  partitions_rec(n, n, prefix, table.partitions);
  for (const auto& lambda : table.partitions)
    for (const auto& mu : table.partitions) table.entries[{lambda, mu}] = mn_character(lambda, mu);
  return table;
}

nlohmann::json SnCharTable::to_json() const {
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& lambda : partitions) {
    nlohmann::json cols = nlohmann::json::object();
    for (const auto& mu : partitions) cols[partition_str(mu)] = at(lambda, mu);
    rows[partition_str(lambda)] = cols;
  }
  return nlohmann::json{{"n", n}, {"characters", rows}};
}

long long sn_class_size(const Partition& mu) {
  long long n = std::accumulate(mu.begin(), mu.end(), 0LL);
  long long fact = 1;
  for (long long i = 2; i <= n; ++i) fact *= i;
  long long z = 1;
  int run = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    z *= mu[i];
    run = (i > 0 && mu[i] == mu[i - 1]) ? run + 1 : 1;
    z *= run;
  }
  return fact / z;
}

}  // namespace hecke
