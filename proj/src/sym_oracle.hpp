#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

// Symmetric-group characters by the border-strip recursion. Deliberately
// self-contained (plain integers, no shared arithmetic code) so it can stand
// as an independent q = 1 oracle.

using Partition = std::vector<int>;  // weakly decreasing positive parts

long long mn_character(const Partition& lambda, const Partition& mu);

struct SnCharTable {
  int n = 1;
  std::vector<Partition> partitions;  // reverse-lexicographic
  std::map<std::pair<Partition, Partition>, long long> entries;

  long long at(const Partition& lambda, const Partition& mu) const { return entries.at({lambda, mu}); }
  nlohmann::json to_json() const;
};

SnCharTable sn_character_table(int n);

long long sn_class_size(const Partition& mu);

}  // namespace hecke
