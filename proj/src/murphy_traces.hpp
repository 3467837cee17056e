#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpoly.hpp"
#include "young.hpp"

namespace hecke {

/// Product of distinct non-consecutive Murphy operators L_{a_1} ... L_{a_k},
/// a_1 >= 2, a_{i+1} >= a_i + 2. The empty product is the identity.
class MurphyProduct {
 public:
  MurphyProduct() = default;
  explicit MurphyProduct(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  bool empty() const { return indices_.empty(); }
  int max_index() const { return indices_.empty() ? 0 : indices_.back(); }

  bool operator==(const MurphyProduct& o) const { return indices_ == o.indices_; }
  bool operator<(const MurphyProduct& o) const { return indices_ < o.indices_; }

  std::string str() const;  // "2,4", identity ""

 private:
  std::vector<int> indices_;
};

/// tr(prod L_{a_i}) in the irrep labelled by g, evaluated by one sweep up the
/// branching lattice: start the accumulator at level a_1 - 1 with dimensions,
/// multiply by the added box's content eigenvalue at the levels named in the
/// product and by 1 elsewhere, summing over branchings.
RationalFn murphy_product_trace(const YoungDiagram& g, const MurphyProduct& m);

struct MurphyTraceTable {
  int n = 2;
  // row per product, column per diagram of size n
  std::map<MurphyProduct, std::map<YoungDiagram, RationalFn>> rows;

  const RationalFn& at(const MurphyProduct& m, const YoungDiagram& g) const;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Every valid product with indices <= n and at most max_factors factors,
/// evaluated in one shared sweep over the lattice (common prefixes are
/// computed once).
MurphyTraceTable murphy_trace_table(int n, int max_factors);

}  // namespace hecke
