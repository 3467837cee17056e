#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpoly.hpp"

namespace hecke {

struct Box {
  int row = 1;  // 1-based
  int col = 1;
  bool operator==(const Box& o) const { return row == o.row && col == o.col; }
};

/// Partition of n drawn as a Young diagram: weakly decreasing positive rows.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }

  bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
  bool operator!=(const YoungDiagram& o) const { return !(*this == o); }
  bool operator<(const YoungDiagram& o) const { return rows_ < o.rows_; }

  std::string str() const;  // "4,2,1"
  static YoungDiagram parse(const std::string& s);

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<YoungDiagram> enumerate_diagrams(int n);

/// All ways of removing one box, with the removed box; ordered by row.
std::vector<std::pair<YoungDiagram, Box>> branch_down(const YoungDiagram& g);

/// q [col - row]_q, the Murphy-operator eigenvalue attached to a box.
RationalFn content_eigenvalue(const Box& b);
LaurentPoly content_eigenvalue_poly(const Box& b);

/// Number of maximal chains from the empty diagram (standard tableaux count).
long long dimension(const YoungDiagram& g);

YoungDiagram conjugate(const YoungDiagram& g);

/// Multiset of disjoint connected-sequence lengths realizable in H_n(q).
/// The empty multiset is the identity class.
class CycleType {
 public:
  CycleType() = default;
  CycleType(std::vector<int> seq_lengths, int n);

  const std::vector<int>& seq_lengths() const { return lengths_; }  // sorted ascending
  int ambient_n() const { return n_; }
  int total_generators() const;
  bool is_identity() const { return lengths_.empty(); }

  bool operator==(const CycleType& o) const { return lengths_ == o.lengths_; }
  bool operator!=(const CycleType& o) const { return !(*this == o); }
  bool operator<(const CycleType& o) const { return lengths_ < o.lengths_; }

  std::string str() const;  // "{1,2}", identity "{}"

 private:
  std::vector<int> lengths_;
  int n_ = 0;
};

/// S_n class of a cycle type: parts l_i + 1 padded with 1s up to n.
YoungDiagram cycle_type_partition(const CycleType& c);

}  // namespace hecke
