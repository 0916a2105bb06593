#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "krc/weight.hpp"

namespace krc {

using Grid = std::vector<std::vector<Int>>;

// Parameter triple (n, m, i): rank n of A_n, classical node i with
// 1 <= i <= n, and level m >= 0.  The associated grid has i columns
// labelled p = 1..i and n-i+1 rows labelled q = i..n.
struct CrystalShape {
  int n = 1;
  int m = 0;
  int i = 1;

  CrystalShape(int n_, int m_, int i_);

  int rows() const { return n - i + 1; }
  int cols() const { return i; }

  auto operator<=>(const CrystalShape&) const = default;
};

// One lattice point: a grid of non-negative integers all of whose staircase
// path sums stay <= m.  Storage is row-major and 0-based; entry(p, q) takes
// the 1-based labels used throughout the API (column p in 1..i, row q in
// i..n).  This is the single place where the two index conventions meet.
class Pattern {
 public:
  explicit Pattern(const CrystalShape& shape);  // all-zero grid
  Pattern(const CrystalShape& shape, Grid grid);

  const CrystalShape& shape() const { return shape_; }
  const Grid& grid() const { return grid_; }

  Int entry(int p, int q) const { return grid_[q - shape_.i][p - 1]; }
  std::vector<Int> column(int p) const;  // rows i..n
  std::vector<Int> row(int q) const;     // columns 1..i

  bool is_zero() const;

  auto operator<=>(const Pattern&) const = default;

 private:
  CrystalShape shape_;
  Grid grid_;
};

// Monotone staircase of grid positions from (1, i) to (i, n); every step
// raises exactly one of (p, q) by one.
struct DyckPath {
  std::vector<std::pair<int, int>> steps;  // (p, q) pairs
};

// Maximum entry sum over all staircase paths, by the corner recurrence
// M(p,q) = a_{p,q} + max(M(p-1,q), M(p,q-1)).  Total on any well-shaped
// grid; the entries need not satisfy the level bound.
Int max_dyck_sum(const CrystalShape& shape, const Grid& grid);
Int max_dyck_sum(const Pattern& pattern);

// True iff all entries are >= 0 and max_dyck_sum <= m.  Throws on a grid
// whose dimensions do not match the shape.
bool is_member(const CrystalShape& shape, const Grid& grid);

// Every member exactly once, sorted lexicographically on the row-major
// flattening.  Partial grids whose best-case completion already exceeds the
// level are pruned.
std::vector<Pattern> enumerate_patterns(const CrystalShape& shape);

// All binomial(n-1, i-1) staircase paths, in lexicographic order of their
// position sequences.  Kept as the brute-force oracle for max_dyck_sum.
std::vector<DyckPath> dyck_paths(const CrystalShape& shape);
Int path_sum(const CrystalShape& shape, const Grid& grid, const DyckPath& path);

// dim V(m w_i) for sl_{n+1} via the Weyl dimension formula applied to the
// rectangular highest weight (m, ..., m, 0, ..., 0) with i leading m's.
Int weyl_dimension(const CrystalShape& shape);

// Content (r_1, ..., r_{n+1}) of a member; the entries sum to m*i.
std::vector<Int> content(const Pattern& pattern);

}  // namespace krc
