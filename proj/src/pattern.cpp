#include "krc/pattern.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace krc {

namespace {

void check_dimensions(const CrystalShape& shape, const Grid& grid) {
  if (static_cast<int>(grid.size()) != shape.rows())
    throw std::invalid_argument("pattern grid: expected " + std::to_string(shape.rows()) +
                                " rows, got " + std::to_string(grid.size()));
  for (const auto& row : grid)
    if (static_cast<int>(row.size()) != shape.cols())
      throw std::invalid_argument("pattern grid: every row must have " +
                                  std::to_string(shape.cols()) + " entries");
}

Int checked_mul(Int a, Int b) {
  Int r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer product overflow");
  return r;
}

}  // namespace

CrystalShape::CrystalShape(int n_, int m_, int i_) : n(n_), m(m_), i(i_) {
  if (n < 1) throw std::invalid_argument("shape: rank n must be positive");
  if (i < 1 || i > n) throw std::invalid_argument("shape: node i must satisfy 1 <= i <= n");
  if (m < 0) throw std::invalid_argument("shape: level m must be non-negative");
}

Pattern::Pattern(const CrystalShape& shape)
    : shape_(shape), grid_(shape.rows(), std::vector<Int>(shape.cols(), 0)) {}

Pattern::Pattern(const CrystalShape& shape, Grid grid) : shape_(shape), grid_(std::move(grid)) {
  check_dimensions(shape_, grid_);
  for (const auto& row : grid_)
    for (Int v : row)
      if (v < 0) throw std::invalid_argument("pattern grid: entries must be non-negative");
  if (max_dyck_sum(shape_, grid_) > shape_.m)
    throw std::invalid_argument("pattern grid: a staircase path sum exceeds the level");
}

std::vector<Int> Pattern::column(int p) const {
  std::vector<Int> col(shape_.rows());
  for (int r = 0; r < shape_.rows(); ++r) col[r] = grid_[r][p - 1];
  return col;
}

std::vector<Int> Pattern::row(int q) const { return grid_[q - shape_.i]; }

bool Pattern::is_zero() const {
  for (const auto& row : grid_)
    for (Int v : row)
      if (v != 0) return false;
  return true;
}

Int max_dyck_sum(const CrystalShape& shape, const Grid& grid) {
  check_dimensions(shape, grid);
  const int rows = shape.rows();
  const int cols = shape.cols();
  // best[c] = maximal path sum ending at the current row, column c; absent
  // predecessors count as 0
  std::vector<Int> best(cols, 0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Int up = (r > 0) ? best[c] : 0;
      const Int left = (c > 0) ? best[c - 1] : 0;
      best[c] = grid[r][c] + std::max(up, left);
    }
  }
  return best[cols - 1];
}

Int max_dyck_sum(const Pattern& pattern) { return max_dyck_sum(pattern.shape(), pattern.grid()); }

bool is_member(const CrystalShape& shape, const Grid& grid) {
  check_dimensions(shape, grid);
  for (const auto& row : grid)
    for (Int v : row)
      if (v < 0) return false;
  return max_dyck_sum(shape, grid) <= shape.m;
}

std::vector<Pattern> enumerate_patterns(const CrystalShape& shape) {
  std::vector<Pattern> out;
  const int rows = shape.rows();
  const int cols = shape.cols();
  Grid grid(rows, std::vector<Int>(cols, 0));
  std::function<void(int)> fill = [&](int cell) {
    if (cell == rows * cols) {
      out.emplace_back(shape, grid);
      return;
    }
    const int r = cell / cols;
    const int c = cell % cols;
    for (Int v = 0;; ++v) {
      grid[r][c] = v;
      if (max_dyck_sum(shape, grid) > shape.m) break;
      fill(cell + 1);
    }
    grid[r][c] = 0;
  };
  fill(0);
  return out;
}

std::vector<DyckPath> dyck_paths(const CrystalShape& shape) {
  std::vector<DyckPath> out;
  std::vector<std::pair<int, int>> steps;
  std::function<void(int, int)> grow = [&](int p, int q) {
    steps.emplace_back(p, q);
    if (p == shape.i && q == shape.n) {
      out.push_back(DyckPath{steps});
    } else {
      if (q < shape.n) grow(p, q + 1);
      if (p < shape.i) grow(p + 1, q);
    }
    steps.pop_back();
  };
  grow(1, shape.i);
  return out;
}

Int path_sum(const CrystalShape& shape, const Grid& grid, const DyckPath& path) {
  check_dimensions(shape, grid);
  Int total = 0;
  for (auto [p, q] : path.steps) total += grid[q - shape.i][p - 1];
  return total;
}

Int weyl_dimension(const CrystalShape& shape) {
  auto part = [&](int j) -> Int { return j <= shape.i ? shape.m : 0; };
  Int num = 1, den = 1;
  for (int p = 1; p <= shape.n; ++p) {
    for (int q = p; q <= shape.n; ++q) {
      Int u = part(p) - part(q + 1) + (q - p + 1);
      Int v = q - p + 1;
      Int g = std::gcd(u, den);
      u /= g;
      den /= g;
      g = std::gcd(v, num);
      v /= g;
      num /= g;
      num = checked_mul(num, u);
      den = checked_mul(den, v);
      g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  if (den != 1) throw std::logic_error("weyl_dimension: product did not reduce to an integer");
  return num;
}

std::vector<Int> content(const Pattern& pattern) {
  const auto& sh = pattern.shape();
  std::vector<Int> r(sh.n + 1, 0);
  for (int j = 0; j < sh.i; ++j) r[j] = sh.m;
  for (int p = 1; p <= sh.i; ++p) {
    for (int q = sh.i; q <= sh.n; ++q) {
      const Int a = pattern.entry(p, q);
      r[p - 1] -= a;
      r[q] += a;
    }
  }
  return r;
}

}  // namespace krc
