#pragma once

#include <optional>
#include <span>
#include <vector>

#include "krc/pattern.hpp"
#include "krc/weight.hpp"

namespace krc {

// Scan of the fused prefix/suffix sums of two parallel lines (two columns or
// two rows).  Entries carry 1-based position labels starting at `start`, and
//   S(p) = sum_{j=start..p} left_j + sum_{j=p..end} right_j.
// q_minus / p_minus are the least / greatest maximizers of S; eps and phi are
// the boundary statistics read off at those positions:
//   eps = sum_{j<=q_minus} left_j - sum_{j<q_minus} right_j
//   phi = sum_{j>=p_minus} right_j - sum_{j>p_minus} left_j
struct PairStats {
  int q_minus = 0;
  int p_minus = 0;
  Int eps = 0;
  Int phi = 0;
};

PairStats pair_stats(std::span<const Int> left, std::span<const Int> right, int start);

// String statistics of one classical label.  For l > i the critical pair is
// (p_plus, q_plus) with 1 <= p_plus <= q_plus <= i; for l < i it is
// (q_minus, p_minus) with i <= q_minus <= p_minus <= n; for l = i only
// phi/eps are meaningful.
struct StringData {
  Int phi = 0;
  Int eps = 0;
  int p_plus = 0, q_plus = 0;
  int p_minus = 0, q_minus = 0;
};

StringData string_data(const Pattern& pattern, int l);

// Weight of a member in both views; the content view agrees with content().
Weight weight(const Pattern& pattern);

// Kashiwara operators.  Empty exactly when phi (resp. eps) vanishes; a
// result that escapes the pattern set raises std::logic_error, it is never
// returned as a value.
std::optional<Pattern> f(const Pattern& pattern, int l);
std::optional<Pattern> e(const Pattern& pattern, int l);

// Crystal model over patterns with the classical labels 1..n.
class PatternCrystal {
 public:
  using Element = Pattern;

  explicit PatternCrystal(const CrystalShape& shape) : shape_(shape) {}

  const CrystalShape& shape() const { return shape_; }

  std::vector<int> index_set() const {
    std::vector<int> labels(shape_.n);
    for (int l = 1; l <= shape_.n; ++l) labels[l - 1] = l;
    return labels;
  }

  Weight weight(const Element& x) const { return krc::weight(x); }
  Int phi(const Element& x, int l) const { return string_data(x, l).phi; }
  Int eps(const Element& x, int l) const { return string_data(x, l).eps; }
  std::optional<Element> f(const Element& x, int l) const { return krc::f(x, l); }
  std::optional<Element> e(const Element& x, int l) const { return krc::e(x, l); }

 private:
  CrystalShape shape_;
};

}  // namespace krc
