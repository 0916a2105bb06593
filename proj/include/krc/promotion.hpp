#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "krc/classical.hpp"
#include "krc/graph.hpp"
#include "krc/pattern.hpp"
#include "krc/verify.hpp"

namespace krc {

// Column fragment holding the rows start_row..n of a pattern column.
struct TruncatedColumn {
  int start_row = 0;
  std::vector<Int> values;

  // Rows s..n of a full column stored from row i.
  static TruncatedColumn cut(const std::vector<Int>& column, int i, int s);
};

// Least maximizer and its boundary statistic for two column fragments
// sharing the same rows.
PairStats pair_stats(const TruncatedColumn& left, const TruncatedColumn& right);

// One column step of the promotion algorithm: the strictly increasing index
// sequence ending at n, the produced image column and the fused column
// carried into the next step.
struct PromotionStep {
  int left_column = 0;
  std::vector<int> l_sequence;
  std::vector<Int> out_column;  // rows i..n
  std::vector<Int> aux_column;  // rows i..n
};

struct PromotionTrace {
  std::vector<PromotionStep> steps;
};

struct PromotionResult {
  Pattern image;
  PromotionTrace trace;
};

// Promotion.  For i = 1 a one-line shift; otherwise i-1 column steps from
// the pair (i-1, i) leftwards, followed by the closed first-column formula.
// Non-negativity of the first column and membership of the image are
// asserted, never assumed.
PromotionResult promote(const Pattern& pattern);

// promote composed n times; two-sided inverse of promote on every member.
Pattern promote_inverse(const Pattern& pattern);

// Affine operators obtained by conjugating the label-1 operators with
// promotion, and their string statistics.
std::optional<Pattern> f0(const Pattern& pattern);
std::optional<Pattern> e0(const Pattern& pattern);
Int phi0(const Pattern& pattern);
Int eps0(const Pattern& pattern);

// Crystal model over patterns with the affine labels 0..n; label 0 is paired
// with the level-zero convention on classical weights.
class AffinePatternCrystal {
 public:
  using Element = Pattern;

  explicit AffinePatternCrystal(const CrystalShape& shape) : shape_(shape) {}

  std::vector<int> index_set() const {
    std::vector<int> labels(shape_.n + 1);
    for (int l = 0; l <= shape_.n; ++l) labels[l] = l;
    return labels;
  }

  Weight weight(const Element& x) const { return krc::weight(x); }
  Int phi(const Element& x, int l) const { return l == 0 ? phi0(x) : string_data(x, l).phi; }
  Int eps(const Element& x, int l) const { return l == 0 ? eps0(x) : string_data(x, l).eps; }
  std::optional<Element> f(const Element& x, int l) const {
    return l == 0 ? f0(x) : krc::f(x, l);
  }
  std::optional<Element> e(const Element& x, int l) const {
    return l == 0 ? e0(x) : krc::e(x, l);
  }

 private:
  CrystalShape shape_;
};

using PromoteFn = std::function<Pattern(const Pattern&)>;

// Exhaustive check that the map is a weak promotion operator on the member
// set: cyclic content shift, bijectivity, the label-shift intertwining for
// j = 1..n-1 and order n+1.  The second overload checks an arbitrary map.
Report verify_weak_promotion(const CrystalShape& shape);
Report verify_weak_promotion(const CrystalShape& shape, const PromoteFn& pr);

// Classical graph plus the 0-labelled arrows; index set {0..n}.
CrystalGraph<Pattern> build_affine_graph(const CrystalShape& shape);

// Text form of a trace: per step one "l^k: ..." line, then the produced and
// fused columns as space-separated integers.
std::string format_trace(const PromotionTrace& trace);

}  // namespace krc
