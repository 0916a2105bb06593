#include "krc/promotion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace krc {

namespace {

Int sum_of(const std::vector<Int>& values) {
  return std::accumulate(values.begin(), values.end(), Int{0});
}

Pattern checked_image(const CrystalShape& shape, Grid grid) {
  if (!is_member(shape, grid))
    throw std::logic_error("promotion: image escaped the pattern set");
  return Pattern(shape, std::move(grid));
}

}  // namespace

TruncatedColumn TruncatedColumn::cut(const std::vector<Int>& column, int i, int s) {
  TruncatedColumn out;
  out.start_row = s;
  out.values.assign(column.begin() + (s - i), column.end());
  return out;
}

PairStats pair_stats(const TruncatedColumn& left, const TruncatedColumn& right) {
  if (left.start_row != right.start_row || left.values.size() != right.values.size())
    throw std::invalid_argument("pair_stats: columns must share their rows");
  return pair_stats(std::span<const Int>(left.values), std::span<const Int>(right.values),
                    left.start_row);
}

PromotionResult promote(const Pattern& pattern) {
  const auto& sh = pattern.shape();
  const int n = sh.n, i = sh.i;
  const Int m = sh.m;
  PromotionTrace trace;

  if (i == 1) {
    const auto col = pattern.column(1);  // rows 1..n
    Grid grid(n, std::vector<Int>(1, 0));
    grid[0][0] = m - sum_of(col);
    for (int q = 2; q <= n; ++q) grid[q - 1][0] = col[q - 2];
    return {checked_image(sh, std::move(grid)), trace};
  }

  const int rows = sh.rows();
  Grid image(rows, std::vector<Int>(i, 0));
  std::vector<Int> right = pattern.column(i);

  for (int k = i - 1; k >= 1; --k) {
    const std::vector<Int> left = pattern.column(k);
    const auto eps_from = [&](int s) {
      return pair_stats(TruncatedColumn::cut(left, i, s), TruncatedColumn::cut(right, i, s)).eps;
    };

    std::vector<int> lseq;
    int prev = i - 1;
    while (prev != n) {
      const int s = prev + 1;
      const auto ps =
          pair_stats(TruncatedColumn::cut(left, i, s), TruncatedColumn::cut(right, i, s));
      lseq.push_back(ps.q_minus);
      prev = ps.q_minus;
    }
    const auto in_sequence = [&](int r) {
      return std::binary_search(lseq.begin(), lseq.end(), r);
    };

    std::vector<Int> out(rows, 0);
    for (int r = i; r <= n; ++r) {
      if (r == i)
        out[0] = eps_from(i);
      else if (in_sequence(r - 1))
        out[r - i] = eps_from(r);
      else
        out[r - i] = right[r - 1 - i];
    }

    std::vector<Int> aux(rows, 0);
    for (int r = i; r <= n; ++r) {
      if (r == n)
        aux[r - i] = left[r - i] + right[r - i];
      else if (in_sequence(r))
        aux[r - i] = left[r - i] + right[r - i] - eps_from(r + 1);
      else
        aux[r - i] = left[r - i];
    }
    for (Int v : aux)
      if (v < 0) throw std::logic_error("promotion: fused column went negative");
    if (sum_of(out) != sum_of(left))
      throw std::logic_error("promotion: column sum was not preserved");

    for (int r = 0; r < rows; ++r) image[r][k] = out[r];
    trace.steps.push_back({k, lseq, out, aux});
    right = std::move(aux);
  }

  Int col_i = 0;
  for (int q = i; q <= n; ++q) col_i += pattern.entry(i, q);
  Int top = 0;
  for (int j = 2; j <= i; ++j) top += image[0][j - 1];
  image[0][0] = m - col_i - top;
  for (int r = i + 1; r <= n; ++r) {
    Int row_above = 0;
    for (int j = 1; j <= i; ++j) row_above += pattern.entry(j, r - 1);
    Int produced = 0;
    for (int j = 2; j <= i; ++j) produced += image[r - i][j - 1];
    image[r - i][0] = row_above - produced;
  }
  for (int r = 0; r < rows; ++r)
    if (image[r][0] < 0) throw std::logic_error("promotion: first column went negative");

  return {checked_image(sh, std::move(image)), trace};
}

Pattern promote_inverse(const Pattern& pattern) {
  Pattern out = pattern;
  for (int k = 0; k < pattern.shape().n; ++k) out = promote(out).image;
  return out;
}

std::optional<Pattern> f0(const Pattern& pattern) {
  const auto image = f(promote(pattern).image, 1);
  if (!image) return std::nullopt;
  return promote_inverse(*image);
}

std::optional<Pattern> e0(const Pattern& pattern) {
  const auto image = e(promote(pattern).image, 1);
  if (!image) return std::nullopt;
  return promote_inverse(*image);
}

Int phi0(const Pattern& pattern) { return string_data(promote(pattern).image, 1).phi; }
Int eps0(const Pattern& pattern) { return string_data(promote(pattern).image, 1).eps; }

Report verify_weak_promotion(const CrystalShape& shape) {
  return verify_weak_promotion(shape, [](const Pattern& p) { return promote(p).image; });
}

Report verify_weak_promotion(const CrystalShape& shape, const PromoteFn& pr) {
  Report rep;
  const auto members = enumerate_patterns(shape);
  std::map<Pattern, int> id;
  for (int v = 0; v < static_cast<int>(members.size()); ++v) id.emplace(members[v], v);

  std::vector<char> hit(members.size(), 0);
  for (int v = 0; v < static_cast<int>(members.size()); ++v) {
    const Pattern image = pr(members[v]);
    const auto it = id.find(image);
    if (it == id.end()) {
      rep.add("bijectivity", v, {}, "image is not a member of the same shape");
      continue;
    }
    if (hit[it->second])
      rep.add("bijectivity", v, {}, "two members share the image " + std::to_string(it->second));
    hit[it->second] = 1;

    auto shifted = content(members[v]);
    std::rotate(shifted.rbegin(), shifted.rbegin() + 1, shifted.rend());
    if (content(image) != shifted)
      rep.add("content-shift", v, {}, "content is not the right cyclic shift");
  }

  const auto same = [](const std::optional<Pattern>& a, const std::optional<Pattern>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
  };
  for (int v = 0; v < static_cast<int>(members.size()); ++v) {
    const Pattern& p = members[v];
    const Pattern image = pr(p);
    for (int j = 1; j + 1 <= shape.n; ++j) {
      const auto lowered = f(p, j);
      std::optional<Pattern> lhs;
      if (lowered) lhs = pr(*lowered);
      if (!same(lhs, f(image, j + 1)))
        rep.add("intertwine-f", v, {j, j + 1}, "pr f_j != f_{j+1} pr");
      const auto raised = e(p, j);
      std::optional<Pattern> elhs;
      if (raised) elhs = pr(*raised);
      if (!same(elhs, e(image, j + 1)))
        rep.add("intertwine-e", v, {j, j + 1}, "pr e_j != e_{j+1} pr");
    }
  }

  for (int v = 0; v < static_cast<int>(members.size()); ++v) {
    Pattern round = members[v];
    for (int k = 0; k <= shape.n; ++k) round = pr(round);
    if (!(round == members[v]))
      rep.add("order", v, {}, "pr^{n+1} is not the identity");
  }
  return rep;
}

CrystalGraph<Pattern> build_affine_graph(const CrystalShape& shape) {
  PatternCrystal classical(shape);
  auto g = build_graph(classical, {Pattern(shape)});
  g.index_set.insert(g.index_set.begin(), 0);
  const int classical_size = g.size();
  for (int v = 0; v < classical_size; ++v) {
    const auto image = f0(g.vertices[v]);
    if (!image) continue;
    const auto target = g.find(*image);
    if (!target) throw std::logic_error("affine arrow escaped the classical vertex set");
    g.edges.push_back({v, 0, *target});
  }
  return g;
}

std::string format_trace(const PromotionTrace& trace) {
  std::ostringstream os;
  for (const auto& step : trace.steps) {
    os << "l^" << step.left_column << ':' << ' ';
    for (std::size_t k = 0; k < step.l_sequence.size(); ++k) {
      if (k) os << '<';
      os << step.l_sequence[k];
    }
    os << '\n';
    for (std::size_t k = 0; k < step.out_column.size(); ++k) {
      if (k) os << ' ';
      os << step.out_column[k];
    }
    os << '\n';
    for (std::size_t k = 0; k < step.aux_column.size(); ++k) {
      if (k) os << ' ';
      os << step.aux_column[k];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace krc
