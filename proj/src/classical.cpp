#include "krc/classical.hpp"

#include <stdexcept>
#include <string>

namespace krc {

namespace {

// Rebuild a pattern after a box replacement; the operators are only allowed
// to produce members, so a violation here is an implementation bug.
Pattern checked_image(const CrystalShape& shape, Grid grid, const char* op) {
  if (!is_member(shape, grid))
    throw std::logic_error(std::string(op) + ": image escaped the pattern set");
  return Pattern(shape, std::move(grid));
}

//  <alpha_l^vee, alpha_p + ... + alpha_q>  in A_n
Int cartan_strip(int l, int p, int q) {
  Int v = 0;
  if (p <= l && l <= q) v += 2;
  if (p <= l - 1 && l - 1 <= q) v -= 1;
  if (p <= l + 1 && l + 1 <= q) v -= 1;
  return v;
}

}  // namespace

PairStats pair_stats(std::span<const Int> left, std::span<const Int> right, int start) {
  if (left.size() != right.size() || left.empty())
    throw std::invalid_argument("pair_stats: lines must be non-empty and of equal length");
  const int count = static_cast<int>(left.size());

  std::vector<Int> pre(count + 1, 0);  // pre[k] = sum of left[0..k-1]
  for (int k = 0; k < count; ++k) pre[k + 1] = pre[k] + left[k];
  std::vector<Int> suf(count + 1, 0);  // suf[k] = sum of right[k..count-1]
  for (int k = count - 1; k >= 0; --k) suf[k] = suf[k + 1] + right[k];

  int lo = 0, hi = 0;
  Int best = pre[1] + suf[0];
  for (int k = 1; k < count; ++k) {
    const Int s = pre[k + 1] + suf[k];
    if (s > best) {
      best = s;
      lo = k;
      hi = k;
    } else if (s == best) {
      hi = k;
    }
  }

  PairStats out;
  out.q_minus = start + lo;
  out.p_minus = start + hi;
  // prefix sums of right and suffix sums of left, shifted by one position
  Int right_before = 0;
  for (int k = 0; k < lo; ++k) right_before += right[k];
  Int left_after = 0;
  for (int k = hi + 1; k < count; ++k) left_after += left[k];
  out.eps = pre[lo + 1] - right_before;
  out.phi = suf[hi] - left_after;
  return out;
}

StringData string_data(const Pattern& pattern, int l) {
  const auto& sh = pattern.shape();
  if (l < 1 || l > sh.n) throw std::invalid_argument("string_data: label out of range");
  StringData out;
  if (l == sh.i) {
    Int head = 0;
    for (int p = 1; p < sh.i; ++p) head += pattern.entry(p, sh.i);
    Int col = 0;
    for (int q = sh.i; q <= sh.n; ++q) col += pattern.entry(sh.i, q);
    out.phi = sh.m - head - col;
    out.eps = pattern.entry(sh.i, sh.i);
  } else if (l < sh.i) {
    const auto a = pattern.column(l);
    const auto b = pattern.column(l + 1);
    const auto ps = pair_stats(a, b, sh.i);
    out.q_minus = ps.q_minus;
    out.p_minus = ps.p_minus;
    out.eps = ps.eps;
    out.phi = ps.phi;
  } else {
    const auto a = pattern.row(l - 1);
    const auto b = pattern.row(l);
    const auto ps = pair_stats(a, b, 1);
    // rows swap the roles: the least maximizer carries phi, the greatest eps
    out.p_plus = ps.q_minus;
    out.q_plus = ps.p_minus;
    out.phi = ps.eps;
    out.eps = ps.phi;
  }
  return out;
}

Weight weight(const Pattern& pattern) {
  const auto& sh = pattern.shape();
  Weight w;
  w.content = content(pattern);
  w.omega.assign(sh.n, 0);
  w.omega[sh.i - 1] = sh.m;
  for (int l = 1; l <= sh.n; ++l)
    for (int p = 1; p <= sh.i; ++p)
      for (int q = sh.i; q <= sh.n; ++q)
        w.omega[l - 1] -= pattern.entry(p, q) * cartan_strip(l, p, q);
  return w;
}

std::optional<Pattern> f(const Pattern& pattern, int l) {
  const auto& sh = pattern.shape();
  const auto sd = string_data(pattern, l);
  if (sd.phi == 0) return std::nullopt;
  if (sd.phi < 0) throw std::logic_error("f: negative phi on a member");
  Grid grid = pattern.grid();
  if (l == sh.i) {
    grid[0][sh.i - 1] += 1;
  } else if (l > sh.i) {
    grid[(l - 1) - sh.i][sd.p_plus - 1] -= 1;
    grid[l - sh.i][sd.p_plus - 1] += 1;
  } else {
    grid[sd.p_minus - sh.i][l - 1] += 1;
    grid[sd.p_minus - sh.i][l] -= 1;
  }
  return checked_image(sh, std::move(grid), "f");
}

std::optional<Pattern> e(const Pattern& pattern, int l) {
  const auto& sh = pattern.shape();
  const auto sd = string_data(pattern, l);
  if (sd.eps == 0) return std::nullopt;
  if (sd.eps < 0) throw std::logic_error("e: negative eps on a member");
  Grid grid = pattern.grid();
  if (l == sh.i) {
    grid[0][sh.i - 1] -= 1;
  } else if (l > sh.i) {
    grid[(l - 1) - sh.i][sd.q_plus - 1] += 1;
    grid[l - sh.i][sd.q_plus - 1] -= 1;
  } else {
    grid[sd.q_minus - sh.i][l - 1] -= 1;
    grid[sd.q_minus - sh.i][l] += 1;
  }
  return checked_image(sh, std::move(grid), "e");
}

}  // namespace krc
