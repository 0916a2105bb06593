#include "krc/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "krc/promotion.hpp"
#include "krc/tensor.hpp"

namespace krc {

namespace {

// Reading word cell order: columns right to left, top to bottom inside each
// column.  Fixed once here and validated by the model-comparison tests.
std::vector<std::pair<int, int>> reading_cells(const CrystalShape& shape) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(shape.i) * shape.m);
  for (int c = shape.m - 1; c >= 0; --c)
    for (int r = 0; r < shape.i; ++r) cells.emplace_back(r, c);
  return cells;
}

SignatureString word_signature(const Tableau& tableau, int l,
                               const std::vector<std::pair<int, int>>& cells) {
  std::vector<std::pair<Int, Int>> eps_phi(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const int letter = tableau.rows()[cells[k].first][cells[k].second];
    eps_phi[k] = {letter == l + 1 ? 1 : 0, letter == l ? 1 : 0};
  }
  return l_signature(eps_phi);
}

Tableau checked_tableau(const CrystalShape& shape, std::vector<std::vector<int>> rows,
                        const char* op) {
  try {
    return Tableau(shape, std::move(rows));
  } catch (const std::invalid_argument& err) {
    throw std::logic_error(std::string(op) + ": image is not semistandard (" + err.what() + ")");
  }
}

}  // namespace

Tableau::Tableau(const CrystalShape& shape, std::vector<std::vector<int>> rows)
    : shape_(shape), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.i)
    throw std::invalid_argument("tableau: expected " + std::to_string(shape_.i) + " rows");
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) != shape_.m)
      throw std::invalid_argument("tableau: every row must have " + std::to_string(shape_.m) +
                                  " entries");
  for (int r = 0; r < shape_.i; ++r) {
    for (int c = 0; c < shape_.m; ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > shape_.n + 1)
        throw std::invalid_argument("tableau: letters must lie in 1.." +
                                    std::to_string(shape_.n + 1));
      if (c > 0 && rows_[r][c - 1] > v)
        throw std::invalid_argument("tableau: rows must increase weakly");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau: columns must increase strictly");
    }
  }
}

Tableau Tableau::highest_weight(const CrystalShape& shape) {
  std::vector<std::vector<int>> rows(shape.i, std::vector<int>(shape.m, 0));
  for (int r = 0; r < shape.i; ++r)
    for (int c = 0; c < shape.m; ++c) rows[r][c] = r + 1;
  return Tableau(shape, std::move(rows));
}

std::vector<Tableau> enumerate_ssyt(const CrystalShape& shape) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(shape.i, std::vector<int>(shape.m, 0));
  const int cells = shape.i * shape.m;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == cells) {
      out.emplace_back(shape, rows);
      return;
    }
    const int r = cell / shape.m;
    const int c = cell % shape.m;
    int low = 1;
    if (c > 0) low = std::max(low, rows[r][c - 1]);
    if (r > 0) low = std::max(low, rows[r - 1][c] + 1);
    for (int v = low; v <= shape.n + 1; ++v) {
      rows[r][c] = v;
      fill(cell + 1);
    }
    rows[r][c] = 0;
  };
  fill(0);
  return out;
}

std::optional<Tableau> tab_f(const Tableau& tableau, int l) {
  const auto& sh = tableau.shape();
  if (l < 1 || l > sh.n) throw std::invalid_argument("tab_f: label out of range");
  const auto cells = reading_cells(sh);
  const auto sig = word_signature(tableau, l, cells);
  if (sig.plus_from.empty()) return std::nullopt;
  const auto [r, c] = cells[sig.plus_from.front()];
  auto rows = tableau.rows();
  rows[r][c] = l + 1;
  return checked_tableau(sh, std::move(rows), "tab_f");
}

std::optional<Tableau> tab_e(const Tableau& tableau, int l) {
  const auto& sh = tableau.shape();
  if (l < 1 || l > sh.n) throw std::invalid_argument("tab_e: label out of range");
  const auto cells = reading_cells(sh);
  const auto sig = word_signature(tableau, l, cells);
  if (sig.minus_from.empty()) return std::nullopt;
  const auto [r, c] = cells[sig.minus_from.back()];
  auto rows = tableau.rows();
  rows[r][c] = l;
  return checked_tableau(sh, std::move(rows), "tab_e");
}

std::vector<Int> tableau_content(const Tableau& tableau) {
  const auto& sh = tableau.shape();
  std::vector<Int> counts(sh.n + 1, 0);
  for (const auto& row : tableau.rows())
    for (int v : row) counts[v - 1] += 1;
  return counts;
}

Tableau jdt_promote(const Tableau& tableau) {
  const auto& sh = tableau.shape();
  if (sh.m == 0) return tableau;
  int holes = 0;
  const auto& last = tableau.rows()[sh.i - 1];
  for (int c = sh.m - 1; c >= 0 && last[c] == sh.n + 1; --c) ++holes;
  std::vector<int> order(holes);
  for (int k = 0; k < holes; ++k) order[k] = sh.m - holes + k;
  return jdt_promote_with_order(tableau, order);
}

Tableau jdt_promote_with_order(const Tableau& tableau, const std::vector<int>& hole_columns) {
  const auto& sh = tableau.shape();
  auto grid = tableau.rows();

  int holes = 0;
  for (int c = sh.m - 1; c >= 0 && grid[sh.i - 1][c] == sh.n + 1; --c) ++holes;
  for (int r = 0; r < sh.i; ++r)
    for (int c = 0; c < sh.m; ++c)
      if (grid[r][c] == sh.n + 1 && !(r == sh.i - 1 && c >= sh.m - holes))
        throw std::logic_error("jdt: the largest letter strayed off the last row");
  if (static_cast<int>(hole_columns.size()) != holes)
    throw std::invalid_argument("jdt: slide order must list every hole exactly once");

  // drop the largest letter, bump the rest; unslid holes may not be leaned
  // on, settled ones may
  std::vector<std::vector<char>> unslid(sh.i, std::vector<char>(sh.m, 0));
  for (int r = 0; r < sh.i; ++r)
    for (int c = 0; c < sh.m; ++c) {
      if (grid[r][c] == sh.n + 1) {
        grid[r][c] = 0;
        unslid[r][c] = 1;
      } else {
        grid[r][c] += 1;
      }
    }

  for (int start : hole_columns) {
    int r = sh.i - 1, c = start;
    if (c < sh.m - holes || !unslid[r][c])
      throw std::invalid_argument("jdt: slide does not start on a hole");
    if ((r > 0 && unslid[r - 1][c]) || (c > 0 && unslid[r][c - 1]))
      throw std::invalid_argument("jdt: slide start leans on an unslid hole");
    unslid[r][c] = 0;
    while (true) {
      const int a = r > 0 ? grid[r - 1][c] : 0;
      const int b = c > 0 ? grid[r][c - 1] : 0;
      if (a == 0 && b == 0) break;
      if (a >= b) {
        grid[r][c] = a;
        grid[r - 1][c] = 0;
        --r;
      } else {
        grid[r][c] = b;
        grid[r][c - 1] = 0;
        --c;
      }
    }
  }

  for (int r = 0; r < sh.i; ++r)
    for (int c = 0; c < sh.m; ++c)
      if (grid[r][c] == 0) grid[r][c] = 1;
  return checked_tableau(sh, std::move(grid), "jdt_promote");
}

Tableau jdt_promote_inverse(const Tableau& tableau) {
  Tableau out = tableau;
  for (int k = 0; k < tableau.shape().n; ++k) out = jdt_promote(out);
  return out;
}

std::optional<Tableau> tab_f0(const Tableau& tableau) {
  const auto image = tab_f(jdt_promote(tableau), 1);
  if (!image) return std::nullopt;
  return jdt_promote_inverse(*image);
}

std::optional<Tableau> tab_e0(const Tableau& tableau) {
  const auto image = tab_e(jdt_promote(tableau), 1);
  if (!image) return std::nullopt;
  return jdt_promote_inverse(*image);
}

Weight TableauCrystal::weight(const Element& x) const {
  Weight w;
  w.content = tableau_content(x);
  w.omega.assign(shape_.n, 0);
  for (int l = 1; l <= shape_.n; ++l) w.omega[l - 1] = w.content[l - 1] - w.content[l];
  return w;
}

Int TableauCrystal::phi(const Element& x, int l) const {
  return word_signature(x, l, reading_cells(shape_)).phi();
}

Int TableauCrystal::eps(const Element& x, int l) const {
  return word_signature(x, l, reading_cells(shape_)).eps();
}

Int AffineTableauCrystal::phi(const Element& x, int l) const {
  if (l != 0) return classical_.phi(x, l);
  return classical_.phi(jdt_promote(x), 1);
}

Int AffineTableauCrystal::eps(const Element& x, int l) const {
  if (l != 0) return classical_.eps(x, l);
  return classical_.eps(jdt_promote(x), 1);
}

CompareResult compare_models(const CrystalShape& shape) {
  CompareResult res;
  Report& rep = res.report;

  PatternCrystal patterns(shape);
  TableauCrystal tableaux(shape);
  const auto gp = build_graph(patterns, {Pattern(shape)});
  const auto gt = build_graph(tableaux, {Tableau::highest_weight(shape)});
  res.vertex_count = gp.size();

  const auto roots_p = source_vertices(gp.size(), gp.edges);
  const auto roots_t = source_vertices(gt.size(), gt.edges);
  if (roots_p.size() != 1)
    rep.add("root-uniqueness", -1, {}, "pattern model has " + std::to_string(roots_p.size()) +
                                           " highest-weight vertices");
  if (roots_t.size() != 1)
    rep.add("root-uniqueness", -1, {}, "tableau model has " + std::to_string(roots_t.size()) +
                                           " highest-weight vertices");
  if (!rep.ok()) return res;

  const auto match = rooted_match(gp, roots_p[0], gt, roots_t[0]);
  for (const auto& msg : match.mismatches) rep.add("classical-matching", -1, {}, msg);
  if (!match.ok) return res;

  for (int v = 0; v < gp.size(); ++v) {
    if (!(patterns.weight(gp.vertices[v]) == tableaux.weight(gt.vertices[match.map[v]])))
      rep.add("character", v, {}, "weights differ under the matching");
  }

  for (int v = 0; v < gp.size(); ++v) {
    const Pattern& p = gp.vertices[v];
    const Tableau& t = gt.vertices[match.map[v]];

    const auto fp = f0(p);
    const auto ft = tab_f0(t);
    if (fp.has_value() != ft.has_value()) {
      rep.add("affine-f0", v, {0}, "definedness differs between the models");
    } else if (fp) {
      const auto a = gp.find(*fp);
      const auto b = gt.find(*ft);
      if (!a || !b || match.map[*a] != *b)
        rep.add("affine-f0", v, {0}, "images differ under the matching");
    }

    const auto ep = e0(p);
    const auto et = tab_e0(t);
    if (ep.has_value() != et.has_value()) {
      rep.add("affine-e0", v, {0}, "definedness differs between the models");
    } else if (ep) {
      const auto a = gp.find(*ep);
      const auto b = gt.find(*et);
      if (!a || !b || match.map[*a] != *b)
        rep.add("affine-e0", v, {0}, "images differ under the matching");
    }
  }
  return res;
}

std::string tableau_to_text(const Tableau& tableau) {
  std::ostringstream os;
  for (std::size_t r = 0; r < tableau.rows().size(); ++r) {
    if (r) os << '\n';
    const auto& row = tableau.rows()[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << row[c];
    }
  }
  return os.str();
}

}  // namespace krc
