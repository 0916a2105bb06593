#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/graph.hpp"
#include "krc/pattern.hpp"
#include "krc/verify.hpp"
#include "krc/weight.hpp"

namespace krc {

// Rectangular semistandard tableau: i rows of m entries over 1..n+1, rows
// weakly increasing, columns strictly increasing.
class Tableau {
 public:
  Tableau(const CrystalShape& shape, std::vector<std::vector<int>> rows);

  // Row r filled with the letter r: the classical highest weight.
  static Tableau highest_weight(const CrystalShape& shape);

  const CrystalShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  auto operator<=>(const Tableau&) const = default;

 private:
  CrystalShape shape_;
  std::vector<std::vector<int>> rows_;
};

// All semistandard fillings of the i x m rectangle over 1..n+1, sorted
// lexicographically on the row-major word; the count equals weyl_dimension.
std::vector<Tableau> enumerate_ssyt(const CrystalShape& shape);

// Signature-rule operators on the reading word (each cell a single-box
// factor); f bumps the letter owning the leftmost surviving +, e the letter
// owning the rightmost surviving -.
std::optional<Tableau> tab_f(const Tableau& tableau, int l);
std::optional<Tableau> tab_e(const Tableau& tableau, int l);

// Letter multiplicities (r_1, ..., r_{n+1}).
std::vector<Int> tableau_content(const Tableau& tableau);

// Promotion by jeu de taquin: drop all letters n+1, add one to the rest,
// slide the holes to the top left and fill them with 1's.
Tableau jdt_promote(const Tableau& tableau);

// Same, with an explicit slide order given as 0-based hole columns; throws
// when a requested slide does not start at an addable corner.
Tableau jdt_promote_with_order(const Tableau& tableau, const std::vector<int>& hole_columns);

Tableau jdt_promote_inverse(const Tableau& tableau);
std::optional<Tableau> tab_f0(const Tableau& tableau);
std::optional<Tableau> tab_e0(const Tableau& tableau);

class TableauCrystal {
 public:
  using Element = Tableau;

  explicit TableauCrystal(const CrystalShape& shape) : shape_(shape) {}

  std::vector<int> index_set() const {
    std::vector<int> labels(shape_.n);
    for (int l = 1; l <= shape_.n; ++l) labels[l - 1] = l;
    return labels;
  }

  Weight weight(const Element& x) const;
  Int phi(const Element& x, int l) const;
  Int eps(const Element& x, int l) const;
  std::optional<Element> f(const Element& x, int l) const { return tab_f(x, l); }
  std::optional<Element> e(const Element& x, int l) const { return tab_e(x, l); }

 private:
  CrystalShape shape_;
};

class AffineTableauCrystal {
 public:
  using Element = Tableau;

  explicit AffineTableauCrystal(const CrystalShape& shape) : shape_(shape), classical_(shape) {}

  std::vector<int> index_set() const {
    std::vector<int> labels(shape_.n + 1);
    for (int l = 0; l <= shape_.n; ++l) labels[l] = l;
    return labels;
  }

  Weight weight(const Element& x) const { return classical_.weight(x); }
  Int phi(const Element& x, int l) const;
  Int eps(const Element& x, int l) const;
  std::optional<Element> f(const Element& x, int l) const {
    return l == 0 ? tab_f0(x) : tab_f(x, l);
  }
  std::optional<Element> e(const Element& x, int l) const {
    return l == 0 ? tab_e0(x) : tab_e(x, l);
  }

 private:
  CrystalShape shape_;
  TableauCrystal classical_;
};

struct CompareResult {
  Report report;
  int vertex_count = 0;
};

// Grows the unique rooted classical isomorphism between the pattern crystal
// and the tableau crystal, checks totality, bijectivity and equal weights,
// then checks that the same matching intertwines the affine operators of the
// two models.
CompareResult compare_models(const CrystalShape& shape);

std::string tableau_to_text(const Tableau& tableau);

}  // namespace krc
