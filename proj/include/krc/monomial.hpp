#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krc/graph.hpp"
#include "krc/pattern.hpp"
#include "krc/weight.hpp"

namespace krc {

// Laurent monomial in the variables Y_i(pos) with canonical support: zero
// exponents are never stored.
class Monomial {
 public:
  using Key = std::pair<int, int>;  // (variable index, position)

  Monomial() = default;
  static Monomial generator(int var, int pos, Int exp = 1);

  Int exponent(int var, int pos) const;
  bool is_one() const { return exp_.empty(); }
  const std::map<Key, Int>& exponents() const { return exp_; }

  Monomial times(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(Int k) const;

  // "Y_1(1)^-1 Y_2(0)", factors sorted by (variable, position)
  std::string to_string() const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator<(const Monomial& other) const { return exp_ < other.exp_; }

 private:
  std::map<Key, Int> exp_;
};

// Offsets c_{i,j} in {0,1} with c_{i,j} + c_{j,i} = 1, kept for adjacent
// ordered pairs of A_n nodes.
class COffsets {
 public:
  COffsets(int n, std::map<std::pair<int, int>, int> values);
  static COffsets upper(int n);  // c_{i,j} = 1 iff i < j  (the default)
  static COffsets lower(int n);  // c_{i,j} = 1 iff i > j

  int rank() const { return n_; }
  int at(int i, int j) const;

  bool operator==(const COffsets&) const = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, int> c_;
};

struct MonomialStats {
  Weight wt;      // content lifted with r_{n+1} = 0
  Int phi = 0;
  Int eps = 0;
  int n_f = 0;    // meaningful when phi > 0
  int n_e = 0;    // meaningful when eps > 0
};

// The five string quantities of one label; the max/min over all integer
// positions reduces to a scan of [min support - 1, max support + 1], since
// the partial sums are constant outside the support.
MonomialStats monomial_stats(const Monomial& monomial, int l, int n);

// A_l(pos) = Y_l(pos) Y_l(pos+1) prod_{adjacent i} Y_i(pos + c_{i,l})^{-1}
Monomial a_factor(int n, int l, int pos, const COffsets& c);

std::optional<Monomial> m_f(const Monomial& monomial, int l, int n, const COffsets& c);
std::optional<Monomial> m_e(const Monomial& monomial, int l, int n, const COffsets& c);

// Crystal model over monomials with labels 1..n; contents are normalised so
// that they sum to `content_sum`, pinning the lift shared with the other
// models of the same highest weight.
class MonomialCrystal {
 public:
  using Element = Monomial;

  MonomialCrystal(int n, COffsets c, Int content_sum);

  std::vector<int> index_set() const;
  Weight weight(const Element& x) const;
  Int phi(const Element& x, int l) const { return monomial_stats(x, l, n_).phi; }
  Int eps(const Element& x, int l) const { return monomial_stats(x, l, n_).eps; }
  std::optional<Element> f(const Element& x, int l) const { return m_f(x, l, n_, c_); }
  std::optional<Element> e(const Element& x, int l) const { return m_e(x, l, n_, c_); }

 private:
  int n_;
  COffsets c_;
  Int content_sum_;
};

// Closure of Y_i(0)^m under the monomial operators; isomorphic to the
// classical crystal of the same shape.
CrystalGraph<Monomial> generate_component(const CrystalShape& shape, const COffsets& c);

}  // namespace krc
