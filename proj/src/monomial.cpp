#include "krc/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace krc {

Monomial Monomial::generator(int var, int pos, Int exp) {
  Monomial m;
  if (exp != 0) m.exp_[{var, pos}] = exp;
  return m;
}

Int Monomial::exponent(int var, int pos) const {
  auto it = exp_.find({var, pos});
  return it == exp_.end() ? 0 : it->second;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [key, exp] : other.exp_) {
    const Int merged = out.exponent(key.first, key.second) + exp;
    if (merged == 0)
      out.exp_.erase(key);
    else
      out.exp_[key] = merged;
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out;
  for (const auto& [key, exp] : exp_) out.exp_[key] = -exp;
  return out;
}

Monomial Monomial::pow(Int k) const {
  Monomial out;
  if (k == 0) return out;
  for (const auto& [key, exp] : exp_) out.exp_[key] = exp * k;
  return out;
}

std::string Monomial::to_string() const {
  if (exp_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, exp] : exp_) {
    if (!first) os << ' ';
    first = false;
    os << 'Y' << '_' << key.first << '(' << key.second << ')';
    if (exp != 1) os << '^' << exp;
  }
  return os.str();
}

COffsets::COffsets(int n, std::map<std::pair<int, int>, int> values) : n_(n), c_(std::move(values)) {
  for (int i = 1; i < n; ++i) {
    auto a = c_.find({i, i + 1});
    auto b = c_.find({i + 1, i});
    if (a == c_.end() || b == c_.end())
      throw std::invalid_argument("c offsets: missing adjacent pair");
    if (a->second + b->second != 1)
      throw std::invalid_argument("c offsets: c_ij + c_ji must equal 1");
  }
}

COffsets COffsets::upper(int n) {
  std::map<std::pair<int, int>, int> values;
  for (int i = 1; i < n; ++i) {
    values[{i, i + 1}] = 1;
    values[{i + 1, i}] = 0;
  }
  return COffsets(n, std::move(values));
}

COffsets COffsets::lower(int n) {
  std::map<std::pair<int, int>, int> values;
  for (int i = 1; i < n; ++i) {
    values[{i, i + 1}] = 0;
    values[{i + 1, i}] = 1;
  }
  return COffsets(n, std::move(values));
}

int COffsets::at(int i, int j) const {
  auto it = c_.find({i, j});
  if (it == c_.end()) throw std::invalid_argument("c offsets: pair is not adjacent");
  return it->second;
}

MonomialStats monomial_stats(const Monomial& monomial, int l, int n) {
  if (l < 1 || l > n) throw std::invalid_argument("monomial_stats: label out of range");

  MonomialStats out;
  std::vector<Int> totals(n, 0);
  for (const auto& [key, exp] : monomial.exponents()) {
    if (key.first < 1 || key.first > n)
      throw std::invalid_argument("monomial_stats: variable index out of range");
    totals[key.first - 1] += exp;
  }
  out.wt.omega = totals;
  out.wt.content.assign(n + 1, 0);
  for (int j = n; j >= 1; --j)
    out.wt.content[j - 1] = totals[j - 1] + (j < n ? out.wt.content[j] : 0);

  // support of the chosen variable (map order keeps positions sorted)
  std::vector<std::pair<int, Int>> support;
  for (const auto& [key, exp] : monomial.exponents())
    if (key.first == l) support.emplace_back(key.second, exp);
  if (support.empty()) return out;

  const int lo = support.front().first - 1;
  const int hi = support.back().first + 1;
  Int run = 0, best = 0, total = 0;
  for (const auto& [pos, exp] : support) total += exp;
  int first_peak = lo, last_peak = lo;
  for (int pos = lo; pos <= hi; ++pos) {
    run += monomial.exponent(l, pos);
    if (run > best) {
      best = run;
      first_peak = pos;
      last_peak = pos;
    } else if (run == best) {
      last_peak = pos;
    }
  }
  out.phi = best;
  out.eps = best - total;
  out.n_f = first_peak;
  out.n_e = last_peak;
  return out;
}

Monomial a_factor(int n, int l, int pos, const COffsets& c) {
  if (l < 1 || l > n) throw std::invalid_argument("a_factor: label out of range");
  Monomial out = Monomial::generator(l, pos).times(Monomial::generator(l, pos + 1));
  if (l - 1 >= 1) out = out.times(Monomial::generator(l - 1, pos + c.at(l - 1, l), -1));
  if (l + 1 <= n) out = out.times(Monomial::generator(l + 1, pos + c.at(l + 1, l), -1));
  return out;
}

std::optional<Monomial> m_f(const Monomial& monomial, int l, int n, const COffsets& c) {
  const auto stats = monomial_stats(monomial, l, n);
  if (stats.phi == 0) return std::nullopt;
  return monomial.times(a_factor(n, l, stats.n_f, c).inverse());
}

std::optional<Monomial> m_e(const Monomial& monomial, int l, int n, const COffsets& c) {
  const auto stats = monomial_stats(monomial, l, n);
  if (stats.eps == 0) return std::nullopt;
  return monomial.times(a_factor(n, l, stats.n_e, c));
}

MonomialCrystal::MonomialCrystal(int n, COffsets c, Int content_sum)
    : n_(n), c_(std::move(c)), content_sum_(content_sum) {
  if (c_.rank() != n_) throw std::invalid_argument("monomial crystal: offset rank mismatch");
}

std::vector<int> MonomialCrystal::index_set() const {
  std::vector<int> labels(n_);
  for (int l = 1; l <= n_; ++l) labels[l - 1] = l;
  return labels;
}

Weight MonomialCrystal::weight(const Element& x) const {
  Weight w = monomial_stats(x, 1, n_).wt;
  Int sum = 0;
  for (Int r : w.content) sum += r;
  const Int drift = sum - content_sum_;
  if (drift % (n_ + 1) != 0)
    throw std::logic_error("monomial weight: content lift is off the shared lattice");
  const Int k = drift / (n_ + 1);
  for (Int& r : w.content) r -= k;
  return w;
}

CrystalGraph<Monomial> generate_component(const CrystalShape& shape, const COffsets& c) {
  MonomialCrystal model(shape.n, c, static_cast<Int>(shape.m) * shape.i);
  const Monomial seed = Monomial::generator(shape.i, 0, shape.m);
  return build_graph(model, {seed});
}

}  // namespace krc
