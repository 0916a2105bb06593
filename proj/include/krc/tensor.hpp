#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "krc/weight.hpp"

namespace krc {

// Reduced (-,...,-,+,...,+) signature; every surviving symbol remembers the
// factor that contributed it.
struct SignatureString {
  std::vector<int> minus_from;  // left to right
  std::vector<int> plus_from;   // left to right

  Int eps() const { return static_cast<Int>(minus_from.size()); }
  Int phi() const { return static_cast<Int>(plus_from.size()); }
};

// Emit eps_l minuses then phi_l pluses per factor, in order, and cancel all
// adjacent (+,-) pairs.
SignatureString l_signature(std::span<const std::pair<Int, Int>> eps_phi);

// Tensor product of crystals over one index set.  The k-factor operators act
// through the reduced signature: f on the factor owning the leftmost +, e on
// the factor owning the rightmost -.
template <class Sub>
class TensorCrystal {
 public:
  using Element = std::vector<typename Sub::Element>;

  explicit TensorCrystal(std::vector<Sub> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("tensor: needs at least one factor");
    const auto labels = factors_.front().index_set();
    for (const auto& sub : factors_)
      if (sub.index_set() != labels)
        throw std::invalid_argument("tensor: factors must share one index set");
  }

  const std::vector<Sub>& factors() const { return factors_; }

  std::vector<int> index_set() const { return factors_.front().index_set(); }

  SignatureString signature(const Element& x, int l) const {
    check(x);
    std::vector<std::pair<Int, Int>> eps_phi(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      eps_phi[k] = {factors_[k].eps(x[k], l), factors_[k].phi(x[k], l)};
    return l_signature(eps_phi);
  }

  Weight weight(const Element& x) const {
    check(x);
    Weight w = factors_[0].weight(x[0]);
    for (std::size_t k = 1; k < x.size(); ++k) w = w + factors_[k].weight(x[k]);
    return w;
  }

  Int phi(const Element& x, int l) const { return signature(x, l).phi(); }
  Int eps(const Element& x, int l) const { return signature(x, l).eps(); }

  std::optional<Element> f(const Element& x, int l) const {
    const auto sig = signature(x, l);
    if (sig.plus_from.empty()) return std::nullopt;
    const int k = sig.plus_from.front();
    auto img = factors_[k].f(x[k], l);
    if (!img) throw std::logic_error("tensor f: surviving + without an acting operator");
    Element out = x;
    out[k] = *img;
    return out;
  }

  std::optional<Element> e(const Element& x, int l) const {
    const auto sig = signature(x, l);
    if (sig.minus_from.empty()) return std::nullopt;
    const int k = sig.minus_from.back();
    auto img = factors_[k].e(x[k], l);
    if (!img) throw std::logic_error("tensor e: surviving - without an acting operator");
    Element out = x;
    out[k] = *img;
    return out;
  }

 private:
  void check(const Element& x) const {
    if (x.size() != factors_.size())
      throw std::invalid_argument("tensor: element has the wrong number of factors");
  }

  std::vector<Sub> factors_;
};

}  // namespace krc
