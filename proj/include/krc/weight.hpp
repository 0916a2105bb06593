#pragma once

#include <stdexcept>
#include <vector>

namespace krc {

using Int = long long;

// A classical sl_{n+1} weight kept in two synchronized coordinate views:
// coefficients on the fundamental weights (size n) and the content
// (r_1, ..., r_{n+1}).  Label 0 is paired with the level-zero convention
// <alpha_0^vee, mu> = -<theta^vee, mu> = r_{n+1} - r_1.
struct Weight {
  std::vector<Int> omega;
  std::vector<Int> content;

  int rank() const { return static_cast<int>(omega.size()); }

  Int pairing(int l) const {
    const int n = rank();
    if (l == 0) return content[n] - content[0];
    if (l < 1 || l > n) throw std::invalid_argument("weight pairing: label out of range");
    return content[l - 1] - content[l];
  }

  // The invariant tying the two views together.
  bool views_consistent() const {
    for (int l = 1; l <= rank(); ++l)
      if (omega[l - 1] != content[l - 1] - content[l]) return false;
    return true;
  }

  bool operator==(const Weight&) const = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
  if (a.omega.size() != b.omega.size())
    throw std::invalid_argument("weight addition: rank mismatch");
  Weight r = a;
  for (std::size_t k = 0; k < r.omega.size(); ++k) r.omega[k] += b.omega[k];
  for (std::size_t k = 0; k < r.content.size(); ++k) r.content[k] += b.content[k];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  if (a.omega.size() != b.omega.size())
    throw std::invalid_argument("weight subtraction: rank mismatch");
  Weight r = a;
  for (std::size_t k = 0; k < r.omega.size(); ++k) r.omega[k] -= b.omega[k];
  for (std::size_t k = 0; k < r.content.size(); ++k) r.content[k] -= b.content[k];
  return r;
}

// Simple root alpha_l of A_n in both views; label 0 yields -theta, the
// classical projection of the affine simple root.
inline Weight alpha_weight(int n, int l) {
  if (n < 1 || l < 0 || l > n) throw std::invalid_argument("alpha_weight: label out of range");
  Weight w;
  w.omega.assign(n, 0);
  w.content.assign(n + 1, 0);
  if (l == 0) {
    if (n == 1) {
      w.omega[0] = -2;
    } else {
      w.omega[0] = -1;
      w.omega[n - 1] = -1;
    }
    w.content[0] = -1;
    w.content[n] = 1;
    return w;
  }
  w.omega[l - 1] = 2;
  if (l - 2 >= 0) w.omega[l - 2] = -1;
  if (l < n) w.omega[l] = -1;
  w.content[l - 1] = 1;
  w.content[l] = -1;
  return w;
}

inline Weight plus_alpha(const Weight& w, int l) { return w + alpha_weight(w.rank(), l); }
inline Weight minus_alpha(const Weight& w, int l) { return w - alpha_weight(w.rank(), l); }

}  // namespace krc
