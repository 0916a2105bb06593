#include "krc/tensor.hpp"

namespace krc {

SignatureString l_signature(std::span<const std::pair<Int, Int>> eps_phi) {
  SignatureString sig;
  for (std::size_t k = 0; k < eps_phi.size(); ++k) {
    const auto [eps, phi] = eps_phi[k];
    if (eps < 0 || phi < 0) throw std::invalid_argument("l_signature: negative eps or phi");
    for (Int t = 0; t < eps; ++t) {
      if (!sig.plus_from.empty())
        sig.plus_from.pop_back();  // a minus cancels the nearest + on its left
      else
        sig.minus_from.push_back(static_cast<int>(k));
    }
    for (Int t = 0; t < phi; ++t) sig.plus_from.push_back(static_cast<int>(k));
  }
  return sig;
}

}  // namespace krc
