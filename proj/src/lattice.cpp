#include "nscert/lattice.hpp"

#include <algorithm>

namespace nscert {

Lattice::Lattice(double box_length, int mode_cutoff)
    : L_(box_length), K_(mode_cutoff) {
  if (!(L_ > 0.0)) throw std::invalid_argument("lattice: box length must be positive");
  if (K_ < 1) throw std::invalid_argument("lattice: mode cutoff must be >= 1");

  kappa0_ = 2.0 * M_PI / L_;
  const int S = 2 * K_ + 1;
  waves_.reserve(static_cast<size_t>(S) * S * S - 1);
  for (int kx = -K_; kx <= K_; ++kx)
    for (int ky = -K_; ky <= K_; ++ky)
      for (int kz = -K_; kz <= K_; ++kz) {
        if (kx == 0 && ky == 0 && kz == 0) continue;
        waves_.push_back({kx, ky, kz});
      }

  lambda_.resize(waves_.size());
  mirror_.resize(waves_.size());
  for (int i = 0; i < size(); ++i) {
    const Vec3i& k = waves_[i];
    double n2 = double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
    lambda_[i] = kappa0_ * kappa0_ * n2;
    mirror_[i] = index_of({-k[0], -k[1], -k[2]});
  }

  lambda_sorted_ = lambda_;
  std::sort(lambda_sorted_.begin(), lambda_sorted_.end());
  lambda_sorted_.erase(std::unique(lambda_sorted_.begin(), lambda_sorted_.end()),
                       lambda_sorted_.end());
}

LatticePtr make_lattice(double L, int K) {
  return std::make_shared<Lattice>(L, K);
}

}  // namespace nscert
