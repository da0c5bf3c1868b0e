#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace nscert {

using Vec3i = std::array<int, 3>;
using Vec3d = std::array<double, 3>;

/// Truncated Fourier lattice for the periodic box [0,L]^3.
///
/// Holds every integer wavevector k with 0 < max_i |k_i| <= K, in
/// lexicographic order of (kx,ky,kz).  The zero mode is excluded: all
/// fields are zero-mean.  Each mode carries the physical wavevector
/// kappa(k) = (2*pi/L) k and the Stokes eigenvalue lambda(k) = |kappa|^2.
class Lattice {
 public:
  Lattice(double box_length, int mode_cutoff);

  double L() const { return L_; }
  int K() const { return K_; }
  int size() const { return static_cast<int>(waves_.size()); }
  double kappa0() const { return kappa0_; }

  const Vec3i& wavevector(int i) const { return waves_[i]; }
  Vec3d kappa(int i) const {
    const Vec3i& k = waves_[i];
    return {kappa0_ * k[0], kappa0_ * k[1], kappa0_ * k[2]};
  }
  double lambda(int i) const { return lambda_[i]; }
  const std::vector<double>& lambdas() const { return lambda_; }

  /// Smallest and largest Stokes eigenvalues on the lattice.
  double lambda_min() const { return lambda_sorted_.front(); }
  double lambda_max() const { return lambda_sorted_.back(); }

  /// Distinct eigenvalues in increasing order (the eigenvalue shells).
  const std::vector<double>& shells() const { return lambda_sorted_; }

  /// Index of wavevector k, or -1 if k is not on the lattice.
  int index_of(const Vec3i& k) const {
    if (k[0] == 0 && k[1] == 0 && k[2] == 0) return -1;
    for (int c = 0; c < 3; ++c)
      if (k[c] < -K_ || k[c] > K_) return -1;
    const int S = 2 * K_ + 1;
    int lin = ((k[0] + K_) * S + (k[1] + K_)) * S + (k[2] + K_);
    const int zero_lin = (K_ * S + K_) * S + K_;
    return lin < zero_lin ? lin : lin - 1;
  }

  /// Index of -k for mode i (the lattice is closed under negation).
  int mirror(int i) const { return mirror_[i]; }

  /// True for the lexicographically positive member of each {k,-k} pair:
  /// the first nonzero component of k is positive.
  bool is_canonical(int i) const {
    const Vec3i& k = waves_[i];
    if (k[0] != 0) return k[0] > 0;
    if (k[1] != 0) return k[1] > 0;
    return k[2] > 0;
  }

  bool same_geometry(const Lattice& other) const {
    return L_ == other.L_ && K_ == other.K_;
  }

 private:
  double L_;
  int K_;
  double kappa0_;
  std::vector<Vec3i> waves_;
  std::vector<double> lambda_;
  std::vector<double> lambda_sorted_;
  std::vector<int> mirror_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Eigenvalue threshold of a Galerkin projection P_n.  A mode belongs to
/// the low span iff lambda(k) <= lambda_cut, so whole eigenvalue shells
/// are always included or excluded together.
struct GalerkinCutoff {
  double lambda_cut;
};

LatticePtr make_lattice(double L, int K);

}  // namespace nscert
