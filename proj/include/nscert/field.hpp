#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nscert/lattice.hpp"

namespace nscert {

using Cplx = std::complex<double>;

/// Divergence-free, zero-mean velocity field stored as Fourier amplitudes:
/// u(x) = sum_k coeff(k) exp(i kappa(k).x), three complex components per
/// lattice wavevector.  Invariants held by every constructed field:
///   - reality: coeff(-k) == conj(coeff(k)) bitwise,
///   - incompressibility: kappa(k).coeff(k) = 0 (1e-12 relative),
///   - zero mean (the lattice has no k = 0 slot).
/// Fields are immutable after construction; all operations below are pure.
class SpectralField {
 public:
  static SpectralField zero(LatticePtr lat);

  /// Wraps raw per-mode coefficients, enforcing exact conjugate symmetry
  /// and validating incompressibility.  Throws std::invalid_argument if
  /// the input is asymmetric beyond 1e-12 or not divergence-free.
  static SpectralField from_modes(LatticePtr lat, std::vector<Cplx> data);

  /// Internal fast path: the caller guarantees the invariants (asserted
  /// in debug builds).
  static SpectralField unchecked(LatticePtr lat, std::vector<Cplx> data);

  const Lattice& lattice() const { return *lat_; }
  const LatticePtr& lattice_ptr() const { return lat_; }
  int modes() const { return lat_->size(); }

  const Cplx* mode(int i) const { return data_.data() + 3 * static_cast<size_t>(i); }
  const std::vector<Cplx>& raw() const { return data_; }

 private:
  SpectralField(LatticePtr lat, std::vector<Cplx> data)
      : lat_(std::move(lat)), data_(std::move(data)) {}

  LatticePtr lat_;
  std::vector<Cplx> data_;
};

/// Leray projection of raw per-mode coefficients: each mode is mapped by
/// (I - kappa kappa^T / |kappa|^2), which annihilates gradients and fixes
/// the incompressibility invariant.  Input must be conjugate-symmetric
/// (1e-12 relative); it is symmetrized exactly before projecting.
SpectralField leray_project(const std::vector<Cplx>& raw, LatticePtr lat);

/// Multiplies each mode by lambda(k)^p (powers of the Stokes operator).
SpectralField stokes_power_apply(const SpectralField& u, double p);

/// || A^{m/2} u || = sqrt( L^3 sum_k lambda(k)^m |coeff(k)|^2 ).
/// m = 0 gives the L2 norm of the physical field.
double sobolev_norm(const SpectralField& u, double m);

/// V^m inner product: L^3 sum_k lambda(k)^m Re<u_k, v_k>.
double inner_product_m(const SpectralField& u, const SpectralField& v, double m);

/// Splits u into (low, high) across the eigenvalue cutoff; low + high = u.
std::pair<SpectralField, SpectralField> galerkin_split(const SpectralField& u,
                                                       GalerkinCutoff cut);

/// Keeps only modes with lambda <= lambda_cut (the P_n projection).
SpectralField galerkin_low(const SpectralField& u, GalerkinCutoff cut);
/// Keeps only modes with lambda > lambda_cut (the Q_n projection).
SpectralField galerkin_high(const SpectralField& u, GalerkinCutoff cut);

/// a*u + b*v on a shared lattice.
SpectralField axpby(double a, const SpectralField& u, double b, const SpectralField& v);
SpectralField scaled(const SpectralField& u, double a);

/// Copies u onto a lattice with the same box length and K >= u's K.
SpectralField embed(const SpectralField& u, LatticePtr target);

/// True if every coefficient above the cutoff is exactly zero.
bool supported_on_low_span(const SpectralField& u, GalerkinCutoff cut);

double max_abs_coeff(const SpectralField& u);

/// max_k |kappa_hat(k).coeff(k)| / |coeff(k)| over modes with |coeff| > 0.
double divergence_rel_max(const SpectralField& u);

/// max_k |coeff(-k) - conj(coeff(k))| (absolute).
double reality_defect(const SpectralField& u);

bool has_nan(const SpectralField& u);

namespace detail {
/// Overwrites the non-canonical half with the conjugate of the canonical
/// half, making conjugate symmetry exact.
void symmetrize_modes(const Lattice& lat, std::vector<Cplx>& data);
/// Applies (I - kappa kappa^T/|kappa|^2) in place.
void project_modes(const Lattice& lat, std::vector<Cplx>& data);
double mode_divergence_rel_max(const Lattice& lat, const std::vector<Cplx>& data);
double mode_asymmetry_rel_max(const Lattice& lat, const std::vector<Cplx>& data);
}  // namespace detail

}  // namespace nscert
