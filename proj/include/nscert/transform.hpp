#pragma once

#include <array>
#include <vector>

#include "nscert/field.hpp"

namespace nscert {

/// Real-valued samples of a velocity field on the uniform M^3 grid of
/// [0,L]^3, x_j = j L/M.  Layout: comp[c][(x*M + y)*M + z].
struct PhysicalField {
  int M = 0;
  double L = 0.0;
  std::array<std::vector<double>, 3> comp;
};

/// Pruned separable DFT between a centered spectral cube (side S = 2K+1,
/// wavevectors |k_i| <= K, zero mode at the center slot) and the M^3 grid.
/// The grid transform is exact for trigonometric polynomials when
/// M >= 2K+1.  Inner loops are OpenMP-parallel over independent output
/// rows, so results are bitwise reproducible for any thread count.
/// The plan owns scratch buffers: one plan per concurrent caller.
class TransformPlan {
 public:
  TransformPlan(int K, int M);

  int K() const { return K_; }
  int M() const { return M_; }
  int side() const { return S_; }

  /// cube (S^3 complex, split re/im) -> grid (M^3 complex, split re/im).
  void inverse(const double* cube_re, const double* cube_im,
               double* grid_re, double* grid_im) const;

  /// grid (M^3 real) -> cube (S^3 complex, split re/im), scaled by 1/M^3.
  void forward(const double* grid, double* cube_re, double* cube_im) const;

 private:
  int K_, M_, S_;
  // inv_[j*S + ks]: exp(+2*pi*i*j*(ks-K)/M)
  std::vector<double> inv_re_, inv_im_;
  // fwd_[ks*M + j]: exp(-2*pi*i*j*(ks-K)/M)/M
  std::vector<double> fwd_re_, fwd_im_;
  mutable std::vector<double> s1_re_, s1_im_, s2_re_, s2_im_;
};

/// Samples u on the M^3 grid.  Requires M >= 2K+1; the imaginary residue
/// of the synthesis must stay below 1e-12 relative (it is then dropped).
PhysicalField to_physical(const SpectralField& u, int M);

/// Inverse of to_physical for band-limited data: exact quadrature of the
/// Fourier coefficients, conjugate symmetry enforced exactly, mean dropped.
/// Validates the divergence invariant of the result.
SpectralField from_physical(const PhysicalField& phys, LatticePtr lat);

/// Naive direct-summation references for the two transforms (serial, no
/// shared code with the plan-based path).  Kept for tests and benchmarks.
PhysicalField to_physical_reference(const SpectralField& u, int M);
SpectralField from_physical_reference(const PhysicalField& phys, LatticePtr lat);

namespace detail {

/// Scatters lattice-ordered per-component coefficients into a centered
/// cube (zero slot zeroed); `comp` selects the component.
void lattice_to_cube(const Lattice& lat, const std::vector<Cplx>& data, int comp,
                     double* cube_re, double* cube_im);

/// Gathers a centered cube back into lattice order for one component.
void cube_to_lattice(const Lattice& lat, const double* cube_re, const double* cube_im,
                     int comp, std::vector<Cplx>& data);

/// Max |imag| over the grid relative to max |real|; 0 for an all-zero grid.
double imag_residue_rel(const std::vector<double>& re, const std::vector<double>& im);

}  // namespace detail

}  // namespace nscert
