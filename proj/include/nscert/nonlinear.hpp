#pragma once

#include <optional>
#include <string>

#include "nscert/transform.hpp"

namespace nscert {

/// Scratch space for the pseudospectral evaluation of B(u,v).
///
/// The product of two fields band-limited to |k_i| <= K has exact Fourier
/// content up to |k_i| <= 2K.  Retaining the output band extended_K
/// without aliasing on ANY retained mode requires M >= 2K + extended_K + 1
/// grid points per axis (alias images of a retained mode must fall outside
/// the product band).  The constructor sizes M that way by default and
/// rejects anything smaller.
///
/// Holds mutable scratch: one workspace per concurrent caller.
class NonlinearWorkspace {
 public:
  /// extended_K = 0 selects the full product band 2K; M = 0 selects the
  /// smallest exact grid, M = 2K + extended_K + 1.
  explicit NonlinearWorkspace(LatticePtr lat, int extended_K = 0, int M = 0);

  const Lattice& input_lattice() const { return *lat_; }
  const LatticePtr& input_lattice_ptr() const { return lat_; }
  const LatticePtr& output_lattice() const { return out_lat_; }
  int extended_K() const { return ext_K_; }
  int grid_M() const { return M_; }

 private:
  friend SpectralField bilinear_B(const SpectralField&, const SpectralField&,
                                  NonlinearWorkspace&);
  LatticePtr lat_;
  LatticePtr out_lat_;
  int ext_K_;
  int M_;
  TransformPlan inv_plan_;   // input band -> grid
  TransformPlan fwd_plan_;   // grid -> output band
  std::vector<double> cube_re_, cube_im_;        // input-band cube
  std::vector<double> out_cube_re_, out_cube_im_;  // output-band cube
  std::vector<double> grid_re_, grid_im_;        // complex grid scratch
  std::array<std::vector<double>, 3> u_phys_;    // velocity samples
  std::vector<double> w_phys_;                   // one output component
};

/// Projected convection term B(u,v) = Leray[(u.grad)v], computed alias-free
/// by zero-padded transforms; output on the workspace's extended band.
/// Divergence-free and conjugate-symmetric by construction.
SpectralField bilinear_B(const SpectralField& u, const SpectralField& v,
                         NonlinearWorkspace& ws);

/// Independent oracle: the same operator by direct convolution,
///   out(k) = Leray[ sum_{p+q=k} i (u(p).kappa(q)) v(q) ],
/// as a double loop over lattice modes.  O(N^2); intended for K <= 4.
/// Output on the full product band 2K.
SpectralField bilinear_B_direct(const SpectralField& u, const SpectralField& v);

/// Provenance-tagged constant for the product estimate
/// ||B(u,v)||_m <= c_m ||u||_m ||v||_{m+1}.
struct ConstantEstimate {
  int m = 0;
  double c_m = 0.0;
  enum class Method { user_supplied, lattice_sum_bound, empirical_max };
  Method method = Method::user_supplied;
};

std::string method_name(ConstantEstimate::Method m);

/// Upper bound for c_m from the splitting |kappa(k)|^m <=
/// 2^{m-1}(|kappa(p)|^m + |kappa(q)|^m) on p+q=k plus Cauchy-Schwarz with
/// weight lambda^{-m}:  c_m <= 2^m sqrt(S_m) / L^{3/2}  where
/// S_m = sum_k lambda(k)^{-m} over the lattice, padded with an integral
/// bound for the modes beyond the cutoff so the value is valid on any
/// refinement of the lattice.
ConstantEstimate estimate_cm(int m, double L, const Lattice& lat);

/// Wraps a caller-chosen value with user-supplied provenance.
ConstantEstimate user_cm(int m, double c);

/// Measured ratios of the three product/flux inequalities for the pair
/// (u,v), with u playing the second-slot role w in the flux forms:
///   product:  ||B(u,v)||_m / (||u||_m ||v||_{m+1})      (m >= 2)
///   flux_a:   |(B(u,v), A^m u)| / (||v||_{m+1} ||u||_m^2)  (m >= 2)
///   flux_b:   |(B(v,u), A^m u)| / (||v||_m ||u||_m^2)      (m >= 3)
/// A ratio with zero denominator is reported as absent (undefined), never
/// as a violation.
struct InequalityReport {
  int m = 0;
  double c_m = 0.0;
  std::optional<double> product_ratio;
  std::optional<double> flux_a_ratio;
  std::optional<double> flux_b_ratio;  // absent when m < 3
  bool product_flagged = false;
  bool flux_a_flagged = false;
  bool flux_b_flagged = false;
  bool any_flagged() const { return product_flagged || flux_a_flagged || flux_b_flagged; }
};

InequalityReport inequality_diagnostics(const SpectralField& u, const SpectralField& v,
                                        int m, const ConstantEstimate& c);

}  // namespace nscert
