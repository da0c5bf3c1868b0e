#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nscert/field.hpp"

namespace nscert {

/// Time-dependent body force.  Every evaluation yields a valid divergence-
/// free, zero-mean, real field; the carrier field may live on a coarser
/// lattice than the evaluation target and is embedded on demand.
class ForcingSpec {
 public:
  enum class Kind { zero, steady, periodic, tabulated };

  ForcingSpec() : kind_(Kind::zero) {}

  static ForcingSpec zero() { return ForcingSpec(); }
  static ForcingSpec steady(SpectralField base);
  /// base * cos(2*pi*freq*t + phase)
  static ForcingSpec periodic(SpectralField base, double freq, double phase);
  /// Piecewise-linear in t between tabulated snapshots (strictly
  /// increasing times); t outside the table is an error.
  static ForcingSpec tabulated(std::vector<double> times, std::vector<SpectralField> values);

  Kind kind() const { return kind_; }
  bool is_identically_zero() const { return kind_ == Kind::zero; }

  /// Largest wavevector cutoff the carrier needs; 0 for zero forcing.
  int carrier_K() const;
  double carrier_L() const;

  SpectralField evaluate(double t, const LatticePtr& target) const;

  /// ||f(t)||_m on the carrier band (embedding does not change norms).
  double norm_m(double t, double m) const;

 private:
  Kind kind_;
  std::vector<SpectralField> values_;  // 1 for steady/periodic
  std::vector<double> times_;
  double freq_ = 0.0;
  double phase_ = 0.0;
};

}  // namespace nscert
