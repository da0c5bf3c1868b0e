#pragma once

#include <string>
#include <vector>

#include "nscert/field.hpp"

namespace nscert {

struct TrajectoryMeta {
  double nu = 0.0;
  double lambda_cut = 0.0;
  double dt = 0.0;          // integrator step (snapshots are stride*dt apart)
  int stride = 1;
  std::string integrator = "ifrk4";
};

/// Time-ordered snapshots of one solve.  All snapshots share one lattice
/// and, when produced by integrate, are supported on the Galerkin low span.
class Trajectory {
 public:
  Trajectory(std::vector<double> times, std::vector<SpectralField> snapshots,
             TrajectoryMeta meta);

  int count() const { return static_cast<int>(times_.size()); }
  double time(int i) const { return times_[i]; }
  const std::vector<double>& times() const { return times_; }
  double duration() const { return times_.back(); }
  const SpectralField& snapshot(int i) const { return snaps_[i]; }
  const LatticePtr& lattice_ptr() const { return snaps_[0].lattice_ptr(); }
  const Lattice& lattice() const { return snaps_[0].lattice(); }
  const TrajectoryMeta& meta() const { return meta_; }

  /// Index j of the interval [t_j, t_{j+1}] containing t, right-continuous
  /// at nodes (t = T maps to the last interval).
  int interval_of(double t) const;

 private:
  std::vector<double> times_;
  std::vector<SpectralField> snaps_;
  TrajectoryMeta meta_;
};

struct InterpolantSample {
  SpectralField value;
  SpectralField slope;
};

/// Piecewise-linear interpolant of the snapshots: the value at t and the
/// slope (u_{j+1}-u_j)/(t_{j+1}-t_j), constant on each interval and
/// right-continuous at the nodes.  t must lie in [0, T].
InterpolantSample interpolant(const Trajectory& traj, double t);

}  // namespace nscert
