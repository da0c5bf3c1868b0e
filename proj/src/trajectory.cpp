#include "nscert/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace nscert {

Trajectory::Trajectory(std::vector<double> times, std::vector<SpectralField> snapshots,
                       TrajectoryMeta meta)
    : times_(std::move(times)), snaps_(std::move(snapshots)), meta_(std::move(meta)) {
  if (times_.size() != snaps_.size() || times_.size() < 2)
    throw std::invalid_argument("trajectory: needs >= 2 matching time/snapshot pairs");
  if (times_.front() != 0.0)
    throw std::invalid_argument("trajectory: must start at t = 0");
  for (size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1]))
      throw std::invalid_argument("trajectory: times must be strictly increasing");
    if (!snaps_[i].lattice().same_geometry(snaps_[0].lattice()))
      throw std::invalid_argument("trajectory: snapshots must share one lattice");
  }
}

int Trajectory::interval_of(double t) const {
  if (t < 0.0 || t > times_.back())
    throw std::invalid_argument("trajectory: time outside [0, T]");
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  int j = int(it - times_.begin()) - 1;
  return std::min(std::max(j, 0), count() - 2);
}

InterpolantSample interpolant(const Trajectory& traj, double t) {
  const int j = traj.interval_of(t);
  const double t0 = traj.time(j), t1 = traj.time(j + 1);
  const double h = t1 - t0;
  const double b = (t - t0) / h;
  SpectralField value = axpby(1.0 - b, traj.snapshot(j), b, traj.snapshot(j + 1));
  SpectralField slope = axpby(-1.0 / h, traj.snapshot(j), 1.0 / h, traj.snapshot(j + 1));
  return {std::move(value), std::move(slope)};
}

}  // namespace nscert
