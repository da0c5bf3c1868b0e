#include "nscert/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nscert {

ForcingSpec ForcingSpec::steady(SpectralField base) {
  ForcingSpec f;
  f.kind_ = Kind::steady;
  f.values_.push_back(std::move(base));
  return f;
}

ForcingSpec ForcingSpec::periodic(SpectralField base, double freq, double phase) {
  ForcingSpec f;
  f.kind_ = Kind::periodic;
  f.values_.push_back(std::move(base));
  f.freq_ = freq;
  f.phase_ = phase;
  return f;
}

ForcingSpec ForcingSpec::tabulated(std::vector<double> times,
                                   std::vector<SpectralField> values) {
  if (times.size() != values.size() || times.size() < 2)
    throw std::invalid_argument("forcing: tabulated spec needs >= 2 matching samples");
  for (size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("forcing: tabulated times must be strictly increasing");
    if (!values[i].lattice().same_geometry(values[0].lattice()))
      throw std::invalid_argument("forcing: tabulated snapshots must share one lattice");
  }
  ForcingSpec f;
  f.kind_ = Kind::tabulated;
  f.times_ = std::move(times);
  f.values_ = std::move(values);
  return f;
}

int ForcingSpec::carrier_K() const {
  return values_.empty() ? 0 : values_[0].lattice().K();
}

double ForcingSpec::carrier_L() const {
  return values_.empty() ? 0.0 : values_[0].lattice().L();
}

SpectralField ForcingSpec::evaluate(double t, const LatticePtr& target) const {
  if (kind_ == Kind::zero) return SpectralField::zero(target);
  if (values_[0].lattice().L() != target->L())
    throw std::invalid_argument("forcing: box length does not match target lattice");
  if (values_[0].lattice().K() > target->K())
    throw std::invalid_argument("forcing: carrier modes exceed the target lattice");

  switch (kind_) {
    case Kind::steady:
      return embed(values_[0], target);
    case Kind::periodic:
      return scaled(embed(values_[0], target),
                    std::cos(2.0 * M_PI * freq_ * t + phase_));
    case Kind::tabulated: {
      const double tol = 1e-9 * std::max(1.0, std::abs(times_.back()));
      if (t < times_.front() - tol || t > times_.back() + tol)
        throw std::invalid_argument("forcing: time outside the tabulated range");
      const double tc = std::clamp(t, times_.front(), times_.back());
      auto it = std::upper_bound(times_.begin(), times_.end(), tc);
      size_t j = (it == times_.begin()) ? 0 : size_t(it - times_.begin()) - 1;
      j = std::min(j, times_.size() - 2);
      const double h = times_[j + 1] - times_[j];
      const double b = (tc - times_[j]) / h;
      return axpby(1.0 - b, embed(values_[j], target), b, embed(values_[j + 1], target));
    }
    default:
      return SpectralField::zero(target);
  }
}

double ForcingSpec::norm_m(double t, double m) const {
  if (kind_ == Kind::zero) return 0.0;
  const LatticePtr own = values_[0].lattice_ptr();
  return sobolev_norm(evaluate(t, own), m);
}

}  // namespace nscert
