#include "nscert/field.hpp"

#include <cassert>
#include <cmath>
#include <cstring>

namespace nscert {

namespace detail {

void symmetrize_modes(const Lattice& lat, std::vector<Cplx>& data) {
  const int n = lat.size();
  for (int i = 0; i < n; ++i) {
    if (!lat.is_canonical(i)) continue;
    const int j = lat.mirror(i);
    for (int c = 0; c < 3; ++c)
      data[3 * size_t(j) + c] = std::conj(data[3 * size_t(i) + c]);
  }
}

void project_modes(const Lattice& lat, std::vector<Cplx>& data) {
  const int n = lat.size();
  for (int i = 0; i < n; ++i) {
    Vec3d kap = lat.kappa(i);
    const double inv = 1.0 / lat.lambda(i);
    Cplx* c = data.data() + 3 * size_t(i);
    Cplx dot = kap[0] * c[0] + kap[1] * c[1] + kap[2] * c[2];
    dot *= inv;
    c[0] -= kap[0] * dot;
    c[1] -= kap[1] * dot;
    c[2] -= kap[2] * dot;
  }
}

double mode_divergence_rel_max(const Lattice& lat, const std::vector<Cplx>& data) {
  double worst = 0.0;
  for (int i = 0; i < lat.size(); ++i) {
    Vec3d kap = lat.kappa(i);
    const double knorm = std::sqrt(lat.lambda(i));
    const Cplx* c = data.data() + 3 * size_t(i);
    const Cplx dot = kap[0] * c[0] + kap[1] * c[1] + kap[2] * c[2];
    const double amp = std::sqrt(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]));
    if (amp == 0.0) continue;
    worst = std::max(worst, std::abs(dot) / (knorm * amp));
  }
  return worst;
}

double mode_asymmetry_rel_max(const Lattice& lat, const std::vector<Cplx>& data) {
  double scale = 0.0;
  for (const Cplx& z : data) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < lat.size(); ++i) {
    const int j = lat.mirror(i);
    for (int c = 0; c < 3; ++c) {
      const Cplx d = data[3 * size_t(j) + c] - std::conj(data[3 * size_t(i) + c]);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst / scale;
}

}  // namespace detail

SpectralField SpectralField::zero(LatticePtr lat) {
  std::vector<Cplx> data(3 * size_t(lat->size()), Cplx(0.0, 0.0));
  return SpectralField(std::move(lat), std::move(data));
}

SpectralField SpectralField::from_modes(LatticePtr lat, std::vector<Cplx> data) {
  if (data.size() != 3 * size_t(lat->size()))
    throw std::invalid_argument("from_modes: coefficient count does not match lattice");
  if (detail::mode_asymmetry_rel_max(*lat, data) > 1e-12)
    throw std::invalid_argument("from_modes: coefficients are not conjugate-symmetric");
  detail::symmetrize_modes(*lat, data);
  if (detail::mode_divergence_rel_max(*lat, data) > 1e-12)
    throw std::invalid_argument("from_modes: coefficients are not divergence-free");
  return SpectralField(std::move(lat), std::move(data));
}

SpectralField SpectralField::unchecked(LatticePtr lat, std::vector<Cplx> data) {
  assert(data.size() == 3 * size_t(lat->size()));
  assert(detail::mode_asymmetry_rel_max(*lat, data) <= 1e-12);
  assert(detail::mode_divergence_rel_max(*lat, data) <= 1e-12);
  return SpectralField(std::move(lat), std::move(data));
}

SpectralField leray_project(const std::vector<Cplx>& raw, LatticePtr lat) {
  if (raw.size() != 3 * size_t(lat->size()))
    throw std::invalid_argument("leray_project: coefficient count does not match lattice");
  if (detail::mode_asymmetry_rel_max(*lat, raw) > 1e-12)
    throw std::invalid_argument("leray_project: input is not conjugate-symmetric");
  std::vector<Cplx> data = raw;
  detail::symmetrize_modes(*lat, data);
  detail::project_modes(*lat, data);
  return SpectralField::unchecked(std::move(lat), std::move(data));
}

SpectralField stokes_power_apply(const SpectralField& u, double p) {
  const Lattice& lat = u.lattice();
  std::vector<Cplx> data = u.raw();
  for (int i = 0; i < lat.size(); ++i) {
    const double g = std::pow(lat.lambda(i), p);
    for (int c = 0; c < 3; ++c) data[3 * size_t(i) + c] *= g;
  }
  return SpectralField::unchecked(u.lattice_ptr(), std::move(data));
}

double sobolev_norm(const SpectralField& u, double m) {
  const Lattice& lat = u.lattice();
  double acc = 0.0;
  for (int i = 0; i < lat.size(); ++i) {
    const Cplx* c = u.mode(i);
    const double a2 = std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
    acc += (m == 0.0 ? a2 : std::pow(lat.lambda(i), m) * a2);
  }
  const double vol = lat.L() * lat.L() * lat.L();
  return std::sqrt(vol * acc);
}

double inner_product_m(const SpectralField& u, const SpectralField& v, double m) {
  const Lattice& lat = u.lattice();
  if (!lat.same_geometry(v.lattice()))
    throw std::invalid_argument("inner_product_m: mismatched lattices");
  double acc = 0.0;
  for (int i = 0; i < lat.size(); ++i) {
    const Cplx* a = u.mode(i);
    const Cplx* b = v.mode(i);
    double re = 0.0;
    for (int c = 0; c < 3; ++c)
      re += a[c].real() * b[c].real() + a[c].imag() * b[c].imag();
    acc += (m == 0.0 ? re : std::pow(lat.lambda(i), m) * re);
  }
  return lat.L() * lat.L() * lat.L() * acc;
}

SpectralField galerkin_low(const SpectralField& u, GalerkinCutoff cut) {
  const Lattice& lat = u.lattice();
  std::vector<Cplx> data = u.raw();
  for (int i = 0; i < lat.size(); ++i)
    if (lat.lambda(i) > cut.lambda_cut)
      for (int c = 0; c < 3; ++c) data[3 * size_t(i) + c] = Cplx(0.0, 0.0);
  return SpectralField::unchecked(u.lattice_ptr(), std::move(data));
}

SpectralField galerkin_high(const SpectralField& u, GalerkinCutoff cut) {
  const Lattice& lat = u.lattice();
  std::vector<Cplx> data = u.raw();
  for (int i = 0; i < lat.size(); ++i)
    if (lat.lambda(i) <= cut.lambda_cut)
      for (int c = 0; c < 3; ++c) data[3 * size_t(i) + c] = Cplx(0.0, 0.0);
  return SpectralField::unchecked(u.lattice_ptr(), std::move(data));
}

std::pair<SpectralField, SpectralField> galerkin_split(const SpectralField& u,
                                                       GalerkinCutoff cut) {
  return {galerkin_low(u, cut), galerkin_high(u, cut)};
}

SpectralField axpby(double a, const SpectralField& u, double b, const SpectralField& v) {
  if (!u.lattice().same_geometry(v.lattice()))
    throw std::invalid_argument("axpby: mismatched lattices");
  std::vector<Cplx> data(u.raw().size());
  for (size_t i = 0; i < data.size(); ++i) data[i] = a * u.raw()[i] + b * v.raw()[i];
  return SpectralField::unchecked(u.lattice_ptr(), std::move(data));
}

SpectralField scaled(const SpectralField& u, double a) {
  std::vector<Cplx> data(u.raw().size());
  for (size_t i = 0; i < data.size(); ++i) data[i] = a * u.raw()[i];
  return SpectralField::unchecked(u.lattice_ptr(), std::move(data));
}

SpectralField embed(const SpectralField& u, LatticePtr target) {
  const Lattice& src = u.lattice();
  if (target->L() != src.L())
    throw std::invalid_argument("embed: box lengths differ");
  if (target->K() < src.K())
    throw std::invalid_argument("embed: target lattice is smaller than the source");
  if (target->K() == src.K()) return SpectralField::unchecked(target, u.raw());
  std::vector<Cplx> data(3 * size_t(target->size()), Cplx(0.0, 0.0));
  for (int i = 0; i < src.size(); ++i) {
    const int j = target->index_of(src.wavevector(i));
    for (int c = 0; c < 3; ++c) data[3 * size_t(j) + c] = u.mode(i)[c];
  }
  return SpectralField::unchecked(std::move(target), std::move(data));
}

bool supported_on_low_span(const SpectralField& u, GalerkinCutoff cut) {
  const Lattice& lat = u.lattice();
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.lambda(i) <= cut.lambda_cut) continue;
    const Cplx* c = u.mode(i);
    if (c[0] != Cplx(0.0, 0.0) || c[1] != Cplx(0.0, 0.0) || c[2] != Cplx(0.0, 0.0))
      return false;
  }
  return true;
}

double max_abs_coeff(const SpectralField& u) {
  double worst = 0.0;
  for (const Cplx& z : u.raw()) worst = std::max(worst, std::abs(z));
  return worst;
}

double divergence_rel_max(const SpectralField& u) {
  return detail::mode_divergence_rel_max(u.lattice(), u.raw());
}

double reality_defect(const SpectralField& u) {
  const Lattice& lat = u.lattice();
  double worst = 0.0;
  for (int i = 0; i < lat.size(); ++i) {
    const int j = lat.mirror(i);
    for (int c = 0; c < 3; ++c) {
      const Cplx d = u.raw()[3 * size_t(j) + c] - std::conj(u.raw()[3 * size_t(i) + c]);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

bool has_nan(const SpectralField& u) {
  for (const Cplx& z : u.raw())
    if (std::isnan(z.real()) || std::isnan(z.imag())) return true;
  return false;
}

}  // namespace nscert
