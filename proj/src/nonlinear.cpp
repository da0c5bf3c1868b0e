#include "nscert/nonlinear.hpp"

#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace nscert {

namespace {

int resolve_ext_K(const Lattice& lat, int extended_K) {
  const int K = lat.K();
  const int ext = extended_K == 0 ? 2 * K : extended_K;
  if (ext < K || ext > 2 * K)
    throw std::invalid_argument("nonlinear workspace: extended_K must lie in [K, 2K]");
  return ext;
}

int resolve_M(const Lattice& lat, int ext_K, int M) {
  const int K = lat.K();
  const int resolved = M == 0 ? 2 * K + ext_K + 1 : M;
  if (resolved < 3 * K + 1)
    throw std::invalid_argument("nonlinear workspace: grid must have M >= 3K+1 points per axis");
  if (resolved < 2 * K + ext_K + 1)
    throw std::invalid_argument(
        "nonlinear workspace: M < 2K + extended_K + 1 aliases the extended band");
  return resolved;
}

}  // namespace

NonlinearWorkspace::NonlinearWorkspace(LatticePtr lat, int extended_K, int M)
    : lat_(std::move(lat)),
      ext_K_(resolve_ext_K(*lat_, extended_K)),
      M_(resolve_M(*lat_, ext_K_, M)),
      inv_plan_(lat_->K(), M_),
      fwd_plan_(ext_K_, M_) {
  out_lat_ = make_lattice(lat_->L(), ext_K_);

  const int S_in = 2 * lat_->K() + 1;
  const int S_out = 2 * ext_K_ + 1;
  cube_re_.resize(size_t(S_in) * S_in * S_in);
  cube_im_.resize(cube_re_.size());
  out_cube_re_.resize(size_t(S_out) * S_out * S_out);
  out_cube_im_.resize(out_cube_re_.size());
  const size_t g = size_t(M_) * M_ * M_;
  grid_re_.resize(g);
  grid_im_.resize(g);
  for (auto& v : u_phys_) v.resize(g);
  w_phys_.resize(g);
}

SpectralField bilinear_B(const SpectralField& u, const SpectralField& v,
                         NonlinearWorkspace& ws) {
  const Lattice& lat = ws.input_lattice();
  if (!u.lattice().same_geometry(lat) || !v.lattice().same_geometry(lat))
    throw std::invalid_argument("bilinear_B: field lattice does not match workspace");

  const size_t g = ws.grid_re_.size();
  const int K = lat.K();
  const int S = 2 * K + 1;

  // velocity samples of u
  for (int c = 0; c < 3; ++c) {
    detail::lattice_to_cube(lat, u.raw(), c, ws.cube_re_.data(), ws.cube_im_.data());
    ws.inv_plan_.inverse(ws.cube_re_.data(), ws.cube_im_.data(), ws.grid_re_.data(),
                         ws.grid_im_.data());
    if (detail::imag_residue_rel(ws.grid_re_, ws.grid_im_) > 1e-12)
      throw std::logic_error("bilinear_B: velocity synthesis has imaginary residue");
    std::memcpy(ws.u_phys_[c].data(), ws.grid_re_.data(), g * sizeof(double));
  }

  const Lattice& out_lat = *ws.output_lattice();
  std::vector<Cplx> out(3 * size_t(out_lat.size()));

  for (int j = 0; j < 3; ++j) {
    std::memset(ws.w_phys_.data(), 0, g * sizeof(double));
    for (int i = 0; i < 3; ++i) {
      // pack i*kappa_i(k) v_j(k) into the input cube
      std::memset(ws.cube_re_.data(), 0, ws.cube_re_.size() * sizeof(double));
      std::memset(ws.cube_im_.data(), 0, ws.cube_im_.size() * sizeof(double));
      for (int n = 0; n < lat.size(); ++n) {
        const Vec3i& k = lat.wavevector(n);
        const size_t idx =
            (size_t(k[0] + K) * S + size_t(k[1] + K)) * S + size_t(k[2] + K);
        const double kap = lat.kappa(n)[i];
        const Cplx z = v.mode(n)[j];
        ws.cube_re_[idx] = -kap * z.imag();
        ws.cube_im_[idx] = kap * z.real();
      }
      ws.inv_plan_.inverse(ws.cube_re_.data(), ws.cube_im_.data(), ws.grid_re_.data(),
                           ws.grid_im_.data());
      if (detail::imag_residue_rel(ws.grid_re_, ws.grid_im_) > 1e-12)
        throw std::logic_error("bilinear_B: gradient synthesis has imaginary residue");

      const double* ui = ws.u_phys_[i].data();
      const double* dv = ws.grid_re_.data();
      double* w = ws.w_phys_.data();
#pragma omp parallel for schedule(static)
      for (long p = 0; p < long(g); ++p) w[p] += ui[p] * dv[p];
    }
    ws.fwd_plan_.forward(ws.w_phys_.data(), ws.out_cube_re_.data(), ws.out_cube_im_.data());
    detail::cube_to_lattice(out_lat, ws.out_cube_re_.data(), ws.out_cube_im_.data(), j, out);
  }

  detail::symmetrize_modes(out_lat, out);
  detail::project_modes(out_lat, out);
  SpectralField result = SpectralField::unchecked(ws.output_lattice(), std::move(out));
  assert(divergence_rel_max(result) <= 1e-12);
  assert(reality_defect(result) == 0.0);
  return result;
}

SpectralField bilinear_B_direct(const SpectralField& u, const SpectralField& v) {
  const Lattice& lat = u.lattice();
  if (!lat.same_geometry(v.lattice()))
    throw std::invalid_argument("bilinear_B_direct: mismatched lattices");

  LatticePtr out_lat = make_lattice(lat.L(), 2 * lat.K());
  std::vector<Cplx> out(3 * size_t(out_lat->size()), Cplx(0, 0));

  for (int ip = 0; ip < lat.size(); ++ip) {
    const Cplx* up = u.mode(ip);
    const Vec3i& p = lat.wavevector(ip);
    for (int iq = 0; iq < lat.size(); ++iq) {
      const Vec3i& q = lat.wavevector(iq);
      const Vec3i k = {p[0] + q[0], p[1] + q[1], p[2] + q[2]};
      const int ik = out_lat->index_of(k);
      if (ik < 0) continue;  // k = 0 only; the mean is analytically zero
      const Vec3d kq = lat.kappa(iq);
      const Cplx dot = up[0] * kq[0] + up[1] * kq[1] + up[2] * kq[2];
      const Cplx fac = Cplx(-dot.imag(), dot.real());  // i * dot
      const Cplx* vq = v.mode(iq);
      Cplx* dst = out.data() + 3 * size_t(ik);
      for (int c = 0; c < 3; ++c) dst[c] += fac * vq[c];
    }
  }

  detail::symmetrize_modes(*out_lat, out);
  detail::project_modes(*out_lat, out);
  return SpectralField::unchecked(std::move(out_lat), std::move(out));
}

std::string method_name(ConstantEstimate::Method m) {
  switch (m) {
    case ConstantEstimate::Method::user_supplied: return "user-supplied";
    case ConstantEstimate::Method::lattice_sum_bound: return "lattice-sum bound";
    case ConstantEstimate::Method::empirical_max: return "empirical max";
  }
  return "unknown";
}

ConstantEstimate estimate_cm(int m, double L, const Lattice& lat) {
  if (m < 2) throw std::invalid_argument("estimate_cm: requires m >= 2");
  if (L != lat.L()) throw std::invalid_argument("estimate_cm: box length mismatch");

  double S = 0.0;
  for (int i = 0; i < lat.size(); ++i) S += std::pow(lat.lambda(i), -double(m));

  // Tail over |k|_inf > K: the sup-norm shell s holds (2s+1)^3-(2s-1)^3 =
  // 24 s^2 + 2 integer points, each with lambda >= kappa0^2 s^2, so the
  // constant stays an upper bound on any refinement of the lattice.
  const double k0 = lat.kappa0();
  const int K = lat.K();
  double tail = 0.0;
  for (int s = K + 1; s <= K + 2000; ++s) {
    const double count = 24.0 * double(s) * s + 2.0;
    tail += count * std::pow(k0 * k0 * double(s) * s, -double(m));
  }
  const double R = double(K + 2000);
  tail += 26.0 * std::pow(k0, -2.0 * m) * std::pow(R, 3.0 - 2.0 * m) / (2.0 * m - 3.0);

  const double c = std::pow(2.0, double(m)) * std::sqrt(S + tail) / std::pow(L, 1.5);
  return ConstantEstimate{m, c, ConstantEstimate::Method::lattice_sum_bound};
}

ConstantEstimate user_cm(int m, double c) {
  return ConstantEstimate{m, c, ConstantEstimate::Method::user_supplied};
}

InequalityReport inequality_diagnostics(const SpectralField& u, const SpectralField& v,
                                        int m, const ConstantEstimate& c) {
  if (m < 2) throw std::invalid_argument("inequality_diagnostics: requires m >= 2");
  if (!u.lattice().same_geometry(v.lattice()))
    throw std::invalid_argument("inequality_diagnostics: mismatched lattices");

  InequalityReport rep;
  rep.m = m;
  rep.c_m = c.c_m;

  NonlinearWorkspace ws(u.lattice_ptr());
  const SpectralField Buv = bilinear_B(u, v, ws);
  const SpectralField Bvu = bilinear_B(v, u, ws);
  const SpectralField u_ext = embed(u, ws.output_lattice());

  const double um = sobolev_norm(u, m);
  const double vm = sobolev_norm(v, m);
  const double vm1 = sobolev_norm(v, m + 1);

  const auto ratio = [](double num, double den) -> std::optional<double> {
    if (den == 0.0) return std::nullopt;
    return num / den;
  };

  rep.product_ratio = ratio(sobolev_norm(Buv, m), um * vm1);
  rep.flux_a_ratio = ratio(std::abs(inner_product_m(Buv, u_ext, m)), vm1 * um * um);
  if (m >= 3) rep.flux_b_ratio = ratio(std::abs(inner_product_m(Bvu, u_ext, m)), vm * um * um);

  const auto flag = [&](const std::optional<double>& r) {
    return r.has_value() && *r > c.c_m;
  };
  rep.product_flagged = flag(rep.product_ratio);
  rep.flux_a_flagged = flag(rep.flux_a_ratio);
  rep.flux_b_flagged = flag(rep.flux_b_ratio);
  return rep;
}

}  // namespace nscert
