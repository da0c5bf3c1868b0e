#include "nscert/transform.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nscert {

namespace {

inline double twopi() { return 2.0 * M_PI; }

// exp(2*pi*i*sign*j*k/M) via the exact residue of j*k mod M.
inline void unit_root(long j, long k, int M, int sign, double& re, double& im) {
  long r = (j * k) % M;
  if (r < 0) r += M;
  const double ang = sign * twopi() * double(r) / double(M);
  re = std::cos(ang);
  im = std::sin(ang);
}

}  // namespace

TransformPlan::TransformPlan(int K, int M) : K_(K), M_(M), S_(2 * K + 1) {
  if (K < 1) throw std::invalid_argument("transform: K must be >= 1");
  if (M < S_) throw std::invalid_argument("transform: grid must have M >= 2K+1 points per axis");

  inv_re_.resize(size_t(M_) * S_);
  inv_im_.resize(size_t(M_) * S_);
  for (int j = 0; j < M_; ++j)
    for (int ks = 0; ks < S_; ++ks)
      unit_root(j, ks - K_, M_, +1, inv_re_[size_t(j) * S_ + ks], inv_im_[size_t(j) * S_ + ks]);

  fwd_re_.resize(size_t(S_) * M_);
  fwd_im_.resize(size_t(S_) * M_);
  const double invM = 1.0 / double(M_);
  for (int ks = 0; ks < S_; ++ks)
    for (int j = 0; j < M_; ++j) {
      double re, im;
      unit_root(j, ks - K_, M_, -1, re, im);
      fwd_re_[size_t(ks) * M_ + j] = re * invM;
      fwd_im_[size_t(ks) * M_ + j] = im * invM;
    }

  const size_t stage = size_t(M_) * M_ * S_;
  s1_re_.resize(stage);
  s1_im_.resize(stage);
  s2_re_.resize(stage);
  s2_im_.resize(stage);
}

void TransformPlan::inverse(const double* cube_re, const double* cube_im,
                            double* grid_re, double* grid_im) const {
  const int S = S_, M = M_;
  const size_t SS = size_t(S) * S;
  const size_t MS = size_t(M) * S;

  // pass 1 (x): cube S*S*S -> s1 M*S*S
  double* a_re = s1_re_.data();
  double* a_im = s1_im_.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < M; ++j) {
    double* out_re = a_re + size_t(j) * SS;
    double* out_im = a_im + size_t(j) * SS;
    std::memset(out_re, 0, SS * sizeof(double));
    std::memset(out_im, 0, SS * sizeof(double));
    for (int ks = 0; ks < S; ++ks) {
      const double tr = inv_re_[size_t(j) * S + ks];
      const double ti = inv_im_[size_t(j) * S + ks];
      const double* in_re = cube_re + size_t(ks) * SS;
      const double* in_im = cube_im + size_t(ks) * SS;
      for (size_t p = 0; p < SS; ++p) {
        out_re[p] += tr * in_re[p] - ti * in_im[p];
        out_im[p] += tr * in_im[p] + ti * in_re[p];
      }
    }
  }

  // pass 2 (y): s1 M*S*S -> s2 M*M*S
  double* b_re = s2_re_.data();
  double* b_im = s2_im_.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < M; ++j) {
    double* out_re = b_re + size_t(j) * MS;
    double* out_im = b_im + size_t(j) * MS;
    std::memset(out_re, 0, MS * sizeof(double));
    std::memset(out_im, 0, MS * sizeof(double));
    const double* in_base_re = a_re + size_t(j) * SS;
    const double* in_base_im = a_im + size_t(j) * SS;
    for (int jy = 0; jy < M; ++jy) {
      double* row_re = out_re + size_t(jy) * S;
      double* row_im = out_im + size_t(jy) * S;
      for (int ks = 0; ks < S; ++ks) {
        const double tr = inv_re_[size_t(jy) * S + ks];
        const double ti = inv_im_[size_t(jy) * S + ks];
        const double* in_re = in_base_re + size_t(ks) * S;
        const double* in_im = in_base_im + size_t(ks) * S;
        for (int p = 0; p < S; ++p) {
          row_re[p] += tr * in_re[p] - ti * in_im[p];
          row_im[p] += tr * in_im[p] + ti * in_re[p];
        }
      }
    }
  }

  // pass 3 (z): s2 M*M*S -> grid M*M*M
#pragma omp parallel for schedule(static)
  for (long row = 0; row < long(M) * M; ++row) {
    const double* in_re = b_re + size_t(row) * S;
    const double* in_im = b_im + size_t(row) * S;
    double* out_re = grid_re + size_t(row) * M;
    double* out_im = grid_im + size_t(row) * M;
    for (int jz = 0; jz < M; ++jz) {
      double acc_re = 0.0, acc_im = 0.0;
      const double* t_re = inv_re_.data() + size_t(jz) * S;
      const double* t_im = inv_im_.data() + size_t(jz) * S;
      for (int ks = 0; ks < S; ++ks) {
        acc_re += t_re[ks] * in_re[ks] - t_im[ks] * in_im[ks];
        acc_im += t_re[ks] * in_im[ks] + t_im[ks] * in_re[ks];
      }
      out_re[jz] = acc_re;
      out_im[jz] = acc_im;
    }
  }
}

void TransformPlan::forward(const double* grid, double* cube_re, double* cube_im) const {
  const int S = S_, M = M_;
  const size_t SS = size_t(S) * S;
  const size_t MS = size_t(M) * S;

  // pass 1 (z): grid M*M*M (real) -> s1 M*M*S
  double* a_re = s1_re_.data();
  double* a_im = s1_im_.data();
#pragma omp parallel for schedule(static)
  for (long row = 0; row < long(M) * M; ++row) {
    const double* in = grid + size_t(row) * M;
    double* out_re = a_re + size_t(row) * S;
    double* out_im = a_im + size_t(row) * S;
    for (int ks = 0; ks < S; ++ks) {
      double acc_re = 0.0, acc_im = 0.0;
      const double* t_re = fwd_re_.data() + size_t(ks) * M;
      const double* t_im = fwd_im_.data() + size_t(ks) * M;
      for (int j = 0; j < M; ++j) {
        acc_re += t_re[j] * in[j];
        acc_im += t_im[j] * in[j];
      }
      out_re[ks] = acc_re;
      out_im[ks] = acc_im;
    }
  }

  // pass 2 (y): s1 M*M*S -> s2 M*S*S
  double* b_re = s2_re_.data();
  double* b_im = s2_im_.data();
#pragma omp parallel for schedule(static)
  for (int x = 0; x < M; ++x) {
    double* out_re = b_re + size_t(x) * SS;
    double* out_im = b_im + size_t(x) * SS;
    std::memset(out_re, 0, SS * sizeof(double));
    std::memset(out_im, 0, SS * sizeof(double));
    const double* in_base_re = a_re + size_t(x) * MS;
    const double* in_base_im = a_im + size_t(x) * MS;
    for (int ky = 0; ky < S; ++ky) {
      double* row_re = out_re + size_t(ky) * S;
      double* row_im = out_im + size_t(ky) * S;
      for (int j = 0; j < M; ++j) {
        const double tr = fwd_re_[size_t(ky) * M + j];
        const double ti = fwd_im_[size_t(ky) * M + j];
        const double* in_re = in_base_re + size_t(j) * S;
        const double* in_im = in_base_im + size_t(j) * S;
        for (int p = 0; p < S; ++p) {
          row_re[p] += tr * in_re[p] - ti * in_im[p];
          row_im[p] += tr * in_im[p] + ti * in_re[p];
        }
      }
    }
  }

  // pass 3 (x): s2 M*S*S -> cube S*S*S
#pragma omp parallel for schedule(static)
  for (int kx = 0; kx < S; ++kx) {
    double* out_re = cube_re + size_t(kx) * SS;
    double* out_im = cube_im + size_t(kx) * SS;
    std::memset(out_re, 0, SS * sizeof(double));
    std::memset(out_im, 0, SS * sizeof(double));
    for (int j = 0; j < M; ++j) {
      const double tr = fwd_re_[size_t(kx) * M + j];
      const double ti = fwd_im_[size_t(kx) * M + j];
      const double* in_re = b_re + size_t(j) * SS;
      const double* in_im = b_im + size_t(j) * SS;
      for (size_t p = 0; p < SS; ++p) {
        out_re[p] += tr * in_re[p] - ti * in_im[p];
        out_im[p] += tr * in_im[p] + ti * in_re[p];
      }
    }
  }
}

namespace detail {

void lattice_to_cube(const Lattice& lat, const std::vector<Cplx>& data, int comp,
                     double* cube_re, double* cube_im) {
  const int K = lat.K();
  const int S = 2 * K + 1;
  const size_t total = size_t(S) * S * S;
  std::memset(cube_re, 0, total * sizeof(double));
  std::memset(cube_im, 0, total * sizeof(double));
  for (int i = 0; i < lat.size(); ++i) {
    const Vec3i& k = lat.wavevector(i);
    const size_t idx = (size_t(k[0] + K) * S + size_t(k[1] + K)) * S + size_t(k[2] + K);
    const Cplx z = data[3 * size_t(i) + comp];
    cube_re[idx] = z.real();
    cube_im[idx] = z.imag();
  }
}

void cube_to_lattice(const Lattice& lat, const double* cube_re, const double* cube_im,
                     int comp, std::vector<Cplx>& data) {
  const int K = lat.K();
  const int S = 2 * K + 1;
  for (int i = 0; i < lat.size(); ++i) {
    const Vec3i& k = lat.wavevector(i);
    const size_t idx = (size_t(k[0] + K) * S + size_t(k[1] + K)) * S + size_t(k[2] + K);
    data[3 * size_t(i) + comp] = Cplx(cube_re[idx], cube_im[idx]);
  }
}

double imag_residue_rel(const std::vector<double>& re, const std::vector<double>& im) {
  double max_re = 0.0, max_im = 0.0;
  for (double v : re) max_re = std::max(max_re, std::abs(v));
  for (double v : im) max_im = std::max(max_im, std::abs(v));
  if (max_re == 0.0) return max_im == 0.0 ? 0.0 : HUGE_VAL;
  return max_im / max_re;
}

}  // namespace detail

PhysicalField to_physical(const SpectralField& u, int M) {
  const Lattice& lat = u.lattice();
  if (M < 2 * lat.K() + 1)
    throw std::invalid_argument("to_physical: grid must have M >= 2K+1 points per axis");
  TransformPlan plan(lat.K(), M);
  const int S = plan.side();
  const size_t cube_n = size_t(S) * S * S;
  const size_t grid_n = size_t(M) * M * M;
  std::vector<double> cr(cube_n), ci(cube_n), gr(grid_n), gi(grid_n);

  PhysicalField out;
  out.M = M;
  out.L = lat.L();
  for (int c = 0; c < 3; ++c) {
    detail::lattice_to_cube(lat, u.raw(), c, cr.data(), ci.data());
    plan.inverse(cr.data(), ci.data(), gr.data(), gi.data());
    if (detail::imag_residue_rel(gr, gi) > 1e-12)
      throw std::logic_error("to_physical: imaginary residue exceeds 1e-12 relative");
    out.comp[c] = gr;
  }
  return out;
}

SpectralField from_physical(const PhysicalField& phys, LatticePtr lat) {
  const int M = phys.M;
  if (M < 2 * lat->K() + 1)
    throw std::invalid_argument("from_physical: grid must have M >= 2K+1 points per axis");
  if (phys.L != lat->L())
    throw std::invalid_argument("from_physical: box lengths differ");
  TransformPlan plan(lat->K(), M);
  const int S = plan.side();
  const size_t cube_n = size_t(S) * S * S;
  std::vector<double> cr(cube_n), ci(cube_n);
  std::vector<Cplx> data(3 * size_t(lat->size()));
  for (int c = 0; c < 3; ++c) {
    plan.forward(phys.comp[c].data(), cr.data(), ci.data());
    detail::cube_to_lattice(*lat, cr.data(), ci.data(), c, data);
  }
  detail::symmetrize_modes(*lat, data);
  if (detail::mode_divergence_rel_max(*lat, data) > 1e-12)
    throw std::invalid_argument("from_physical: samples are not divergence-free");
  return SpectralField::unchecked(std::move(lat), std::move(data));
}

PhysicalField to_physical_reference(const SpectralField& u, int M) {
  const Lattice& lat = u.lattice();
  if (M < 2 * lat.K() + 1)
    throw std::invalid_argument("to_physical_reference: grid too small");
  PhysicalField out;
  out.M = M;
  out.L = lat.L();
  for (int c = 0; c < 3; ++c) out.comp[c].assign(size_t(M) * M * M, 0.0);

  for (int x = 0; x < M; ++x)
    for (int y = 0; y < M; ++y)
      for (int z = 0; z < M; ++z) {
        const size_t g = (size_t(x) * M + y) * M + z;
        double acc[3] = {0.0, 0.0, 0.0};
        for (int i = 0; i < lat.size(); ++i) {
          const Vec3i& k = lat.wavevector(i);
          const double frac =
              double(k[0]) * x / M + double(k[1]) * y / M + double(k[2]) * z / M;
          const double ang = twopi() * frac;
          const double cr = std::cos(ang), si = std::sin(ang);
          for (int c = 0; c < 3; ++c) {
            const Cplx z0 = u.mode(i)[c];
            acc[c] += z0.real() * cr - z0.imag() * si;
          }
        }
        for (int c = 0; c < 3; ++c) out.comp[c][g] = acc[c];
      }
  return out;
}

SpectralField from_physical_reference(const PhysicalField& phys, LatticePtr lat) {
  const int M = phys.M;
  if (M < 2 * lat->K() + 1)
    throw std::invalid_argument("from_physical_reference: grid too small");
  std::vector<Cplx> data(3 * size_t(lat->size()), Cplx(0, 0));
  const double scale = 1.0 / (double(M) * M * M);
  for (int i = 0; i < lat->size(); ++i) {
    const Vec3i& k = lat->wavevector(i);
    double acc_re[3] = {0, 0, 0}, acc_im[3] = {0, 0, 0};
    for (int x = 0; x < M; ++x)
      for (int y = 0; y < M; ++y)
        for (int z = 0; z < M; ++z) {
          const size_t g = (size_t(x) * M + y) * M + z;
          const double frac =
              double(k[0]) * x / M + double(k[1]) * y / M + double(k[2]) * z / M;
          const double ang = -twopi() * frac;
          const double cr = std::cos(ang), si = std::sin(ang);
          for (int c = 0; c < 3; ++c) {
            acc_re[c] += phys.comp[c][g] * cr;
            acc_im[c] += phys.comp[c][g] * si;
          }
        }
    for (int c = 0; c < 3; ++c)
      data[3 * size_t(i) + c] = Cplx(acc_re[c] * scale, acc_im[c] * scale);
  }
  detail::symmetrize_modes(*lat, data);
  return SpectralField::unchecked(std::move(lat), std::move(data));
}

}  // namespace nscert
