#include "oamproca/dispersion.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <stdexcept>

#include "oamproca/rs_field.hpp"  // fft_wavenumber

namespace oamproca::dispersion {

using rs::fft_wavenumber;
using cplx = std::complex<double>;

namespace {

void fft1(std::vector<cplx>& data, int sign) {
  fftw_complex* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, sign,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  if (sign == FFTW_BACKWARD) {
    const double norm = 1.0 / static_cast<double>(data.size());
    for (auto& c : data) c *= norm;
  }
}

std::vector<cplx> to_complex(const std::vector<double>& v) {
  std::vector<cplx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// -d2/dz2 u, spectral.
std::vector<double> neg_laplacian(const ScalarWaveState& s) {
  std::vector<cplx> hat = to_complex(s.u);
  fft1(hat, FFTW_FORWARD);
  for (int i = 0; i < s.n; ++i) {
    const double k = fft_wavenumber(i, s.n, s.length);
    hat[i] *= k * k;
  }
  fft1(hat, FFTW_BACKWARD);
  std::vector<double> out(s.u.size());
  for (int i = 0; i < s.n; ++i) out[i] = hat[i].real();
  return out;
}

}  // namespace

void ScalarWaveState::validate() const {
  if (n < 4) throw std::invalid_argument("ScalarWaveState: n must be >= 4");
  if (!(length > 0)) throw std::invalid_argument("ScalarWaveState: length must be > 0");
  if (u.size() != static_cast<std::size_t>(n) || udot.size() != u.size())
    throw std::invalid_argument("ScalarWaveState: field size mismatch");
  if (profile.n0 > 0) profile.validate();
}

ScalarWaveState make_state(int n, double length, const PlasmaProfile& profile,
                           const std::vector<int>& modes) {
  ScalarWaveState s;
  s.n = n;
  s.length = length;
  s.profile = profile;
  s.u.assign(n, 0.0);
  s.udot.assign(n, 0.0);
  for (int m : modes)
    for (int i = 0; i < n; ++i)
      s.u[i] += std::cos(2.0 * std::numbers::pi * m * i / n);
  s.validate();
  return s;
}

double scalar_energy(const ScalarWaveState& s) {
  s.validate();
  std::vector<cplx> hat = to_complex(s.u);
  fft1(hat, FFTW_FORWARD);
  for (int i = 0; i < s.n; ++i)
    hat[i] *= cplx(0, fft_wavenumber(i, s.n, s.length));
  fft1(hat, FFTW_BACKWARD);
  double e = 0;
  for (int i = 0; i < s.n; ++i) {
    const double grad = hat[i].real();
    e += s.udot[i] * s.udot[i] + grad * grad + s.freq_sq_at(i) * s.u[i] * s.u[i];
  }
  return 0.5 * e * s.dz();
}

ScalarWaveState evolve_scalar(const ScalarWaveState& s, double dt, long steps) {
  s.validate();
  if (!(dt > 0)) throw std::invalid_argument("evolve_scalar: dt must be > 0");
  if (steps < 0) throw std::invalid_argument("evolve_scalar: steps must be >= 0");
  ScalarWaveState out = s;
  if (steps == 0) return out;

  if (s.profile.homogeneous() || s.profile.n0 == 0) {
    // Exact per-mode rotation at omega = sqrt(k^2 + wp0^2).
    const double t = dt * static_cast<double>(steps);
    const double wp2 = s.profile.n0 > 0 ? s.profile.omega_p0_sq() : 0.0;
    std::vector<cplx> uh = to_complex(s.u), vh = to_complex(s.udot);
    fft1(uh, FFTW_FORWARD);
    fft1(vh, FFTW_FORWARD);
    for (int i = 0; i < s.n; ++i) {
      const double k = fft_wavenumber(i, s.n, s.length);
      const double w = std::sqrt(k * k + wp2);
      if (w == 0) {
        uh[i] += t * vh[i];
        continue;
      }
      const double c = std::cos(w * t), sn = std::sin(w * t);
      const cplx u0 = uh[i], v0 = vh[i];
      uh[i] = c * u0 + (sn / w) * v0;
      vh[i] = -w * sn * u0 + c * v0;
    }
    fft1(uh, FFTW_BACKWARD);
    fft1(vh, FFTW_BACKWARD);
    for (int i = 0; i < s.n; ++i) {
      out.u[i] = uh[i].real();
      out.udot[i] = vh[i].real();
    }
    out.time = s.time + t;
    return out;
  }

  // Velocity-Verlet with spectral Laplacian. Stability rule dt <= 0.5 dz.
  if (dt > 0.5 * s.dz())
    throw std::invalid_argument("evolve_scalar: unstable dt (need dt <= 0.5 dz)");
  std::vector<double> wp2(s.n);
  for (int i = 0; i < s.n; ++i) wp2[i] = s.freq_sq_at(i);
  auto accel = [&](const ScalarWaveState& st) {
    std::vector<double> a = neg_laplacian(st);
    for (int i = 0; i < st.n; ++i) a[i] = -a[i] - wp2[i] * st.u[i];
    return a;
  };
  std::vector<double> a = accel(out);
  for (long step = 0; step < steps; ++step) {
    for (int i = 0; i < out.n; ++i)
      out.u[i] += dt * out.udot[i] + 0.5 * dt * dt * a[i];
    const std::vector<double> a_new = accel(out);
    for (int i = 0; i < out.n; ++i) out.udot[i] += 0.5 * dt * (a[i] + a_new[i]);
    a = a_new;
  }
  out.time = s.time + dt * static_cast<double>(steps);
  return out;
}

std::vector<DispersionSample> measure_dispersion(
    const std::vector<ScalarWaveState>& history) {
  if (history.size() < 64)
    throw std::invalid_argument("measure_dispersion: need >= 64 snapshots");
  const int nt = static_cast<int>(history.size());
  const int n = history.front().n;
  const double length = history.front().length;
  const double cadence = history[1].time - history[0].time;
  if (!(cadence > 0))
    throw std::invalid_argument("measure_dispersion: non-increasing snapshot times");
  for (int t = 0; t < nt; ++t) {
    const auto& st = history[t];
    if (st.n != n || st.length != length)
      throw std::invalid_argument("measure_dispersion: inconsistent grids");
    if (std::abs(st.time - (history[0].time + t * cadence)) > 1e-9 * cadence * nt)
      throw std::invalid_argument("measure_dispersion: non-uniform cadence");
  }

  // Spatial spectrum of every snapshot; modes m = 0..n/2 (real field).
  const int nm = n / 2 + 1;
  std::vector<std::vector<cplx>> series(nm, std::vector<cplx>(nt));
  std::vector<double> mean_power(nm, 0.0);
  for (int t = 0; t < nt; ++t) {
    std::vector<cplx> hat = to_complex(history[t].u);
    fft1(hat, FFTW_FORWARD);
    for (int m = 0; m < nm; ++m) {
      series[m][t] = hat[m];
      mean_power[m] += std::norm(hat[m]);
    }
  }
  const double max_power = *std::max_element(mean_power.begin(), mean_power.end());
  std::vector<DispersionSample> out;
  if (max_power == 0) return out;

  for (int m = 0; m < nm; ++m) {
    if (mean_power[m] < 1e-8 * max_power) continue;
    std::vector<cplx> ts(nt);
    for (int t = 0; t < nt; ++t) {
      const double w = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * t / nt));
      ts[t] = series[m][t] * w;
    }
    fft1(ts, FFTW_FORWARD);
    // Ridge over the non-negative frequency half.
    int peak = 0;
    double best = -1;
    for (int j = 0; j <= nt / 2; ++j)
      if (std::norm(ts[j]) > best) {
        best = std::norm(ts[j]);
        peak = j;
      }
    double delta = 0;
    if (peak > 0 && peak < nt / 2) {
      const double lm = std::abs(ts[peak - 1]), l0 = std::abs(ts[peak]),
                   lp = std::abs(ts[peak + 1]);
      if (lm > 0 && l0 > 0 && lp > 0) {
        const double a = std::log(lm), b = std::log(l0), c = std::log(lp);
        const double den = a - 2 * b + c;
        if (den < 0) delta = std::clamp(0.5 * (a - c) / den, -0.5, 0.5);
      }
    }
    DispersionSample smp;
    smp.k = 2.0 * std::numbers::pi * m / length;
    smp.omega = 2.0 * std::numbers::pi * (peak + delta) / (cadence * nt);
    smp.power = best;
    out.push_back(smp);
  }
  return out;
}

MassFit effective_mass_fit(const std::vector<DispersionSample>& samples) {
  std::vector<double> ks;
  for (const auto& s : samples) ks.push_back(s.k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-12; }),
           ks.end());
  if (samples.size() < 3 || ks.size() < 3)
    throw std::invalid_argument("effective_mass_fit: degenerate sample set");
  const int n = static_cast<int>(samples.size());
  double mean = 0;
  for (const auto& s : samples) mean += s.omega * s.omega - s.k * s.k;
  mean /= n;
  double var = 0;
  for (const auto& s : samples) {
    const double d = s.omega * s.omega - s.k * s.k - mean;
    var += d * d;
  }
  var /= (n - 1);
  MassFit fit;
  fit.mu_sq_fit = mean;
  fit.stderr_ = std::sqrt(var / n);
  fit.n_samples = n;
  return fit;
}

ModeCouplingMatrix mode_coupling_matrix(const PlasmaProfile& profile, int ell_min,
                                        int ell_max, double k_center, int radial_cut) {
  profile.validate();
  if (radial_cut != 1)
    throw std::invalid_argument("mode_coupling_matrix: radial_cut must be 1");
  if (ell_max - ell_min + 1 < 3)
    throw std::invalid_argument("mode_coupling_matrix: ell_range too small");

  // Closure of the start mode under the selection-rule shifts
  // (ell, k_z) -> (ell +- ell0, k_z -+ q0), ell confined to the range.
  const int ell_start =
      (ell_min <= 0 && 0 <= ell_max) ? 0 : (ell_min + ell_max) / 2;
  const int max_depth = ell_max - ell_min;
  using Mode = ModeCouplingMatrix::Mode;
  auto key = [](int ell, double k) {
    return std::pair<int, long long>(ell, std::llround(k * 1e9));
  };
  std::vector<Mode> basis{{ell_start, k_center}};
  std::vector<std::pair<int, long long>> seen{key(ell_start, k_center)};
  std::deque<std::pair<Mode, int>> queue{{basis[0], 0}};
  while (!queue.empty()) {
    auto [mode, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    for (const auto& t : profile.terms) {
      const Mode nbrs[2] = {{mode.ell + t.ell0, mode.k_z - t.q0},
                            {mode.ell - t.ell0, mode.k_z + t.q0}};
      for (const Mode& nb : nbrs) {
        if (nb.ell < ell_min || nb.ell > ell_max) continue;
        if (std::find(seen.begin(), seen.end(), key(nb.ell, nb.k_z)) != seen.end())
          continue;
        seen.push_back(key(nb.ell, nb.k_z));
        basis.push_back(nb);
        queue.emplace_back(nb, depth + 1);
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [](const Mode& a, const Mode& b) {
    return a.ell != b.ell ? a.ell < b.ell : a.k_z < b.k_z;
  });

  const int nb = static_cast<int>(basis.size());
  const double wp0_sq = profile.omega_p0_sq();
  ModeCouplingMatrix m;
  m.basis = basis;
  m.profile = profile;
  m.entries = Eigen::MatrixXcd::Zero(nb, nb);
  using namespace std::complex_literals;
  for (int i = 0; i < nb; ++i) {
    m.entries(i, i) += basis[i].k_z * basis[i].k_z + wp0_sq;
    for (int j = 0; j < nb; ++j) {
      for (const auto& t : profile.terms) {
        const double g = wp0_sq * t.n_tilde / (2.0 * profile.n0);
        if (basis[i].ell - basis[j].ell == t.ell0 &&
            std::abs(basis[i].k_z - basis[j].k_z + t.q0) < 1e-9)
          m.entries(i, j) += g * std::exp(1i * t.phase);
        if (basis[i].ell - basis[j].ell == -t.ell0 &&
            std::abs(basis[i].k_z - basis[j].k_z - t.q0) < 1e-9)
          m.entries(i, j) += g * std::exp(-1i * t.phase);
      }
    }
  }
  return m;
}

std::vector<EffectiveMass> effective_mass_spectrum(const ModeCouplingMatrix& m) {
  const Eigen::MatrixXcd& a = m.entries;
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("effective_mass_spectrum: non-Hermitean input");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  std::vector<EffectiveMass> out;
  for (int i = 0; i < a.rows(); ++i) {
    Eigen::Index dom = 0;
    es.eigenvectors().col(i).cwiseAbs().maxCoeff(&dom);
    EffectiveMass em;
    em.mode = m.basis[static_cast<std::size_t>(dom)];
    em.mu_sq_eff = es.eigenvalues()(i) - em.mode.k_z * em.mode.k_z;
    em.negative = em.mu_sq_eff < 0;
    out.push_back(em);
  }
  return out;
}

}  // namespace oamproca::dispersion
