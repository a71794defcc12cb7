#ifndef OAMPROCA_DISPERSION_HPP
#define OAMPROCA_DISPERSION_HPP

#include <Eigen/Dense>
#include <vector>

#include "oamproca/plasma.hpp"

namespace oamproca::dispersion {

using plasma::PlasmaProfile;

/// Scalar wave u(z,t) obeying  d2u/dt2 = d2u/dz2 - wp^2(z) u  on a periodic
/// 1D grid along the propagation axis; the profile is sampled at r = 0,
/// phi = 0. Mass enters the dispersion relation exactly as for each Proca
/// polarization, which is what the propagator is built to measure.
struct ScalarWaveState {
  int n = 0;          // grid points
  double length = 0;  // periodic box length along z
  std::vector<double> u, udot;
  PlasmaProfile profile;
  double time = 0;

  void validate() const;
  double dz() const { return length / n; }
  /// wp^2 at grid point i (r = 0, phi = 0).
  double freq_sq_at(int i) const {
    return profile.n0 > 0 ? profile.plasma_freq_sq(0.0, 0.0, i * dz()) : 0.0;
  }
};

/// Initial standing-wave excitation: u = sum_m cos(2 pi m z / L), udot = 0.
ScalarWaveState make_state(int n, double length, const PlasmaProfile& profile,
                           const std::vector<int>& modes);

/// Total energy (1/2) sum (udot^2 + (du/dz)^2 + wp^2 u^2) dz, gradient
/// evaluated spectrally.
double scalar_energy(const ScalarWaveState& s);

/// Homogeneous profile: exact per-Fourier-mode rotation, no step-size bound.
/// Inhomogeneous: velocity-Verlet with spectral Laplacian; requires
/// dt <= 0.5 dz (throws otherwise).
ScalarWaveState evolve_scalar(const ScalarWaveState& s, double dt, long steps);

struct DispersionSample {
  double k = 0;
  double omega = 0;
  double power = 0;
};

/// Space-time DFT of >= 64 uniformly spaced snapshots; one ridge frequency
/// per excited spatial mode (Hann window, log-parabolic peak refinement).
/// Frequency resolution is 2 pi / (total time).
std::vector<DispersionSample> measure_dispersion(const std::vector<ScalarWaveState>& history);

struct MassFit {
  double mu_sq_fit = 0;
  double stderr_ = 0;
  int n_samples = 0;
};

/// Least squares of omega^2 = k^2 + mu^2 with the slope pinned at one;
/// needs >= 3 samples with distinct k.
MassFit effective_mass_fit(const std::vector<DispersionSample>& samples);

/// Coupled-mode operator of the scalar wave equation in the basis
/// exp(i(ell phi + k_z z)): diagonal k_z^2 + wp0^2, off-diagonal
/// wp0^2 ntilde/(2 n0) linking (ell, k_z) <-> (ell + ell0, k_z - q0)
/// per perturbation term.
struct ModeCouplingMatrix {
  struct Mode {
    int ell = 0;
    double k_z = 0;
  };
  std::vector<Mode> basis;
  Eigen::MatrixXcd entries;
  PlasmaProfile profile;
};

/// radial_cut is reserved and must be 1 (single radial cell, matching the
/// r-independent perturbation).
ModeCouplingMatrix mode_coupling_matrix(const PlasmaProfile& profile, int ell_min,
                                        int ell_max, double k_center, int radial_cut = 1);

struct EffectiveMass {
  ModeCouplingMatrix::Mode mode;  // dominant basis mode of the eigenvector
  double mu_sq_eff = 0;           // eigenvalue - k_z(dominant)^2
  bool negative = false;
};

std::vector<EffectiveMass> effective_mass_spectrum(const ModeCouplingMatrix& m);

}  // namespace oamproca::dispersion

#endif
