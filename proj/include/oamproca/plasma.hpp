#ifndef OAMPROCA_PLASMA_HPP
#define OAMPROCA_PLASMA_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oamproca::plasma {

/// One helicoidal density perturbation term n_tilde*cos(ell0*phi + q0*z + phase).
struct HelicalTerm {
  double n_tilde = 0;  // amplitude, density units, >= 0
  int ell0 = 0;        // helical winding number
  double q0 = 0;       // helix step, inverse length
  double phase = 0;    // offset, radians; 0 reproduces the bare helix
};

/// Unperturbed density plus a superposition of helicoidal perturbations.
/// Natural units with m_e = 1, so omega_p0^2 = 4*pi*n0.
struct PlasmaProfile {
  double n0 = 0;
  std::vector<HelicalTerm> terms;

  /// Throws std::invalid_argument if n0 <= 0, any n_tilde < 0, or the
  /// summed amplitudes reach n0 (density would touch zero somewhere).
  void validate() const {
    if (!(n0 > 0)) throw std::invalid_argument("PlasmaProfile: n0 must be > 0");
    double total = 0;
    for (const auto& t : terms) {
      if (t.n_tilde < 0)
        throw std::invalid_argument("PlasmaProfile: n_tilde must be >= 0");
      total += t.n_tilde;
    }
    if (total >= n0)
      throw std::invalid_argument("perturbation exceeds density");
  }

  bool homogeneous() const { return terms.empty(); }

  double total_tilde() const {
    double s = 0;
    for (const auto& t : terms) s += t.n_tilde;
    return s;
  }

  double omega_p0_sq() const { return 4.0 * std::numbers::pi * n0; }
  double omega_p0() const { return std::sqrt(omega_p0_sq()); }

  /// Relative perturbation eta = sum_i (n_tilde_i/n0) cos(ell_i phi + q_i z + phase_i).
  /// The printed perturbation carries no r dependence; r is accepted for
  /// interface uniformity and ignored.
  double eta(double /*r*/, double phi, double z) const {
    double s = 0;
    for (const auto& t : terms)
      s += (t.n_tilde / n0) * std::cos(t.ell0 * phi + t.q0 * z + t.phase);
    return s;
  }

  /// omega_p^2(x) = omega_p0^2 (1 + eta)
  double plasma_freq_sq(double r, double phi, double z) const {
    return omega_p0_sq() * (1.0 + eta(r, phi, z));
  }

  /// Electron density n(r) = n0 (1 + eta).
  double density(double r, double phi, double z) const {
    return n0 * (1.0 + eta(r, phi, z));
  }

  /// Amplitude-normalized superposition f with sum of weights 1, so that
  /// total_tilde()*f equals the absolute density perturbation.
  double f_general(double phi, double z) const {
    if (terms.empty())
      throw std::invalid_argument("f_general: empty perturbation list");
    const double total = total_tilde();
    if (total == 0) return 0;
    double s = 0;
    for (const auto& t : terms)
      s += (t.n_tilde / total) * std::cos(t.ell0 * phi + t.q0 * z + t.phase);
    return s;
  }
};

}  // namespace oamproca::plasma

#endif
