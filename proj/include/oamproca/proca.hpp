#ifndef OAMPROCA_PROCA_HPP
#define OAMPROCA_PROCA_HPP

#include <optional>
#include <string>

#include "oamproca/plasma.hpp"

namespace oamproca::proca {

using plasma::PlasmaProfile;

/// Singular denominators and non-positive mass arguments in the closed-form
/// expressions. Distinguished from std::invalid_argument so the CLI can map
/// it to its own exit code.
struct SingularInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalPoint {
  double r = 0, phi = 0, z = 0;
};

/// Scalar inputs of the closed-form mass expressions. grad_phi_par is the
/// projection of grad(Phi) on the electron velocity direction;
/// box_grad_phi_par carries the d'Alembertian term v.box(grad Phi) as one
/// user-supplied scalar (|v| absorbed).
struct ProcaInputs {
  double E_amp = 1.0;
  double grad_phi_par = 0.0;
  double delta_v_dot = 0.0;      // |d_t v| >= 0
  double box_grad_phi_par = 0.0;
  PlasmaProfile profile;
  EvalPoint at;

  void validate() const {
    if (!(E_amp > 0)) throw std::invalid_argument("ProcaInputs: E_amp must be > 0");
    if (delta_v_dot < 0)
      throw std::invalid_argument("ProcaInputs: delta_v_dot must be >= 0");
    profile.validate();
  }

  double denom() const { return E_amp + grad_phi_par; }
  double eta() const { return profile.eta(at.r, at.phi, at.z); }
  double density() const { return profile.density(at.r, at.phi, at.z); }

  /// Small-perturbation regime marker used by the property suites.
  bool in_regime() const {
    const double pi4 = 4.0 * std::numbers::pi;
    return std::abs(delta_v_dot) * pi4 * density() <=
           0.5 * E_amp * profile.omega_p0_sq();
  }
};

enum class FormulaId { EQ1, EQ2, EQ11, EQ12 };

std::string to_string(FormulaId id);

struct MassResult {
  double mu_sq = 0;
  std::optional<double> mu;  // defined iff mu_sq >= 0
  FormulaId formula_id = FormulaId::EQ2;
  bool in_regime = false;
};

/// Canonical squared mass:
///   mu^2 = E/(E+g) * wp0^2 (1+eta) - 1/(E+g) * (4 pi dv n(r) - 4 pi box)
/// Throws SingularInput when E + g == 0.
MassResult mu_sq_eq2(const ProcaInputs& in);

/// The linear-prefactor variant, kept as a separate diagnostic:
///   mu = 1/(1+g/E) * sqrt(wp^2(x) - 4 pi (n(r) dv - box)/E)
/// A negative radicand yields an undefined mu with mu_sq set from
/// prefactor^2 * radicand.
MassResult mu_eq1(const ProcaInputs& in);

/// Characteristic-scale factor A = sqrt(E (1+eta) / (E+g)); chosen so the
/// scale form below reproduces mu_sq_eq2 with the box term dropped.
double a_factor(const ProcaInputs& in);

/// mu = wp0 A sqrt(1 - 4 pi dv/(E+g) * (n0 + ntilde f)/(wp0^2 A^2))
MassResult mu_eq11(const ProcaInputs& in);

/// mu = (E+g) / (wp0 A (E+g) + 4 pi dv (n0 + ntilde f)), verbatim.
MassResult mu_eq12(const ProcaInputs& in);

/// Inverts mu = m*/(Sigma + 1/2): Sigma = m*/mu - 1/2. Throws on mu <= 0.
double sigma_extract(double mu, double m_star);

struct PositivityCheck {
  bool holds = false;
  double lhs = 0;  // E wp0^2 (1+eta) + 4 pi box
  double rhs = 0;  // 4 pi dv n(r)
};

/// The positivity inequality on the squared-mass numerator; for E+g > 0,
/// holds iff mu_sq_eq2 > 0.
PositivityCheck positivity_check(const ProcaInputs& in);

/// |mu_eq1^2 - mu_sq_eq2| / |mu_sq_eq2|; zero exactly when g = 0.
double eq1_eq2_discrepancy(const ProcaInputs& in);

}  // namespace oamproca::proca

#endif
