#include "oamproca/proca.hpp"

#include <cmath>

namespace oamproca::proca {

namespace {
constexpr double kPi4 = 4.0 * std::numbers::pi;

MassResult finish(double mu_sq, FormulaId id, const ProcaInputs& in) {
  MassResult r;
  r.mu_sq = mu_sq;
  if (mu_sq >= 0) r.mu = std::sqrt(mu_sq);
  r.formula_id = id;
  r.in_regime = in.in_regime();
  return r;
}
}  // namespace

std::string to_string(FormulaId id) {
  switch (id) {
    case FormulaId::EQ1: return "EQ1";
    case FormulaId::EQ2: return "EQ2";
    case FormulaId::EQ11: return "EQ11";
    case FormulaId::EQ12: return "EQ12";
  }
  return "?";
}

MassResult mu_sq_eq2(const ProcaInputs& in) {
  in.validate();
  const double d = in.denom();
  if (d == 0) throw SingularInput("mu_sq_eq2: singular denominator E + grad_phi_par = 0");
  const double wp2 = in.profile.omega_p0_sq() * (1.0 + in.eta());
  const double mu_sq =
      (in.E_amp / d) * wp2 -
      (1.0 / d) * (kPi4 * in.delta_v_dot * in.density() - kPi4 * in.box_grad_phi_par);
  return finish(mu_sq, FormulaId::EQ2, in);
}

MassResult mu_eq1(const ProcaInputs& in) {
  in.validate();
  const double d = in.denom();
  if (d == 0) throw SingularInput("mu_eq1: singular denominator 1 + grad_phi_par/E = 0");
  const double pref = 1.0 / (1.0 + in.grad_phi_par / in.E_amp);
  const double radicand = in.profile.plasma_freq_sq(in.at.r, in.at.phi, in.at.z) -
                          kPi4 * (in.density() * in.delta_v_dot - in.box_grad_phi_par) /
                              in.E_amp;
  MassResult r;
  r.formula_id = FormulaId::EQ1;
  r.in_regime = in.in_regime();
  r.mu_sq = pref * pref * radicand;
  if (radicand >= 0) r.mu = pref * std::sqrt(radicand);
  return r;
}

double a_factor(const ProcaInputs& in) {
  in.validate();
  const double d = in.denom();
  const double one_eta = 1.0 + in.eta();
  if (!(d > 0)) throw SingularInput("a_factor: E + grad_phi_par must be > 0");
  if (!(one_eta > 0)) throw SingularInput("a_factor: 1 + eta must be > 0");
  return std::sqrt(in.E_amp * one_eta / d);
}

namespace {
// n0 + ntilde*f at the evaluation point; equals n(r) for any profile.
double n_of_point(const ProcaInputs& in) { return in.density(); }
}  // namespace

MassResult mu_eq11(const ProcaInputs& in) {
  const double a = a_factor(in);
  const double wp0 = in.profile.omega_p0();
  const double radicand =
      1.0 - (kPi4 * in.delta_v_dot / in.denom()) *
                (n_of_point(in) / (in.profile.omega_p0_sq() * a * a));
  MassResult r;
  r.formula_id = FormulaId::EQ11;
  r.in_regime = in.in_regime();
  r.mu_sq = wp0 * wp0 * a * a * radicand;
  if (radicand >= 0) r.mu = wp0 * a * std::sqrt(radicand);
  return r;
}

MassResult mu_eq12(const ProcaInputs& in) {
  const double a = a_factor(in);
  const double d = in.denom();
  const double den = in.profile.omega_p0() * a * d + kPi4 * in.delta_v_dot * n_of_point(in);
  if (!(den > 0)) throw SingularInput("mu_eq12: non-positive denominator");
  MassResult r;
  r.formula_id = FormulaId::EQ12;
  r.in_regime = in.in_regime();
  const double mu = d / den;
  r.mu_sq = mu * mu;
  r.mu = mu;
  return r;
}

double sigma_extract(double mu, double m_star) {
  if (!(mu > 0)) throw SingularInput("sigma_extract: mu must be > 0");
  if (!(m_star > 0)) throw std::invalid_argument("sigma_extract: m_star must be > 0");
  return m_star / mu - 0.5;
}

PositivityCheck positivity_check(const ProcaInputs& in) {
  in.validate();
  PositivityCheck c;
  c.lhs = in.E_amp * in.profile.omega_p0_sq() * (1.0 + in.eta()) +
          kPi4 * in.box_grad_phi_par;
  c.rhs = kPi4 * in.delta_v_dot * in.density();
  c.holds = c.lhs > c.rhs;
  return c;
}

double eq1_eq2_discrepancy(const ProcaInputs& in) {
  const MassResult m2 = mu_sq_eq2(in);
  const MassResult m1 = mu_eq1(in);
  if (m2.mu_sq == 0) throw SingularInput("eq1_eq2_discrepancy: mu_sq_eq2 is zero");
  return std::abs(m1.mu_sq - m2.mu_sq) / std::abs(m2.mu_sq);
}

}  // namespace oamproca::proca
