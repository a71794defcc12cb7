// End-to-end acceptance suite: one line per criterion, nonzero exit on any
// failure. Tolerances are stated inline next to each check.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oamproca/algebra.hpp"
#include "oamproca/dispersion.hpp"
#include "oamproca/proca.hpp"
#include "oamproca/rs_field.hpp"
#include "oamproca/tower.hpp"
#include "oracles.hpp"

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// ---------------------------------------------------------------- criterion 1
void c1_algebra() {
  const double t0 = now_seconds();
  const auto report_rows = oamproca::algebra::verify_algebra(
      oamproca::algebra::build_generators());
  bool ok = report_rows.size() == 15;
  double max_defect = 0;
  for (const auto& c : report_rows) {
    ok = ok && c.pass;
    max_defect = std::max(max_defect, c.max_defect);
  }
  ok = ok && max_defect == 0.0;
  const double dt = now_seconds() - t0;
  ok = ok && dt < 1.0;
  std::ostringstream d;
  d << "15 identities, max defect " << max_defect << ", " << dt << " s";
  report(1, "generator commutation relations exact", ok, d.str());
}

// ---------------------------------------------------------------- criterion 2
void c2_spectrum() {
  using namespace oamproca::algebra;
  const double t0 = now_seconds();
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Wavevector k;
    do {
      k.p << u(rng), u(rng), u(rng);
    } while (k.p.norm() < 0.1);
    for (int sign : {+1, -1}) {
      const Eigen::Matrix3cd h = photon_hamiltonian(k, sign);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(h);
      const double p = k.p.norm();
      worst = std::max(worst, std::abs(es.eigenvalues()(0) + p));
      worst = std::max(worst, std::abs(es.eigenvalues()(1)));
      worst = std::max(worst, std::abs(es.eigenvalues()(2) - p));
    }
  }
  const double dt = now_seconds() - t0;
  const bool ok = worst <= 1e-12 && dt < 1.0;
  std::ostringstream d;
  d << "100 wavevectors, max |defect| " << worst << ", " << dt << " s";
  report(2, "photon Hamiltonian spectrum {+|p|, -|p|, 0}", ok, d.str());
}

// ---------------------------------------------------------------- criterion 3
void c3_rs_evolution() {
  using oamproca::rs::Grid3;
  using oamproca::rs::RSField;
  const Grid3 grid{8, 8, 8, 2 * std::numbers::pi, 2 * std::numbers::pi,
                   2 * std::numbers::pi};
  RSField f = RSField::plane_wave(grid, {{1.0, 0.0, 2.0}}, {0.6, 0.2}, +1);
  f += RSField::plane_wave(grid, {{0.0, 1.0, 1.0}}, 0.4, +1);
  const double e0 = f.energy();
  const double d0 = f.divergence_defect();
  RSField g = f;
  for (int i = 0; i < 1000; ++i) g = g.evolve(0.02, 1);
  const double energy_drift = std::abs(g.energy() - e0) / e0;
  const double div_defect = g.divergence_defect();
  const bool ok = energy_drift <= 1e-10 && div_defect <= std::max(d0, 1e-10);
  std::ostringstream d;
  d << "energy drift " << energy_drift << ", divergence defect " << div_defect;
  report(3, "field evolution conserves energy and transversality", ok, d.str());
}

// ---------------------------------------------------------------- criterion 4
void c4_unperturbed() {
  using namespace oamproca::proca;
  ProcaInputs in;
  in.E_amp = 1.0;
  in.profile.n0 = 0.05;
  const double wp0 = in.profile.omega_p0();
  double worst = 0;
  for (const MassResult& r : {mu_eq1(in), mu_sq_eq2(in), mu_eq11(in)})
    worst = std::max(worst, std::abs(*r.mu - wp0));
  const bool ok = worst <= 1e-14 * wp0;
  std::ostringstream d;
  d << "max |mu - wp0| " << worst;
  report(4, "unperturbed closed forms return omega_p0", ok, d.str());
}

// Small random in-regime inputs shared by criteria 5 and 6.
oamproca::proca::ProcaInputs random_in_regime(std::mt19937& rng) {
  using oamproca::proca::ProcaInputs;
  std::uniform_real_distribution<double> uE(0.5, 2.0), ug(-0.1, 0.1),
      un(0.01, 0.2), ufrac(0.0, 0.1), uphase(0.0, 6.28), uq(-1, 1), upos(-3, 3);
  ProcaInputs in;
  in.E_amp = uE(rng);
  in.grad_phi_par = ug(rng) * in.E_amp;
  in.profile.n0 = un(rng);
  in.profile.terms.push_back({ufrac(rng) * in.profile.n0,
                              static_cast<int>(rng() % 5) - 2, uq(rng), uphase(rng)});
  in.at.phi = upos(rng);
  in.at.z = upos(rng);
  const double cap = 0.4 * in.E_amp * in.profile.omega_p0_sq() /
                     (4 * std::numbers::pi * 1.2 * in.profile.n0);
  in.delta_v_dot = std::uniform_real_distribution<double>(0.0, cap)(rng);
  return in;
}

// ---------------------------------------------------------------- criterion 5
void c5_identity() {
  using namespace oamproca::proca;
  std::mt19937 rng(20240601);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const ProcaInputs in = random_in_regime(rng);
    const double lhs = mu_eq11(in).mu_sq;
    const double rhs = mu_sq_eq2(in).mu_sq;
    worst = std::max(worst,
                     std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  const bool ok = worst <= 1e-12;
  std::ostringstream d;
  d << "10^4 inputs, max relative defect " << worst;
  report(5, "scale form reproduces the canonical squared mass", ok, d.str());
}

// ---------------------------------------------------------------- criterion 6
void c6_positivity() {
  using namespace oamproca::proca;
  const double t0 = now_seconds();
  std::mt19937 rng(987654);
  std::uniform_real_distribution<double> uE(0.2, 3.0), ug(-0.9, 2.0),
      udv(0.0, 5.0), ubox(-2.0, 2.0), un(0.01, 0.5);
  bool agree = true;
  for (int i = 0; i < 10000; ++i) {
    ProcaInputs in;
    in.E_amp = uE(rng);
    in.grad_phi_par = ug(rng) * in.E_amp;  // keeps E+g > 0
    in.delta_v_dot = udv(rng);
    in.box_grad_phi_par = ubox(rng);
    in.profile.n0 = un(rng);
    agree = agree &&
            (positivity_check(in).holds == (mu_sq_eq2(in).mu_sq > 0));
  }
  bool positive = true;
  std::mt19937 rng2(13579);
  for (int i = 0; i < 10000; ++i) {
    const MassResult r = mu_sq_eq2(random_in_regime(rng2));
    positive = positive && r.in_regime && r.mu_sq > 0;
  }
  const double dt = now_seconds() - t0;
  const bool ok = agree && positive && dt < 5.0;
  std::ostringstream d;
  d << "sign agreement and in-regime positivity on 10^4 inputs each, " << dt << " s";
  report(6, "positivity inequality matches the squared-mass sign", ok, d.str());
}

// ---------------------------------------------------------------- criterion 7
void c7_tower() {
  using namespace oamproca::tower;
  const double m_star = 0.7926654595212022;
  bool ok = true;
  double worst = 0;
  for (const TowerKind kind : {TowerKind::Bosonic, TowerKind::Fermionic}) {
    const auto levels = tower_spectrum(m_star, kind, 50);
    double prev = 1e300;
    for (const auto& e : levels) {
      worst = std::max(worst, std::abs(e.mu * (e.j() + 0.5) - m_star) / m_star);
      ok = ok && e.mu < prev;
      prev = e.mu;
    }
  }
  ok = ok && worst <= 1e-15;
  std::ostringstream d;
  d << "50 levels per sequence, max relative defect " << worst;
  report(7, "tower law mu(j)(j+1/2) = m*, strictly decreasing", ok, d.str());
}

// ---------------------------------------------------------------- criterion 8
void c8_sigma_round_trip() {
  using oamproca::proca::sigma_extract;
  std::mt19937 rng(2468);
  std::uniform_real_distribution<double> u(1e-6, 10.0);
  double worst = 0;
  const double m_star = 1.3;
  for (int i = 0; i < 1000; ++i) {
    const double mu = u(rng);
    const double back = m_star / (sigma_extract(mu, m_star) + 0.5);
    worst = std::max(worst, std::abs(back - mu) / mu);
  }
  const bool ok = worst <= 1e-12;
  std::ostringstream d;
  d << "10^3 masses, max relative defect " << worst;
  report(8, "spin parameter round trip", ok, d.str());
}

// ---------------------------------------------------------------- criterion 9
void c9_dispersion() {
  using namespace oamproca::dispersion;
  const double t0 = now_seconds();
  PlasmaProfile p;
  p.n0 = 0.25 / (4 * std::numbers::pi);  // omega_p0 = 0.5
  ScalarWaveState s = make_state(256, 64.0, p, {1, 2, 3, 4});
  std::vector<ScalarWaveState> history{s};
  history.reserve(4096);
  for (int i = 1; i < 4096; ++i) {
    s = evolve_scalar(s, 0.1, 1);
    history.push_back(s);
  }
  const MassFit fit = effective_mass_fit(measure_dispersion(history));
  const double dt = now_seconds() - t0;
  const bool ok = std::abs(fit.mu_sq_fit - 0.25) <= 0.01 * 0.25 && dt <= 30.0;
  std::ostringstream d;
  d << "grid 256 x 4096 samples, mu_sq_fit " << fit.mu_sq_fit << ", " << dt << " s";
  report(9, "dispersion intercept recovers mu^2 = 0.25 within 1%", ok, d.str());
}

// --------------------------------------------------------------- criterion 10
void c10_mode_coupling() {
  using namespace oamproca::dispersion;
  PlasmaProfile p;
  p.n0 = 0.05;

  // Zero-amplitude term: closure spans modes but couplings all vanish.
  p.terms.push_back({0.0, 1, 0.2, 0.0});
  auto m = mode_coupling_matrix(p, -2, 2, 1.0);
  bool diagonal_ok = true;
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j)
      if (i != j) diagonal_ok = diagonal_ok && std::abs(m.entries(i, j)) == 0.0;

  // Helicoidal term: off-diagonal support only on the selection rule.
  p.terms[0].n_tilde = 0.005;  // ntilde/n0 = 0.1
  m = mode_coupling_matrix(p, -2, 2, 1.0);
  bool selection_ok = true;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      if (i == j) continue;
      const int dl = m.basis[i].ell - m.basis[j].ell;
      const double dk = m.basis[i].k_z - m.basis[j].k_z;
      const bool allowed = (dl == 1 && std::abs(dk + 0.2) < 1e-12) ||
                           (dl == -1 && std::abs(dk - 0.2) < 1e-12);
      const double mag = std::abs(m.entries(static_cast<Eigen::Index>(i),
                                            static_cast<Eigen::Index>(j)));
      selection_ok = selection_ok && (allowed ? mag > 0 : mag == 0.0);
    }

  bool positive_ok = true;
  for (const auto& e : effective_mass_spectrum(m))
    positive_ok = positive_ok && !e.negative && e.mu_sq_eff > 0;

  // Cross-check against the hand-rolled cyclic Jacobi eigensolver.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.entries);
  test_oracles::Mat a = test_oracles::zeros(static_cast<int>(m.basis.size()));
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) a[i][j] = m.entries(i, j);
  const auto oracle = test_oracles::jacobi_eigenvalues(a);
  double eig_defect = 0;
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    eig_defect = std::max(
        eig_defect,
        std::abs(es.eigenvalues()(i) - oracle[static_cast<std::size_t>(i)]));
  const bool ok = diagonal_ok && selection_ok && positive_ok && eig_defect <= 1e-10;
  std::ostringstream d;
  d << "selection rule clean, eigenpair residual " << eig_defect;
  report(10, "mode coupling selection rules and positive effective masses", ok, d.str());
}

// --------------------------------------------------------------- criterion 11
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void c11_cli_determinism() {
  const std::string tmp =
      std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  const std::string conf = tmp + "/oamproca_accept.conf";
  {
    std::ofstream f(conf);
    f << "seed = 11\n[profile]\nn0 = 0.05\n[[perturbation]]\nn_tilde = 0.004\n"
         "ell0 = 1\nq0 = 0.2\nphase = 0\n[proca]\nE_amp = 1\ndelta_v_dot = 0.003\n"
         "[sweep]\nparameter = delta_v_dot\nmin = 0\nmax = 0.01\ncount = 33\n"
         "scale = linear\n";
  }
  const std::string cli = OAMPROCA_CLI_PATH;
  auto run = [&](const std::string& out, int jobs) {
    const std::string cmd = cli + " mass -c " + conf + " -j " +
                            std::to_string(jobs) + " -o " + out;
    return std::system(cmd.c_str()) == 0;
  };
  const std::string o1 = tmp + "/oamproca_accept_1.csv";
  const std::string o2 = tmp + "/oamproca_accept_2.csv";
  const std::string o3 = tmp + "/oamproca_accept_4.csv";
  bool ok = run(o1, 1) && run(o2, 1) && run(o3, 4);
  const std::string a = slurp(o1);
  ok = ok && !a.empty() && a == slurp(o2) && a == slurp(o3);
  for (const auto& f : {conf, o1, o2, o3}) std::remove(f.c_str());
  report(11, "byte-identical CSV across repeated runs and --jobs {1,4}", ok);
}

}  // namespace

int main() {
  c1_algebra();
  c2_spectrum();
  c3_rs_evolution();
  c4_unperturbed();
  c5_identity();
  c6_positivity();
  c7_tower();
  c8_sigma_round_trip();
  c9_dispersion();
  c10_mode_coupling();
  c11_cli_determinism();
  if (failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
