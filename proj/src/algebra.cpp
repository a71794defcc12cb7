#include "oamproca/algebra.hpp"

#include <stdexcept>

namespace oamproca::algebra {

using gauss::GaussInt;
using gauss::gauss_i;

namespace {

GaussMat make4(std::initializer_list<std::array<int, 2>> entries_plus,
               std::initializer_list<std::array<int, 2>> entries_minus) {
  GaussMat m(4);
  for (auto [r, c] : entries_plus) m(r, c) = GaussInt{1};
  for (auto [r, c] : entries_minus) m(r, c) = GaussInt{-1};
  return m;
}

GaussMat spatial_part(const GaussMat& m4) {
  GaussMat m(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = m4(r + 1, c + 1);
  return m;
}

}  // namespace

GeneratorSet build_generators() {
  GeneratorSet g;
  // Rows/columns: 0 = t, 1 = x, 2 = y, 3 = z.
  g.S[0] = make4({{3, 2}}, {{2, 3}});  // S_x
  g.S[1] = make4({{1, 3}}, {{3, 1}});  // S_y
  g.S[2] = make4({{2, 1}}, {{1, 2}});  // S_z
  g.T[0] = make4({{0, 1}, {1, 0}}, {});
  g.T[1] = make4({{0, 2}, {2, 0}}, {});
  g.T[2] = make4({{0, 3}, {3, 0}}, {});
  for (int j = 0; j < 3; ++j) {
    g.a[j] = gauss_i * g.S[j];
    g.b[j] = (-gauss_i) * g.T[j];
    g.s[j] = spatial_part(g.S[j]);
    g.s_herm[j] = gauss_i * g.s[j];
  }
  return g;
}

std::vector<IdentityCheck> verify_algebra(const GeneratorSet& g) {
  std::vector<IdentityCheck> out;
  const char* axis = "xyz";
  auto record = [&out](std::string name, const GaussMat& defect) {
    out.push_back({std::move(name), defect.is_zero(), defect.max_abs()});
  };
  using gauss::commutator;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    auto nm = [&](const char* fmt_a, int u, const char* fmt_b, int v) {
      return std::string("[") + fmt_a + "_" + axis[u] + "," + fmt_b + "_" + axis[v] + "]";
    };
    record(nm("a", i, "a", j) + " = i a_" + axis[k],
           commutator(g.a[i], g.a[j]) - gauss_i * g.a[k]);
    record(nm("b", i, "b", j) + " = -i a_" + axis[k],
           commutator(g.b[i], g.b[j]) + gauss_i * g.a[k]);
    record(nm("a", i, "b", i) + " = 0", commutator(g.a[i], g.b[i]));
    record(nm("a", i, "b", j) + " = i b_" + axis[k],
           commutator(g.a[i], g.b[j]) - gauss_i * g.b[k]);
    record(nm("a", i, "b", k) + " = -i b_" + axis[j],
           commutator(g.a[i], g.b[k]) + gauss_i * g.b[j]);
  }
  return out;
}

Eigen::Matrix3cd photon_hamiltonian(const Wavevector& k, int helicity_sign) {
  if (helicity_sign != 1 && helicity_sign != -1)
    throw std::invalid_argument("helicity_sign must be +1 or -1");
  static const GeneratorSet g = build_generators();
  Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
  for (int j = 0; j < 3; ++j)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        h(r, c) += g.s_herm[j](r, c).to_complex() * k.p[j];
  return double(helicity_sign) * h;
}

Eigen::Matrix4cd dirac_alpha(int j) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd sigma;
  switch (j) {
    case 0: sigma << 0, 1, 1, 0; break;
    case 1: sigma << 0, -1i, 1i, 0; break;
    case 2: sigma << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("dirac_alpha: j out of range");
  }
  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  a.block<2, 2>(0, 2) = sigma;
  a.block<2, 2>(2, 0) = sigma;
  return a;
}

Eigen::Matrix4cd dirac_beta() {
  Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
  b.diagonal() << 1, 1, -1, -1;
  return b;
}

Eigen::Matrix4cd dirac_hamiltonian(const Wavevector& p, double mu) {
  Eigen::Matrix4cd h = mu * dirac_beta();
  for (int j = 0; j < 3; ++j) h += p.p[j] * dirac_alpha(j);
  return h;
}

DiracPlaneWaveCheck dirac_mass_shell(const Wavevector& p, double mu) {
  if (mu < 0) throw std::invalid_argument("dirac_mass_shell: mu must be >= 0");
  const Eigen::Matrix4cd h = dirac_hamiltonian(p, mu);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  // Largest eigenvalue is the positive branch; its eigenvector is the
  // plane-wave spinor.
  const double w = es.eigenvalues()(3);
  const Eigen::Vector4cd psi = es.eigenvectors().col(3);
  DiracPlaneWaveCheck chk;
  chk.W = w;
  chk.p = p;
  chk.mu = mu;
  chk.residual = (h * psi - w * psi).norm();
  return chk;
}

}  // namespace oamproca::algebra
