#ifndef OAMPROCA_ALGEBRA_HPP
#define OAMPROCA_ALGEBRA_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "oamproca/gauss.hpp"

namespace oamproca::algebra {

using gauss::GaussMat;

/// The six infinitesimal Lorentz generators in the 4-vector representation
/// (index 0 = time), their Hermitean-ized forms a_j = i S_j, b_j = -i T_j,
/// and the 3x3 spatial rotation submatrices s_j with s_herm_j = i s_j.
///
/// Note: a_j and s_herm_j are Hermitean; b_j is anti-Hermitean (a boost
/// generator in a real symmetric representation admits no Hermitean
/// i-multiple). verify_algebra checks the algebra these matrices close.
struct GeneratorSet {
  std::array<GaussMat, 3> S;       // rotations, antisymmetric
  std::array<GaussMat, 3> T;       // boosts, symmetric
  std::array<GaussMat, 3> a;       // i * S_j
  std::array<GaussMat, 3> b;       // -i * T_j
  std::array<GaussMat, 3> s;       // 3x3 spatial part of S_j
  std::array<GaussMat, 3> s_herm;  // i * s_j, Hermitean spin-1 matrices
};

GeneratorSet build_generators();

struct IdentityCheck {
  std::string name;
  bool pass = false;
  double max_defect = 0.0;  // exactly 0 when pass
};

/// Checks the full commutator table closed by the generators, including all
/// cyclic images under x -> y -> z -> x. Failures are reported, not thrown.
std::vector<IdentityCheck> verify_algebra(const GeneratorSet& g);

struct Wavevector {
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  double norm() const { return p.norm(); }
};

/// H = helicity_sign * (s_herm . p). Hermitean, spectrum {+|p|, -|p|, 0}.
Eigen::Matrix3cd photon_hamiltonian(const Wavevector& k, int helicity_sign);

/// Dirac matrices in the Dirac-Pauli representation: alpha_j off-diagonal
/// Pauli blocks, beta = diag(1,1,-1,-1). This is the single place the
/// representation is fixed; only the (representation-independent) spectrum
/// is ever asserted downstream.
Eigen::Matrix4cd dirac_alpha(int j);
Eigen::Matrix4cd dirac_beta();

/// alpha . p + beta * mu
Eigen::Matrix4cd dirac_hamiltonian(const Wavevector& p, double mu);

struct DiracPlaneWaveCheck {
  double W = 0;       // positive-branch plane-wave energy
  Wavevector p;
  double mu = 0;
  double residual = 0;  // |(alpha.p + beta mu - W) psi| for the best psi
  double mass_shell_defect() const { return W * W - p.p.squaredNorm() - mu * mu; }
};

/// Finds the plane-wave energy W solving the first-order wave equation for
/// momentum p and mass mu; W = +sqrt(|p|^2 + mu^2) with residual ~ 0.
DiracPlaneWaveCheck dirac_mass_shell(const Wavevector& p, double mu);

}  // namespace oamproca::algebra

#endif
