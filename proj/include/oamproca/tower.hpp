#ifndef OAMPROCA_TOWER_HPP
#define OAMPROCA_TOWER_HPP

#include <vector>

#include "oamproca/proca.hpp"

namespace oamproca::tower {

/// One level of the mass/spin tower mu(j) = m*/(j + 1/2). Spins are kept as
/// twice-spin integers so half-integer sequences stay exact.
struct TowerEntry {
  int twice_j = 0;
  double mu = 0;
  double m_star = 0;
  double j() const { return 0.5 * twice_j; }
};

enum class TowerKind { Bosonic, Fermionic };

/// Bosonic: j = 1, 2, 3, ...; fermionic: j = 1/2, 3/2, 5/2, ...
/// include_scalar prepends the j = 0 level to the bosonic sequence.
std::vector<TowerEntry> tower_spectrum(double m_star, TowerKind kind, int max_levels,
                                       bool include_scalar = false);

/// Effective (continuous) tower level Sigma of a photon with Proca mass
/// mu_gamma: the total-angular-momentum generalization of the spin ladder.
inline double plasma_tower_level(double mu_gamma, double m_star) {
  return proca::sigma_extract(mu_gamma, m_star);
}

}  // namespace oamproca::tower

#endif
