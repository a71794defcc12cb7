#include "oamproca/tower.hpp"

#include <stdexcept>

namespace oamproca::tower {

std::vector<TowerEntry> tower_spectrum(double m_star, TowerKind kind, int max_levels,
                                       bool include_scalar) {
  if (!(m_star > 0)) throw std::invalid_argument("tower_spectrum: m_star must be > 0");
  if (max_levels < 1) throw std::invalid_argument("tower_spectrum: max_levels must be >= 1");
  std::vector<TowerEntry> out;
  out.reserve(static_cast<std::size_t>(max_levels));
  int twice_j;
  int step;
  if (kind == TowerKind::Bosonic) {
    twice_j = include_scalar ? 0 : 2;
    step = 2;
  } else {
    twice_j = 1;
    step = 2;
  }
  for (int lvl = 0; lvl < max_levels; ++lvl, twice_j += step) {
    TowerEntry e;
    e.twice_j = twice_j;
    e.m_star = m_star;
    e.mu = m_star / (0.5 * twice_j + 0.5);  // = 2 m* / (twice_j + 1)
    out.push_back(e);
  }
  return out;
}

}  // namespace oamproca::tower
