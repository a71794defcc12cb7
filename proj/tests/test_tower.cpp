#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oamproca/tower.hpp"

using namespace oamproca::tower;

TEST_CASE("tower spectrum values") {
  const auto f1 = tower_spectrum(1.0, TowerKind::Fermionic, 1);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].twice_j == 1);
  CHECK(f1[0].mu == doctest::Approx(1.0).epsilon(1e-15));

  const auto f2 = tower_spectrum(1.0, TowerKind::Fermionic, 2);
  CHECK(f2[1].twice_j == 3);
  CHECK(f2[1].mu == doctest::Approx(0.5).epsilon(1e-15));

  const auto b1 = tower_spectrum(1.0, TowerKind::Bosonic, 1);
  CHECK(b1[0].twice_j == 2);
  CHECK(b1[0].mu == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("scalar level is opt-in") {
  const auto b = tower_spectrum(2.0, TowerKind::Bosonic, 2, true);
  CHECK(b[0].twice_j == 0);
  CHECK(b[0].mu == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(b[1].twice_j == 2);
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(tower_spectrum(0.0, TowerKind::Bosonic, 3), std::invalid_argument);
  CHECK_THROWS_AS(tower_spectrum(1.0, TowerKind::Bosonic, 0), std::invalid_argument);
}

TEST_CASE("mu(j) * (j + 1/2) = m* exactly; strictly decreasing; positive") {
  for (const TowerKind kind : {TowerKind::Bosonic, TowerKind::Fermionic}) {
    const double m_star = 0.7926654595212022;
    const auto levels = tower_spectrum(m_star, kind, 50);
    double prev = 1e300;
    for (const auto& e : levels) {
      CHECK(std::abs(e.mu * (e.j() + 0.5) - m_star) <= 1e-15 * m_star);
      CHECK(e.mu > 0);
      CHECK(e.mu < prev);
      prev = e.mu;
    }
  }
}

TEST_CASE("fermionic and bosonic sequences interleave by denominator") {
  const auto f = tower_spectrum(1.0, TowerKind::Fermionic, 10);
  const auto b = tower_spectrum(1.0, TowerKind::Bosonic, 10);
  for (int i = 0; i < 10; ++i) {
    // j_fermionic = i + 1/2 sits just below j_bosonic = i + 1.
    CHECK(f[i].mu > b[i].mu);
    if (i + 1 < 10) CHECK(b[i].mu > f[i + 1].mu);
  }
}

TEST_CASE("plasma tower level") {
  CHECK(plasma_tower_level(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(plasma_tower_level(1.0 / 3.0, 1.0) == doctest::Approx(2.5).epsilon(1e-14));
  // mu from the reference closed-form inputs with m* = wp0.
  CHECK(plasma_tower_level(0.7886921740519423, 0.7926654595212022) ==
        doctest::Approx(0.5050378152592119).epsilon(1e-12));
}
