#ifndef OAMPROCA_RS_FIELD_HPP
#define OAMPROCA_RS_FIELD_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "oamproca/algebra.hpp"

namespace oamproca::rs {

/// Uniform periodic Cartesian grid.
struct Grid3 {
  int nx = 0, ny = 0, nz = 0;
  double lx = 0, ly = 0, lz = 0;

  void validate() const {
    if (nx < 4 || ny < 4 || nz < 4)
      throw std::invalid_argument("Grid3: dims must be >= 4 per axis");
    if (!(lx > 0) || !(ly > 0) || !(lz > 0))
      throw std::invalid_argument("Grid3: box lengths must be > 0");
  }
  std::size_t size() const {
    return static_cast<std::size_t>(nx) * ny * nz;
  }
  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * ny + iy) * nz + iz;
  }
  friend bool operator==(const Grid3&, const Grid3&) = default;
};

/// Signed FFT wavenumber 2*pi*m/L for slot i of n (m in (-n/2, n/2]).
double fft_wavenumber(int i, int n, double length);

struct RealScalarField {
  Grid3 grid;
  std::vector<double> v;
};

struct RealVectorField {
  Grid3 grid;
  std::vector<std::array<double, 3>> v;
};

struct PotentialPair {
  RealScalarField phi;
  RealVectorField A;
};

/// Complex photon wavefunction G = E + i*sign*B on a periodic grid.
///
/// Conventions, fixed once: helicity_sign = +1 means G = E + iB obeying
/// i curl G = +dG/dt, so per Fourier mode G(k,t) = exp(-sign*t* k x) G(k,0),
/// a real rotation about k. The mode we call positive-helicity carries the
/// polarization (e1 - i*sign*e2)/sqrt(2) and evolves as exp(-i |k| t) for
/// either sign choice.
class RSField {
public:
  RSField(const Grid3& grid, int helicity_sign);

  /// Circularly polarized transverse plane wave for a grid-commensurate k.
  /// Throws on k = 0 or a non-commensurate wavevector.
  static RSField plane_wave(const Grid3& grid, const algebra::Wavevector& k,
                            std::complex<double> amplitude, int helicity_sign);

  const Grid3& grid() const { return grid_; }
  int helicity_sign() const { return helicity_sign_; }

  std::complex<double>& at(int comp, std::size_t i) { return comp_[comp][i]; }
  const std::complex<double>& at(int comp, std::size_t i) const { return comp_[comp][i]; }
  const std::vector<std::complex<double>>& component(int comp) const { return comp_[comp]; }

  /// Relative spectral divergence norm ||k.G(k)|| / ||G||; 0 for an exactly
  /// transverse (or zero) field.
  double divergence_defect() const;

  /// Exact mode-space propagator over time dt*steps; unitary per mode.
  RSField evolve(double dt, long steps) const;

  /// Sum |G|^2 over grid points (conserved by evolve).
  double energy() const;

  RSField& operator+=(const RSField& other);
  RSField& operator*=(std::complex<double> s);

  /// x,y,z,Re/Im of each component, one grid point per row.
  void write_csv(std::ostream& os) const;
  /// Flat binary: 6 native doubles (Re,Im per component) per point in
  /// x-major index order.
  void write_binary(std::ostream& os) const;

private:
  Grid3 grid_;
  int helicity_sign_;
  std::array<std::vector<std::complex<double>>, 3> comp_;
};

/// Pointwise (E^2 + B^2 + mu^2 Phi^2 + mu^2 A^2)/(8 pi); never negative.
RealScalarField proca_energy_density(const RealVectorField& E, const RealVectorField& B,
                                     const PotentialPair& pot, double mu);

}  // namespace oamproca::rs

#endif
