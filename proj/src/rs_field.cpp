#include "oamproca/rs_field.hpp"

#include <fftw3.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <ostream>

namespace oamproca::rs {

namespace {

void fft3(const Grid3& g, std::vector<std::complex<double>>& data, int sign) {
  fftw_complex* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = fftw_plan_dft_3d(g.nx, g.ny, g.nz, p, p, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  if (sign == FFTW_BACKWARD) {
    const double norm = 1.0 / static_cast<double>(g.size());
    for (auto& c : data) c *= norm;
  }
}

// Rotation by angle about the unit axis (Rodrigues).
Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double angle) {
  Eigen::Matrix3d k;
  k << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(angle) * k +
         (1.0 - std::cos(angle)) * (k * k);
}

}  // namespace

double fft_wavenumber(int i, int n, double length) {
  const int m = (i <= n / 2) ? i : i - n;
  return 2.0 * std::numbers::pi * m / length;
}

RSField::RSField(const Grid3& grid, int helicity_sign)
    : grid_(grid), helicity_sign_(helicity_sign) {
  grid_.validate();
  if (helicity_sign != 1 && helicity_sign != -1)
    throw std::invalid_argument("RSField: helicity_sign must be +1 or -1");
  for (auto& c : comp_) c.assign(grid_.size(), {0, 0});
}

RSField RSField::plane_wave(const Grid3& grid, const algebra::Wavevector& k,
                            std::complex<double> amplitude, int helicity_sign) {
  grid.validate();
  const double knorm = k.norm();
  if (knorm == 0)
    throw std::invalid_argument("plane_wave: no propagating zero mode");
  const double lengths[3] = {grid.lx, grid.ly, grid.lz};
  long modes[3];
  for (int j = 0; j < 3; ++j) {
    const double m = k.p[j] * lengths[j] / (2.0 * std::numbers::pi);
    modes[j] = std::lround(m);
    if (std::abs(m - static_cast<double>(modes[j])) > 1e-9)
      throw std::invalid_argument("plane_wave: wavevector not grid-commensurate");
  }
  const Eigen::Vector3d khat = k.p / knorm;
  // Transverse frame: e1 from the axis least aligned with khat, e2 = khat x e1.
  int least = 0;
  for (int j = 1; j < 3; ++j)
    if (std::abs(khat[j]) < std::abs(khat[least])) least = j;
  Eigen::Vector3d u = Eigen::Vector3d::Zero();
  u[least] = 1.0;
  const Eigen::Vector3d e1 = (u - u.dot(khat) * khat).normalized();
  const Eigen::Vector3d e2 = khat.cross(e1);

  using namespace std::complex_literals;
  Eigen::Vector3cd pol =
      (e1.cast<std::complex<double>>() -
       1i * static_cast<double>(helicity_sign) * e2.cast<std::complex<double>>()) /
      std::sqrt(2.0);

  RSField f(grid, helicity_sign);
  const double dx = grid.lx / grid.nx, dy = grid.ly / grid.ny, dz = grid.lz / grid.nz;
  for (int ix = 0; ix < grid.nx; ++ix)
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int iz = 0; iz < grid.nz; ++iz) {
        const double phase = k.p[0] * ix * dx + k.p[1] * iy * dy + k.p[2] * iz * dz;
        const std::complex<double> e = amplitude * std::exp(1i * phase);
        const std::size_t i = grid.index(ix, iy, iz);
        for (int c = 0; c < 3; ++c) f.comp_[c][i] = pol[c] * e;
      }
  return f;
}

double RSField::divergence_defect() const {
  std::array<std::vector<std::complex<double>>, 3> hat = comp_;
  for (auto& c : hat) fft3(grid_, c, FFTW_FORWARD);
  double num = 0, den = 0;
  for (int ix = 0; ix < grid_.nx; ++ix) {
    const double kx = fft_wavenumber(ix, grid_.nx, grid_.lx);
    for (int iy = 0; iy < grid_.ny; ++iy) {
      const double ky = fft_wavenumber(iy, grid_.ny, grid_.ly);
      for (int iz = 0; iz < grid_.nz; ++iz) {
        const double kz = fft_wavenumber(iz, grid_.nz, grid_.lz);
        const std::size_t i = grid_.index(ix, iy, iz);
        const std::complex<double> kd =
            kx * hat[0][i] + ky * hat[1][i] + kz * hat[2][i];
        num += std::norm(kd);
        den += std::norm(hat[0][i]) + std::norm(hat[1][i]) + std::norm(hat[2][i]);
      }
    }
  }
  if (den == 0) return 0;
  return std::sqrt(num / den);
}

RSField RSField::evolve(double dt, long steps) const {
  if (!(dt > 0)) throw std::invalid_argument("evolve: dt must be > 0");
  if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
  RSField out = *this;
  if (steps == 0) return out;
  const double t = dt * static_cast<double>(steps);

  std::array<std::vector<std::complex<double>>, 3> hat = comp_;
  for (auto& c : hat) fft3(grid_, c, FFTW_FORWARD);
  for (int ix = 0; ix < grid_.nx; ++ix) {
    const double kx = fft_wavenumber(ix, grid_.nx, grid_.lx);
    for (int iy = 0; iy < grid_.ny; ++iy) {
      const double ky = fft_wavenumber(iy, grid_.ny, grid_.ly);
      for (int iz = 0; iz < grid_.nz; ++iz) {
        const double kz = fft_wavenumber(iz, grid_.nz, grid_.lz);
        const Eigen::Vector3d k(kx, ky, kz);
        const double knorm = k.norm();
        if (knorm == 0) continue;
        const Eigen::Matrix3d rot =
            axis_rotation(k / knorm, -helicity_sign_ * knorm * t);
        const std::size_t i = grid_.index(ix, iy, iz);
        const Eigen::Vector3cd g(hat[0][i], hat[1][i], hat[2][i]);
        const Eigen::Vector3cd rg = rot.cast<std::complex<double>>() * g;
        for (int c = 0; c < 3; ++c) hat[c][i] = rg[c];
      }
    }
  }
  for (auto& c : hat) fft3(grid_, c, FFTW_BACKWARD);
  out.comp_ = hat;
  return out;
}

double RSField::energy() const {
  double e = 0;
  for (const auto& c : comp_)
    for (const auto& v : c) e += std::norm(v);
  return e;
}

RSField& RSField::operator+=(const RSField& other) {
  if (grid_ != other.grid_ || helicity_sign_ != other.helicity_sign_)
    throw std::invalid_argument("RSField: grid/helicity mismatch");
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < comp_[c].size(); ++i) comp_[c][i] += other.comp_[c][i];
  return *this;
}

RSField& RSField::operator*=(std::complex<double> s) {
  for (auto& c : comp_)
    for (auto& v : c) v *= s;
  return *this;
}

void RSField::write_csv(std::ostream& os) const {
  os << "x,y,z,re_gx,im_gx,re_gy,im_gy,re_gz,im_gz\n";
  const double dx = grid_.lx / grid_.nx, dy = grid_.ly / grid_.ny, dz = grid_.lz / grid_.nz;
  char buf[64];
  for (int ix = 0; ix < grid_.nx; ++ix)
    for (int iy = 0; iy < grid_.ny; ++iy)
      for (int iz = 0; iz < grid_.nz; ++iz) {
        const std::size_t i = grid_.index(ix, iy, iz);
        double row[9] = {ix * dx, iy * dy, iz * dz, 0, 0, 0, 0, 0, 0};
        for (int c = 0; c < 3; ++c) {
          row[3 + 2 * c] = comp_[c][i].real();
          row[4 + 2 * c] = comp_[c][i].imag();
        }
        for (int j = 0; j < 9; ++j) {
          std::snprintf(buf, sizeof buf, "%.17g", row[j]);
          os << buf << (j == 8 ? '\n' : ',');
        }
      }
}

void RSField::write_binary(std::ostream& os) const {
  for (std::size_t i = 0; i < grid_.size(); ++i)
    for (int c = 0; c < 3; ++c) {
      const double re = comp_[c][i].real(), im = comp_[c][i].imag();
      os.write(reinterpret_cast<const char*>(&re), sizeof re);
      os.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

RealScalarField proca_energy_density(const RealVectorField& E, const RealVectorField& B,
                                     const PotentialPair& pot, double mu) {
  if (mu < 0) throw std::invalid_argument("proca_energy_density: mu must be >= 0");
  if (!(E.grid == B.grid) || !(E.grid == pot.phi.grid) || !(E.grid == pot.A.grid))
    throw std::invalid_argument("proca_energy_density: grid mismatch");
  const std::size_t n = E.grid.size();
  if (E.v.size() != n || B.v.size() != n || pot.phi.v.size() != n || pot.A.v.size() != n)
    throw std::invalid_argument("proca_energy_density: field size mismatch");
  RealScalarField u;
  u.grid = E.grid;
  u.v.resize(n);
  const double pre = 1.0 / (8.0 * std::numbers::pi);
  for (std::size_t i = 0; i < n; ++i) {
    double s = mu * mu * pot.phi.v[i] * pot.phi.v[i];
    for (int c = 0; c < 3; ++c)
      s += E.v[i][c] * E.v[i][c] + B.v[i][c] * B.v[i][c] + mu * mu * pot.A.v[i][c] * pot.A.v[i][c];
    u.v[i] = pre * s;
  }
  return u;
}

}  // namespace oamproca::rs
