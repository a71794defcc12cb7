#ifndef OAMPROCA_GAUSS_HPP
#define OAMPROCA_GAUSS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oamproca::gauss {

/// Gaussian integer re + i*im. Closed under the products appearing in the
/// generator algebra, so commutators evaluate with zero rounding error.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr bool operator==(GaussInt a, GaussInt b) = default;

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

/// Unit imaginary, for forming i*S and -i*T.
inline constexpr GaussInt gauss_i{0, 1};

/// Dense square matrix over Gaussian integers. Small and exact; used only
/// for the generator algebra, never for large linear algebra.
class GaussMat {
public:
  GaussMat() = default;
  explicit GaussMat(int n) : n_(n), v_(static_cast<std::size_t>(n) * n) {}

  int dim() const { return n_; }

  GaussInt& operator()(int r, int c) { return v_[idx(r, c)]; }
  const GaussInt& operator()(int r, int c) const { return v_[idx(r, c)]; }

  friend GaussMat operator*(const GaussMat& a, const GaussMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GaussMat: dimension mismatch");
    GaussMat out(a.n_);
    for (int r = 0; r < a.n_; ++r)
      for (int k = 0; k < a.n_; ++k) {
        const GaussInt ark = a(r, k);
        if (ark.is_zero()) continue;
        for (int c = 0; c < a.n_; ++c) out(r, c) = out(r, c) + ark * b(k, c);
      }
    return out;
  }
  friend GaussMat operator+(const GaussMat& a, const GaussMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GaussMat: dimension mismatch");
    GaussMat out(a.n_);
    for (std::size_t i = 0; i < a.v_.size(); ++i) out.v_[i] = a.v_[i] + b.v_[i];
    return out;
  }
  friend GaussMat operator-(const GaussMat& a, const GaussMat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("GaussMat: dimension mismatch");
    GaussMat out(a.n_);
    for (std::size_t i = 0; i < a.v_.size(); ++i) out.v_[i] = a.v_[i] - b.v_[i];
    return out;
  }
  friend GaussMat operator*(GaussInt s, const GaussMat& a) {
    GaussMat out(a.n_);
    for (std::size_t i = 0; i < a.v_.size(); ++i) out.v_[i] = s * a.v_[i];
    return out;
  }
  friend bool operator==(const GaussMat& a, const GaussMat& b) = default;

  bool is_zero() const {
    for (const auto& e : v_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// max |entry| in the complex modulus sense; exact zero iff is_zero().
  double max_abs() const {
    double m = 0;
    for (const auto& e : v_)
      m = std::max(m, std::hypot(static_cast<double>(e.re), static_cast<double>(e.im)));
    return m;
  }

  GaussMat adjoint() const {
    GaussMat out(n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) out(r, c) = {v_[idx(c, r)].re, -v_[idx(c, r)].im};
    return out;
  }

  bool is_hermitean() const { return *this == adjoint(); }

private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }
  int n_ = 0;
  std::vector<GaussInt> v_;
};

/// AB - BA, exact. Throws on dimension mismatch.
inline GaussMat commutator(const GaussMat& a, const GaussMat& b) {
  return a * b - b * a;
}

}  // namespace oamproca::gauss

#endif
