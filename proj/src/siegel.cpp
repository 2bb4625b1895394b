#include "moduli/siegel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace moduli {

namespace {

constexpr double kMinorTol = 1e-12;
constexpr double kCondLimit = 1e12;

}  // namespace

Mat2c Mat2c::operator*(const Mat2c& o) const {
  return {{a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
           a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]}};
}

Mat2c Mat2c::inverse() const {
  Complex d = det();
  if (std::abs(d) == 0.0)
    throw std::domain_error("Mat2c: singular matrix");
  return {{a[3] / d, -a[1] / d, -a[2] / d, a[0] / d}};
}

double Mat2c::frobenius() const {
  double s = 0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

SiegelPoint::SiegelPoint(Complex tau1, Complex tau2, Complex tau3)
    : t1_(tau1), t2_(tau2), t3_(tau3) {
  const double y1 = t1_.imag();
  const double det = y1 * t3_.imag() - t2_.imag() * t2_.imag();
  if (!(y1 > kMinorTol) || !(det > kMinorTol))
    throw std::domain_error(
        "SiegelPoint: Im(tau) is not positive definite within tolerance");
}

double SiegelPoint::im_det() const {
  return t1_.imag() * t3_.imag() - t2_.imag() * t2_.imag();
}

double SiegelPoint::lambda_min() const {
  const double a = t1_.imag(), b = t2_.imag(), c = t3_.imag();
  const double tr = a + c;
  const double disc = std::sqrt((a - c) * (a - c) + 4 * b * b);
  return (tr - disc) / 2;
}

namespace {

SymplecticMatrix::Mat matmul(const SymplecticMatrix::Mat& x,
                             const SymplecticMatrix::Mat& y) {
  SymplecticMatrix::Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long long s = 0;
      for (int l = 0; l < 4; ++l) s += x[i][l] * y[l][j];
      r[i][j] = s;
    }
  return r;
}

SymplecticMatrix::Mat j_mat() {
  return {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}};
}

bool is_symplectic(const SymplecticMatrix::Mat& m) {
  SymplecticMatrix::Mat mt{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mt[i][j] = m[j][i];
  return matmul(matmul(mt, j_mat()), m) == j_mat();
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(const Mat& m) : m_(m) {
  if (!is_symplectic(m_))
    throw std::invalid_argument("SymplecticMatrix: g^T J g != J");
}

SymplecticMatrix SymplecticMatrix::identity() {
  return SymplecticMatrix(
      Mat{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
}

SymplecticMatrix SymplecticMatrix::standard_J() {
  return SymplecticMatrix(j_mat());
}

SymplecticMatrix SymplecticMatrix::translation(long long b11, long long b12,
                                               long long b22) {
  return SymplecticMatrix(Mat{{{1, 0, b11, b12},
                               {0, 1, b12, b22},
                               {0, 0, 1, 0},
                               {0, 0, 0, 1}}});
}

SymplecticMatrix SymplecticMatrix::gl_block(long long u11, long long u12,
                                            long long u21, long long u22) {
  const long long det = u11 * u22 - u12 * u21;
  if (det != 1 && det != -1)
    throw std::invalid_argument("gl_block: U must be in GL_2(Z)");
  // (U^T)^{-1} = (1/det) [u22 -u21; -u12 u11].
  return SymplecticMatrix(Mat{{{u11, u12, 0, 0},
                               {u21, u22, 0, 0},
                               {0, 0, det * u22, det * -u21},
                               {0, 0, det * -u12, det * u11}}});
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
  return SymplecticMatrix(matmul(m_, o.m_));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // g^{-1} = J^{-1} g^T J for symplectic g.
  Mat mt{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mt[i][j] = m_[j][i];
  Mat jinv{};  // J^{-1} = -J
  const Mat j = j_mat();
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj) jinv[i][jj] = -j[i][jj];
  return SymplecticMatrix(matmul(matmul(jinv, mt), j));
}

namespace {

Mat2c block(const SymplecticMatrix& g, int r, int c) {
  return {{Complex(static_cast<double>(g.entry(r, c)), 0),
           Complex(static_cast<double>(g.entry(r, c + 1)), 0),
           Complex(static_cast<double>(g.entry(r + 1, c)), 0),
           Complex(static_cast<double>(g.entry(r + 1, c + 1)), 0)}};
}

}  // namespace

Mat2c SymplecticMatrix::block_A() const { return block(*this, 0, 0); }
Mat2c SymplecticMatrix::block_B() const { return block(*this, 0, 2); }
Mat2c SymplecticMatrix::block_C() const { return block(*this, 2, 0); }
Mat2c SymplecticMatrix::block_D() const { return block(*this, 2, 2); }

std::string SymplecticMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << (i == 0 ? "[" : "; ");
    for (int j = 0; j < 4; ++j) {
      if (j) os << " ";
      os << m_[i][j];
    }
  }
  os << "]";
  return os.str();
}

bool is_in_gamma1p(const SymplecticMatrix& g, long p) {
  if (p < 1) throw std::invalid_argument("is_in_gamma1p: bad p");
  const long long pp = static_cast<long long>(p);
  auto diff = [&](int i, int j) -> long long {
    return g.entry(i, j) - (i == j ? 1 : 0);
  };
  // Fourth column: = 0 mod p, except (2,4) = 0 mod p^2 (1-based indexing).
  for (int i = 0; i < 4; ++i) {
    const long long m = (i == 1) ? pp * pp : pp;
    if (diff(i, 3) % m != 0) return false;
  }
  // Second row: = 0 mod p.
  for (int j = 0; j < 3; ++j)
    if (diff(1, j) % pp != 0) return false;
  return true;
}

Complex automorphy_det(const SymplecticMatrix& g, const SiegelPoint& tau) {
  Mat2c n = g.block_C() * tau.matrix();
  const Mat2c d = g.block_D();
  for (int i = 0; i < 4; ++i) n.a[i] += d.a[i];
  return n.det();
}

SiegelPoint act(const SymplecticMatrix& g, const SiegelPoint& tau) {
  const Mat2c t = tau.matrix();
  Mat2c num = g.block_A() * t;
  Mat2c den = g.block_C() * t;
  const Mat2c b = g.block_B(), d = g.block_D();
  for (int i = 0; i < 4; ++i) {
    num.a[i] += b.a[i];
    den.a[i] += d.a[i];
  }
  if (std::abs(den.det()) == 0.0)
    throw std::domain_error("act: C tau + D is singular");
  const Mat2c den_inv = den.inverse();
  if (den.frobenius() * den_inv.frobenius() > kCondLimit)
    throw std::domain_error("act: C tau + D is numerically singular");
  const Mat2c r = num * den_inv;
  // Symmetrize against round-off.
  const Complex off = (r.a[1] + r.a[2]) / 2.0;
  return SiegelPoint(r.a[0], off, r.a[3]);
}

}  // namespace moduli
