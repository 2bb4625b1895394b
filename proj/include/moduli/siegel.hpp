// Siegel space of degree 2, integral symplectic matrices and the
// fractional linear action.
#pragma once

#include <array>
#include <complex>
#include <string>

namespace moduli {

using Complex = std::complex<double>;

/// 2x2 complex matrix in row-major order.
struct Mat2c {
  std::array<Complex, 4> a;  // [ a0 a1 ; a2 a3 ]
  Complex det() const { return a[0] * a[3] - a[1] * a[2]; }
  Mat2c operator*(const Mat2c& o) const;
  Mat2c inverse() const;  // throws on (near-)singular input
  double frobenius() const;
};

/// Symmetric 2x2 complex matrix tau with positive definite imaginary part
/// (both leading minors above 1e-12).
class SiegelPoint {
 public:
  /// Validates the invariants.
  SiegelPoint(Complex tau1, Complex tau2, Complex tau3);

  Complex tau1() const { return t1_; }
  Complex tau2() const { return t2_; }
  Complex tau3() const { return t3_; }
  Mat2c matrix() const { return {{t1_, t2_, t2_, t3_}}; }

  double im_det() const;
  /// Smallest eigenvalue of Im(tau).
  double lambda_min() const;

 private:
  Complex t1_, t2_, t3_;
};

/// 4x4 integer matrix g with g^T J g = J (exact check).
class SymplecticMatrix {
 public:
  using Row = std::array<long long, 4>;
  using Mat = std::array<Row, 4>;

  explicit SymplecticMatrix(const Mat& m);

  static SymplecticMatrix identity();
  /// J = (0 I; -I 0).
  static SymplecticMatrix standard_J();
  /// (I B; 0 I) for symmetric integer B = [b11 b12; b12 b22].
  static SymplecticMatrix translation(long long b11, long long b12,
                                      long long b22);
  /// diag(U, (U^T)^{-1}) for U in GL_2(Z), given row-major.
  static SymplecticMatrix gl_block(long long u11, long long u12, long long u21,
                                   long long u22);

  long long entry(int i, int j) const { return m_[i][j]; }
  SymplecticMatrix operator*(const SymplecticMatrix& o) const;
  SymplecticMatrix inverse() const;

  /// 2x2 blocks (A B; C D) as complex matrices.
  Mat2c block_A() const;
  Mat2c block_B() const;
  Mat2c block_C() const;
  Mat2c block_D() const;

  std::string str() const;

 private:
  SymplecticMatrix() = default;
  Mat m_{};
};

/// Membership in Gamma_{1,p}: g - 1 must satisfy the congruence pattern
/// (fourth column = 0 mod p except entry (2,4) = 0 mod p^2; second row
/// = 0 mod p; everything else unconstrained).
bool is_in_gamma1p(const SymplecticMatrix& g, long p);

/// Fractional linear action (A tau + B)(C tau + D)^{-1}, symmetrized
/// against round-off. Throws if C tau + D is numerically singular
/// (condition estimate above 1e12) or the result leaves Siegel space.
SiegelPoint act(const SymplecticMatrix& g, const SiegelPoint& tau);

/// det(C tau + D) for the automorphy factor.
Complex automorphy_det(const SymplecticMatrix& g, const SiegelPoint& tau);

}  // namespace moduli
