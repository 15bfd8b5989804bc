#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qmp/errors.hpp"
#include "qmp/qmatrix.hpp"

// Floating-point shadow of the exact engine. Everything here exists to
// cross-check the rational results by an independent computational route:
// Newton-Schulz iteration for the pseudoinverse, a regularized-inverse limit
// formula, and the determinant of the complex adjoint embedding. Float
// reductions run in a fixed order so results are reproducible per platform.

namespace qmp {

// Double-precision quaternion. Components must be finite; the constructor
// rejects NaN/Inf so poisoned values surface at the point of creation.
struct FloatQuaternion {
    double w{0}, x{0}, y{0}, z{0};

    FloatQuaternion() = default;
    FloatQuaternion(double w_, double x_, double y_, double z_);

    friend bool operator==(const FloatQuaternion&, const FloatQuaternion&) = default;
};

FloatQuaternion fq_add(const FloatQuaternion& a, const FloatQuaternion& b);
FloatQuaternion fq_sub(const FloatQuaternion& a, const FloatQuaternion& b);
FloatQuaternion fq_mul(const FloatQuaternion& a, const FloatQuaternion& b);
FloatQuaternion fq_conj(const FloatQuaternion& a);
FloatQuaternion fq_scale(double s, const FloatQuaternion& a);
double fq_norm_sq(const FloatQuaternion& a);

// Inverse by conjugate over squared norm. Throws DivisionByZero on zero.
FloatQuaternion fq_inv(const FloatQuaternion& a);

// Dense float quaternion matrix, 1-based accessors like QMatrix.
class FQMatrix {
   public:
    FQMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const FloatQuaternion& at(std::size_t i, std::size_t j) const;
    FloatQuaternion& at(std::size_t i, std::size_t j);

    static FQMatrix identity(std::size_t n);

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FloatQuaternion> entries_;
};

FQMatrix fmat_mul(const FQMatrix& A, const FQMatrix& B);
FQMatrix fmat_sub(const FQMatrix& A, const FQMatrix& B);
FQMatrix fmat_adjoint(const FQMatrix& A);
FQMatrix fmat_scale(double s, const FQMatrix& A);
double fmat_frobenius_norm(const FQMatrix& A);

FloatQuaternion to_float(const Quaternion& q);
FQMatrix to_float(const QMatrix& A);

// Largest absolute componentwise difference over all entries. Used by the
// cross-checks; shapes must agree (DimensionMismatch otherwise).
double max_component_diff(const FQMatrix& A, const FQMatrix& B);

// Dense complex matrix, 1-based accessors.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::complex<double>& at(std::size_t i, std::size_t j) const;
    std::complex<double>& at(std::size_t i, std::size_t j);

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::complex<double>> entries_;
};

// Complex adjoint representation. Writing A = A1 + A2*j with complex blocks
// A1, A2, the image is the 2m x 2n block matrix [[A1, A2], [-conj(A2),
// conj(A1)]]. The map is an algebra homomorphism, so determinants of the
// image track the double determinant of the source.
ComplexMatrix embed_complex(const QMatrix& A);

// LU with partial pivoting. A vanishing pivot means a numerically singular
// matrix; the result is then exactly 0.
std::complex<double> numeric_det(const ComplexMatrix& C);

// Newton-Schulz iteration X <- X(2I - AX) from X0 = A*/|A|_F^2, run until all
// four Penrose residual Frobenius norms drop below 1e-9. Throws ZeroMatrix
// for zero input and MaxIterations (with the final residuals in the message)
// if convergence is not reached.
FQMatrix numeric_pinv(const QMatrix& A);

// Float evaluation of (A*A + alpha*I)^{-1} A* by Gaussian elimination on the
// Hermitian positive-definite system. Row operations multiply on the left
// throughout; the pivot side matters over a noncommutative base. Requires
// alpha > 0 (InvalidArgument otherwise).
FQMatrix limit_pinv(const QMatrix& A, double alpha);

}  // namespace qmp
