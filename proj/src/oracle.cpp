#include "qmp/oracle.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qmp {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr std::size_t kMaxNewtonIters = 256;

void check_finite(double v) {
    if (!std::isfinite(v)) throw InvalidArgument("float quaternion component is not finite");
}

}  // namespace

FloatQuaternion::FloatQuaternion(double w_, double x_, double y_, double z_)
    : w(w_), x(x_), y(y_), z(z_) {
    check_finite(w);
    check_finite(x);
    check_finite(y);
    check_finite(z);
}

FloatQuaternion fq_add(const FloatQuaternion& a, const FloatQuaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

FloatQuaternion fq_sub(const FloatQuaternion& a, const FloatQuaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

FloatQuaternion fq_mul(const FloatQuaternion& a, const FloatQuaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

FloatQuaternion fq_conj(const FloatQuaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

FloatQuaternion fq_scale(double s, const FloatQuaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}

double fq_norm_sq(const FloatQuaternion& a) {
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

FloatQuaternion fq_inv(const FloatQuaternion& a) {
    const double n = fq_norm_sq(a);
    if (n == 0.0) throw DivisionByZero("float quaternion inverse of zero");
    return fq_scale(1.0 / n, fq_conj(a));
}

FQMatrix::FQMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be at least 1x1");
}

const FloatQuaternion& FQMatrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw IndexOutOfRange("float matrix index out of range");
    return entries_[(i - 1) * cols_ + (j - 1)];
}

FloatQuaternion& FQMatrix::at(std::size_t i, std::size_t j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw IndexOutOfRange("float matrix index out of range");
    return entries_[(i - 1) * cols_ + (j - 1)];
}

FQMatrix FQMatrix::identity(std::size_t n) {
    FQMatrix I(n, n);
    for (std::size_t i = 1; i <= n; ++i) I.at(i, i) = FloatQuaternion(1, 0, 0, 0);
    return I;
}

FQMatrix fmat_mul(const FQMatrix& A, const FQMatrix& B) {
    if (A.cols() != B.rows()) throw DimensionMismatch("float matrix product shape mismatch");
    FQMatrix C(A.rows(), B.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= B.cols(); ++j) {
            FloatQuaternion sum;
            for (std::size_t k = 1; k <= A.cols(); ++k)
                sum = fq_add(sum, fq_mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = sum;
        }
    return C;
}

FQMatrix fmat_sub(const FQMatrix& A, const FQMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("float matrix difference shape mismatch");
    FQMatrix C(A.rows(), A.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) C.at(i, j) = fq_sub(A.at(i, j), B.at(i, j));
    return C;
}

FQMatrix fmat_adjoint(const FQMatrix& A) {
    FQMatrix C(A.cols(), A.rows());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) C.at(j, i) = fq_conj(A.at(i, j));
    return C;
}

FQMatrix fmat_scale(double s, const FQMatrix& A) {
    FQMatrix C(A.rows(), A.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) C.at(i, j) = fq_scale(s, A.at(i, j));
    return C;
}

double fmat_frobenius_norm(const FQMatrix& A) {
    double sum = 0;
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) sum += fq_norm_sq(A.at(i, j));
    return std::sqrt(sum);
}

FloatQuaternion to_float(const Quaternion& q) {
    return {to_double(q.w), to_double(q.x), to_double(q.y), to_double(q.z)};
}

FQMatrix to_float(const QMatrix& A) {
    FQMatrix F(A.rows(), A.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) F.at(i, j) = to_float(A.at(i, j));
    return F;
}

double max_component_diff(const FQMatrix& A, const FQMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("component diff needs equal shapes");
    double worst = 0;
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) {
            const FloatQuaternion d = fq_sub(A.at(i, j), B.at(i, j));
            worst = std::max({worst, std::abs(d.w), std::abs(d.x), std::abs(d.y),
                              std::abs(d.z)});
        }
    return worst;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be at least 1x1");
}

const std::complex<double>& ComplexMatrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw IndexOutOfRange("complex matrix index out of range");
    return entries_[(i - 1) * cols_ + (j - 1)];
}

std::complex<double>& ComplexMatrix::at(std::size_t i, std::size_t j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw IndexOutOfRange("complex matrix index out of range");
    return entries_[(i - 1) * cols_ + (j - 1)];
}

ComplexMatrix embed_complex(const QMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    ComplexMatrix C(2 * m, 2 * n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const FloatQuaternion q = to_float(A.at(i, j));
            /* q = (w + x i) + (y + z i) j splits into the complex pair
               (a1, a2); the block images are a1, a2, -conj(a2), conj(a1). */
            const std::complex<double> a1(q.w, q.x);
            const std::complex<double> a2(q.y, q.z);
            C.at(i, j) = a1;
            C.at(i, j + n) = a2;
            C.at(i + m, j) = -std::conj(a2);
            C.at(i + m, j + n) = std::conj(a1);
        }
    return C;
}

std::complex<double> numeric_det(const ComplexMatrix& C) {
    if (C.rows() != C.cols()) throw NotSquare("determinant needs a square matrix");
    const std::size_t n = C.rows();
    ComplexMatrix U = C;
    std::complex<double> det(1, 0);
    for (std::size_t p = 1; p <= n; ++p) {
        std::size_t best = p;
        for (std::size_t s = p + 1; s <= n; ++s)
            if (std::abs(U.at(s, p)) > std::abs(U.at(best, p))) best = s;
        if (std::abs(U.at(best, p)) == 0.0) return {0, 0};
        if (best != p) {
            for (std::size_t t = 1; t <= n; ++t) std::swap(U.at(p, t), U.at(best, t));
            det = -det;
        }
        det *= U.at(p, p);
        for (std::size_t s = p + 1; s <= n; ++s) {
            const std::complex<double> factor = U.at(s, p) / U.at(p, p);
            for (std::size_t t = p; t <= n; ++t) U.at(s, t) -= factor * U.at(p, t);
        }
    }
    return det;
}

namespace {

bool all_zero(const FQMatrix& A) {
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j)
            if (fq_norm_sq(A.at(i, j)) != 0.0) return false;
    return true;
}

struct PenroseResiduals {
    double reproduce_a, reproduce_x, ax_herm, xa_herm;

    double worst() const {
        return std::max({reproduce_a, reproduce_x, ax_herm, xa_herm});
    }
};

PenroseResiduals penrose_residuals(const FQMatrix& A, const FQMatrix& X) {
    const FQMatrix AX = fmat_mul(A, X);
    const FQMatrix XA = fmat_mul(X, A);
    return {fmat_frobenius_norm(fmat_sub(fmat_mul(AX, A), A)),
            fmat_frobenius_norm(fmat_sub(fmat_mul(XA, X), X)),
            fmat_frobenius_norm(fmat_sub(fmat_adjoint(AX), AX)),
            fmat_frobenius_norm(fmat_sub(fmat_adjoint(XA), XA))};
}

}  // namespace

FQMatrix numeric_pinv(const QMatrix& A) {
    const FQMatrix F = to_float(A);
    if (all_zero(F)) throw ZeroMatrix("pseudoinverse iteration needs a nonzero matrix");
    const FQMatrix I = FQMatrix::identity(F.rows());
    const double fn = fmat_frobenius_norm(F);
    FQMatrix X = fmat_scale(1.0 / (fn * fn), fmat_adjoint(F));

    PenroseResiduals res = penrose_residuals(F, X);
    for (std::size_t iter = 0; iter < kMaxNewtonIters && res.worst() >= kResidualTol; ++iter) {
        X = fmat_mul(X, fmat_sub(fmat_scale(2.0, I), fmat_mul(F, X)));
        res = penrose_residuals(F, X);
    }
    if (res.worst() >= kResidualTol) {
        std::ostringstream msg;
        msg << "pseudoinverse iteration stalled; residuals: AXA-A=" << res.reproduce_a
            << " XAX-X=" << res.reproduce_x << " (AX)*-AX=" << res.ax_herm
            << " (XA)*-XA=" << res.xa_herm;
        throw MaxIterations(msg.str());
    }
    return X;
}

FQMatrix limit_pinv(const QMatrix& A, double alpha) {
    if (!(alpha > 0.0)) throw InvalidArgument("regularization parameter must be positive");
    const FQMatrix F = to_float(A);
    const std::size_t n = F.cols();
    const std::size_t m = F.rows();
    const FQMatrix Fs = fmat_adjoint(F);
    FQMatrix G = fmat_mul(Fs, F);
    for (std::size_t i = 1; i <= n; ++i) G.at(i, i) = fq_add(G.at(i, i), FloatQuaternion(alpha, 0, 0, 0));
    FQMatrix B = Fs;

    /* Forward elimination with rows scaled from the left; pivot by largest
       squared norm. G is Hermitian positive definite, so pivots stay nonzero. */
    for (std::size_t p = 1; p <= n; ++p) {
        std::size_t best = p;
        for (std::size_t s = p + 1; s <= n; ++s)
            if (fq_norm_sq(G.at(s, p)) > fq_norm_sq(G.at(best, p))) best = s;
        if (fq_norm_sq(G.at(best, p)) == 0.0)
            throw Error("internal: zero pivot in a positive-definite system");
        if (best != p) {
            for (std::size_t t = 1; t <= n; ++t) std::swap(G.at(p, t), G.at(best, t));
            for (std::size_t t = 1; t <= m; ++t) std::swap(B.at(p, t), B.at(best, t));
        }
        const FloatQuaternion pivot_inv = fq_inv(G.at(p, p));
        for (std::size_t s = p + 1; s <= n; ++s) {
            const FloatQuaternion factor = fq_mul(G.at(s, p), pivot_inv);
            for (std::size_t t = p; t <= n; ++t)
                G.at(s, t) = fq_sub(G.at(s, t), fq_mul(factor, G.at(p, t)));
            for (std::size_t t = 1; t <= m; ++t)
                B.at(s, t) = fq_sub(B.at(s, t), fq_mul(factor, B.at(p, t)));
        }
    }

    FQMatrix X(n, m);
    for (std::size_t p = n; p > 0; --p) {
        const FloatQuaternion pivot_inv = fq_inv(G.at(p, p));
        for (std::size_t t = 1; t <= m; ++t) {
            FloatQuaternion acc = B.at(p, t);
            for (std::size_t s = p + 1; s <= n; ++s)
                acc = fq_sub(acc, fq_mul(G.at(p, s), X.at(s, t)));
            X.at(p, t) = fq_mul(pivot_inv, acc);
        }
    }
    return X;
}

}  // namespace qmp
