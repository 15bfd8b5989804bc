#include "qmp/pinv.hpp"

#include <cassert>
#include <utility>

namespace qmp {

namespace {

// Numerators and denominator of the cdet representation at minor order r:
// N(i,j) = minor-sum cdet over (A*A) with column i replaced by column j of A*,
// d = sum of all r x r principal minors of A*A.
std::pair<QMatrix, Rational> cdet_numerators(const QMatrix& A, std::size_t r) {
    const QMatrix As = hermitian_adjoint(A);
    const QMatrix G = mat_mul(As, A);  // n x n
    const std::size_t n = A.cols(), m = A.rows();

    Rational d(0);
    for (const IndexSet& beta : enumerate_index_sets(r, n))
        d += hermitian_det(submatrix(G, beta, beta));

    QMatrix N(n, m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            N.at(i, j) = detail::minor_sum_cdet(replace_column(G, i, column_of(As, j)), i, r);
    return {std::move(N), std::move(d)};
}

// Mirror over AA* with row determinants.
std::pair<QMatrix, Rational> rdet_numerators(const QMatrix& A, std::size_t r) {
    const QMatrix As = hermitian_adjoint(A);
    const QMatrix G = mat_mul(A, As);  // m x m
    const std::size_t n = A.cols(), m = A.rows();

    Rational d(0);
    for (const IndexSet& alpha : enumerate_index_sets(r, m))
        d += hermitian_det(submatrix(G, alpha, alpha));

    QMatrix N(n, m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            N.at(i, j) = detail::minor_sum_rdet(replace_row(G, j, row_of(As, i)), j, r);
    return {std::move(N), std::move(d)};
}

QMatrix scale_entries(const QMatrix& N, const Rational& divisor) {
    const Rational s = Rational(1) / divisor;
    QMatrix X(N.rows(), N.cols());
    for (std::size_t i = 1; i <= N.rows(); ++i)
        for (std::size_t j = 1; j <= N.cols(); ++j) X.at(i, j) = q_scale(s, N.at(i, j));
    return X;
}

void check_nonzero(const QMatrix& A) {
    if (is_zero(A)) throw ZeroMatrix("operation is undefined for the zero matrix");
}

#ifndef NDEBUG
bool penrose_ok(const QMatrix& A, const QMatrix& X) { return verify_penrose(A, X).all_ok(); }
#endif

}  // namespace

std::string_view to_string(PinvMethod m) {
    switch (m) {
        case PinvMethod::CdetForm: return "cdet-form";
        case PinvMethod::RdetForm: return "rdet-form";
        case PinvMethod::FullColRank: return "full-col-rank";
        case PinvMethod::FullRowRank: return "full-row-rank";
        case PinvMethod::SquareInverse: return "square-inverse";
        case PinvMethod::Zero: return "zero";
    }
    return "unknown";
}

std::size_t rank_of(const QMatrix& A) {
    if (is_zero(A)) return 0;
    const QMatrix G = mat_mul(hermitian_adjoint(A), A);
    const std::size_t n = A.cols();
    for (std::size_t k = std::min(A.rows(), n); k >= 1; --k)
        for (const IndexSet& beta : enumerate_index_sets(k, n))
            if (hermitian_det(submatrix(G, beta, beta)) != 0) return k;
    return 0;
}

PinvResult mp_inverse_cdet(const QMatrix& A) {
    check_nonzero(A);
    const std::size_t r = rank_of(A);
    auto [N, d] = cdet_numerators(A, r);
    PinvResult res{scale_entries(N, d), r, std::move(d), PinvMethod::CdetForm};
    assert(penrose_ok(A, res.pinv));
    return res;
}

PinvResult mp_inverse_rdet(const QMatrix& A) {
    check_nonzero(A);
    const std::size_t r = rank_of(A);
    auto [N, d] = rdet_numerators(A, r);
    PinvResult res{scale_entries(N, d), r, std::move(d), PinvMethod::RdetForm};
    assert(penrose_ok(A, res.pinv));
    return res;
}

PinvResult mp_inverse(const QMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    if (is_zero(A)) return {QMatrix(n, m), 0, Rational(1), PinvMethod::Zero};

    const std::size_t r = rank_of(A);
    PinvResult res = [&] {
        if (r == n && n == m)
            return PinvResult{hermitian_inverse(A), r, double_det(A), PinvMethod::SquareInverse};
        if (r == n) {
            auto [N, d] = cdet_numerators(A, r);
            return PinvResult{scale_entries(N, d), r, std::move(d), PinvMethod::FullColRank};
        }
        if (r == m) {
            auto [N, d] = rdet_numerators(A, r);
            return PinvResult{scale_entries(N, d), r, std::move(d), PinvMethod::FullRowRank};
        }
        auto [N, d] = cdet_numerators(A, r);
        return PinvResult{scale_entries(N, d), r, std::move(d), PinvMethod::CdetForm};
    }();
    assert(penrose_ok(A, res.pinv));
    return res;
}

PenroseReport verify_penrose(const QMatrix& A, const QMatrix& X) {
    if (X.rows() != A.cols() || X.cols() != A.rows())
        throw DimensionMismatch("candidate inverse must be " + std::to_string(A.cols()) + "x" +
                                std::to_string(A.rows()));
    const QMatrix AX = mat_mul(A, X);
    const QMatrix XA = mat_mul(X, A);
    return {is_hermitian(AX), is_hermitian(XA), mat_mul(AX, A) == A, mat_mul(XA, X) == X};
}

QMatrix projection_P(const QMatrix& A) {
    check_nonzero(A);
    const std::size_t r = rank_of(A);
    const QMatrix G = mat_mul(hermitian_adjoint(A), A);  // n x n
    const std::size_t n = G.rows();

    Rational d(0);
    for (const IndexSet& beta : enumerate_index_sets(r, n))
        d += hermitian_det(submatrix(G, beta, beta));
    const Rational s = Rational(1) / d;

    QMatrix P(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            P.at(i, j) =
                q_scale(s, detail::minor_sum_cdet(replace_column(G, i, column_of(G, j)), i, r));
    return P;
}

QMatrix projection_Q(const QMatrix& A) {
    check_nonzero(A);
    const std::size_t r = rank_of(A);
    const QMatrix G = mat_mul(A, hermitian_adjoint(A));  // m x m
    const std::size_t m = G.rows();

    Rational d(0);
    for (const IndexSet& alpha : enumerate_index_sets(r, m))
        d += hermitian_det(submatrix(G, alpha, alpha));
    const Rational s = Rational(1) / d;

    QMatrix Q(m, m);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            Q.at(i, j) =
                q_scale(s, detail::minor_sum_rdet(replace_row(G, j, row_of(G, i)), j, r));
    return Q;
}

QMatrix adj_left(const QMatrix& A) {
    check_nonzero(A);
    return cdet_numerators(A, rank_of(A)).first;
}

QMatrix adj_right(const QMatrix& A) {
    check_nonzero(A);
    return rdet_numerators(A, rank_of(A)).first;
}

}  // namespace qmp
