#include "qmp/lsq_cramer.hpp"

namespace qmp {

namespace {

Rational frobenius_norm_sq(const QMatrix& A) {
    Rational sum(0);
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) sum += q_norm_sq(A.at(i, j));
    return sum;
}

void check_right_shape(const QMatrix& A, const QMatrix& y) {
    if (y.rows() != A.rows() || y.cols() != 1)
        throw DimensionMismatch("right system needs y as a " + std::to_string(A.rows()) +
                                "x1 column");
}

void check_left_shape(const QMatrix& A, const QMatrix& y) {
    if (y.cols() != A.cols() || y.rows() != 1)
        throw DimensionMismatch("left system needs y as a 1x" + std::to_string(A.cols()) +
                                " row");
}

Rational minor_level_sum(const QMatrix& G, std::size_t r) {
    Rational d(0);
    for (const IndexSet& s : enumerate_index_sets(r, G.rows()))
        d += hermitian_det(submatrix(G, s, s));
    return d;
}

}  // namespace

std::string_view to_string(LsqMethod m) {
    switch (m) {
        case LsqMethod::CramerFullRank: return "cramer-full-rank";
        case LsqMethod::CramerRankDeficient: return "cramer-rank-deficient";
        case LsqMethod::MatrixMethod: return "matrix-method";
    }
    return "unknown";
}

LsqSolution lsq_right(const QMatrix& A, const QMatrix& y) {
    check_right_shape(A, y);
    if (is_zero(A)) throw ZeroMatrix("least squares is undefined for the zero matrix");
    const std::size_t n = A.cols();
    const std::size_t r = rank_of(A);
    const QMatrix As = hermitian_adjoint(A);
    const QMatrix G = mat_mul(As, A);
    const QMatrix f = mat_mul(As, y);
    const Rational s = Rational(1) / minor_level_sum(G, r);

    QMatrix x(n, 1);
    for (std::size_t j = 1; j <= n; ++j)
        x.at(j, 1) = q_scale(s, detail::minor_sum_cdet(replace_column(G, j, f), j, r));

    return {x, frobenius_norm_sq(mat_sub(mat_mul(A, x), y)),
            r == n ? LsqMethod::CramerFullRank : LsqMethod::CramerRankDeficient};
}

LsqSolution lsq_left(const QMatrix& A, const QMatrix& y) {
    check_left_shape(A, y);
    if (is_zero(A)) throw ZeroMatrix("least squares is undefined for the zero matrix");
    const std::size_t m = A.rows();
    const std::size_t r = rank_of(A);
    const QMatrix As = hermitian_adjoint(A);
    const QMatrix G = mat_mul(A, As);
    const QMatrix z = mat_mul(y, As);
    const Rational s = Rational(1) / minor_level_sum(G, r);

    QMatrix x(1, m);
    for (std::size_t i = 1; i <= m; ++i)
        x.at(1, i) = q_scale(s, detail::minor_sum_rdet(replace_row(G, i, z), i, r));

    return {x, frobenius_norm_sq(mat_sub(mat_mul(x, A), y)),
            r == m ? LsqMethod::CramerFullRank : LsqMethod::CramerRankDeficient};
}

LsqSolution solve_matrix_method(const QMatrix& A, const QMatrix& y, Side side) {
    if (side == Side::Right) {
        check_right_shape(A, y);
        const QMatrix x = mat_mul(mp_inverse(A).pinv, y);
        return {x, frobenius_norm_sq(mat_sub(mat_mul(A, x), y)), LsqMethod::MatrixMethod};
    }
    check_left_shape(A, y);
    const QMatrix x = mat_mul(y, mp_inverse(A).pinv);
    return {x, frobenius_norm_sq(mat_sub(mat_mul(x, A), y)), LsqMethod::MatrixMethod};
}

}  // namespace qmp
