#ifndef QMP_LSQ_CRAMER_HPP
#define QMP_LSQ_CRAMER_HPP

#include <string_view>

#include "qmp/pinv.hpp"

namespace qmp {

enum class LsqMethod {
    CramerFullRank,       // one full-size determinant per coordinate
    CramerRankDeficient,  // minor sums at the rank level
    MatrixMethod,         // explicit pseudoinverse product
};

std::string_view to_string(LsqMethod m);

enum class Side { Left, Right };

struct LsqSolution {
    QMatrix solution;          // n x 1 column for right systems, 1 x m row for left
    Rational residual_norm_sq; // squared norm of A*x - y (resp. x*A - y); 0 iff consistent
    LsqMethod method;
};

// Minimum-norm least-squares solution of A x = y (y is m x 1) by Cramer's
// rule: with f = A* y and r = rank(A),
//   x_j = [minor-sum cdet over (A*A) with column j replaced by f] / d_r,
// a single full determinant ratio when r = n. Equals mp_inverse(A).pinv * y.
LsqSolution lsq_right(const QMatrix& A, const QMatrix& y);

// Minimum-norm least-squares solution of x A = y (y is 1 x n): with
// z = y A* and r = rank(A),
//   x_i = [minor-sum rdet over (AA*) with row i replaced by z] / d_r.
// Equals y * mp_inverse(A).pinv.
LsqSolution lsq_left(const QMatrix& A, const QMatrix& y);

// The same solutions via the explicit pseudoinverse product.
LsqSolution solve_matrix_method(const QMatrix& A, const QMatrix& y, Side side);

}  // namespace qmp

#endif
