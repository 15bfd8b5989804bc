#ifndef QMP_ROWCOL_DET_HPP
#define QMP_ROWCOL_DET_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qmp/qmatrix.hpp"

namespace qmp {

// Determinants expand all n! permutation monomials; anything larger than
// this is refused with SizeCapExceeded rather than appearing to hang.
inline constexpr std::size_t kMaxDetSize = 7;

enum class DetKind { Row, Col };

// A permutation of {1..n} written in the canonical cycle order used by the
// determinant definitions: the cycle through `anchor` first (walked from
// anchor), every other cycle walked from its minimum element, those cycles
// sorted by increasing minimum. Fixed points are kept as 1-cycles, so
// cycle_count() is the r in the sign (-1)^(n-r).
struct CycleDecomposition {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t anchor = 0;

    std::size_t cycle_count() const { return cycles.size(); }

    // perm maps t to perm[t-1] over {1..n}; anchor must lie in [1,n].
    static CycleDecomposition from_permutation(const std::vector<std::size_t>& perm,
                                               std::size_t anchor);
};

// One term of a determinant expansion: value is the ordered product of
// matrix entries along the canonical cycles, sign is (-1)^(n - cycle_count).
struct DetMonomial {
    int sign;
    std::size_t cycle_count;
    Quaternion value;
};

// Row determinant anchored at row i: monomials multiply the anchor cycle's
// walk first, then the remaining cycles by increasing minimum.
Quaternion row_det(const QMatrix& A, std::size_t i);

// Column determinant anchored at column j: monomials multiply the non-anchor
// cycles by decreasing minimum first, the anchor cycle's walk last.
Quaternion col_det(const QMatrix& A, std::size_t j);

// The full expansion behind row_det/col_det, one entry per permutation.
std::vector<DetMonomial> det_monomials(const QMatrix& A, std::size_t idx, DetKind kind);

// Cofactors: row_det(A, i) = sum_j A(i,j) * right_cofactor(A, i, j) and
// col_det(A, j) = sum_i left_cofactor(A, i, j) * A(i,j). The 1x1 diagonal
// cofactor is defined as 1 so the expansions hold at n = 1.
Quaternion right_cofactor(const QMatrix& A, std::size_t i, std::size_t j);
Quaternion left_cofactor(const QMatrix& A, std::size_t i, std::size_t j);

// Common value of all row and column determinants of a Hermitian matrix;
// provably real, returned as a Rational. Throws NotHermitian otherwise.
Rational hermitian_det(const QMatrix& A);

// det(A*A) for square A; equals det(AA*) (cross-checked in debug builds).
// Nonzero iff A is invertible.
Rational double_det(const QMatrix& A);

// Sum of all k x k principal minors of a Hermitian matrix.
Rational principal_minor_sum(const QMatrix& A, std::size_t k);

// Real polynomial with exact rational coefficients, degree-descending.
struct RealPolynomial {
    std::vector<Rational> coeffs;  // coeffs[0] is the leading coefficient

    std::size_t degree() const { return coeffs.size() - 1; }
    Rational eval(const Rational& t) const;
    std::string to_string() const;  // in the variable t, zero terms omitted
    bool operator==(const RealPolynomial&) const = default;
};

// Characteristic polynomial of a Hermitian matrix:
// t^n - d_1 t^{n-1} + d_2 t^{n-2} - ... + (-1)^n d_n with d_k the k-th
// principal minor sum.
RealPolynomial char_poly(const QMatrix& A);

// Exact two-sided inverse of any square A with double_det(A) != 0, built
// entrywise from both double-cofactor representations
//   (A^-1)(i,j) = cdet_i((A*A) with column i replaced by column j of A*) / ddet
//   (A^-1)(i,j) = rdet_j((AA*) with row j replaced by row i of A*) / ddet
// which are compared for equality. Throws Singular when ddet = 0.
QMatrix hermitian_inverse(const QMatrix& A);

// Coefficients c_1..c_n with
//   c_k = sum over k-element index sets beta containing i of
//         cdet at i of the beta-principal submatrix of
//         (A*A with column i replaced by column j of A*),
// so that c_1 t^{n-1} + ... + c_n equals the column determinant of the
// t-bordered matrix. Entries vanish for k > rank(A).
std::vector<Quaternion> bordered_char_coeffs(const QMatrix& A, std::size_t i, std::size_t j);

namespace detail {

// Sum over all r-element index sets containing `anchor` of the row/column
// determinant of the corresponding principal submatrix of R, anchored at the
// local position of `anchor` inside the set. This is the minor-sum pattern
// shared by the pseudoinverse, projection, and Cramer formulas.
Quaternion minor_sum_cdet(const QMatrix& R, std::size_t anchor, std::size_t r);
Quaternion minor_sum_rdet(const QMatrix& R, std::size_t anchor, std::size_t r);

}  // namespace detail

}  // namespace qmp

#endif
