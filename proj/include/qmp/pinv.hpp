#ifndef QMP_PINV_HPP
#define QMP_PINV_HPP

#include <cstddef>
#include <string_view>

#include "qmp/rowcol_det.hpp"

namespace qmp {

enum class PinvMethod {
    CdetForm,       // column-determinant minor sums over A*A
    RdetForm,       // row-determinant minor sums over AA*
    FullColRank,    // rank = n: single full-size column determinants
    FullRowRank,    // rank = m: single full-size row determinants
    SquareInverse,  // invertible square matrix: exact inverse
    Zero,           // zero matrix: pseudoinverse is the zero matrix
};

std::string_view to_string(PinvMethod m);

struct PinvResult {
    QMatrix pinv;          // n x m for an m x n input
    std::size_t rank;      // rank of the input
    Rational denominator;  // the minor sum dividing every entry; 1 when rank = 0
    PinvMethod method;
};

// Largest k with a nonzero k x k principal minor of A*A; 0 for the zero
// matrix. Searches k descending and stops at the first nonzero minor.
std::size_t rank_of(const QMatrix& A);

// Moore-Penrose inverse with entries
//   sum over r-sets beta containing i of cdet_i((A*A) col i <- col j of A*)
//   restricted to beta, divided by the sum of all r x r principal minors of
//   A*A, where r = rank(A). Throws ZeroMatrix on zero input.
PinvResult mp_inverse_cdet(const QMatrix& A);

// Mirror representation over AA* with row determinants; equals
// mp_inverse_cdet entrywise (the Moore-Penrose inverse is unique).
PinvResult mp_inverse_rdet(const QMatrix& A);

// Dispatching front door: zero matrix -> zero; invertible square -> exact
// inverse; rank = n -> full-size column-determinant form; rank = m ->
// full-size row-determinant form; otherwise the cdet minor-sum form.
PinvResult mp_inverse(const QMatrix& A);

// The four Penrose conditions, each checked by exact equality. X is the
// Moore-Penrose inverse of A iff all four hold.
struct PenroseReport {
    bool ax_hermitian;    // (AX)* = AX
    bool xa_hermitian;    // (XA)* = XA
    bool reproduces_a;    // AXA = A
    bool reproduces_x;    // XAX = X

    bool all_ok() const { return ax_hermitian && xa_hermitian && reproduces_a && reproduces_x; }
};

PenroseReport verify_penrose(const QMatrix& A, const QMatrix& X);

// Projections by their direct determinantal formulas; equal to
// mp_inverse(A).pinv * A and A * mp_inverse(A).pinv respectively.
QMatrix projection_P(const QMatrix& A);  // n x n
QMatrix projection_Q(const QMatrix& A);  // m x m

// Unscaled numerator matrices of the two pseudoinverse representations
// (both n x m): denominator * pseudoinverse. When rank = n,
// adj_left(A) * A = det(A*A) * I; when rank = m, A * adj_right(A) = det(AA*) * I.
QMatrix adj_left(const QMatrix& A);
QMatrix adj_right(const QMatrix& A);

}  // namespace qmp

#endif
