#include "qmp/rowcol_det.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qmp {

namespace {

void check_square(const QMatrix& A) {
    if (A.rows() != A.cols())
        throw NotSquare("determinant needs a square matrix, got " + std::to_string(A.rows()) +
                        "x" + std::to_string(A.cols()));
}

void check_det_size(std::size_t n) {
    if (n > kMaxDetSize)
        throw SizeCapExceeded("determinant expansion is capped at n = " +
                              std::to_string(kMaxDetSize) + " (n! monomials); got n = " +
                              std::to_string(n));
}

void check_anchor(std::size_t idx, std::size_t n) {
    if (idx < 1 || idx > n)
        throw IndexOutOfRange("determinant index " + std::to_string(idx) +
                              " out of range [1, " + std::to_string(n) + "]");
}

// Ordered product of entries along one cycle walked from `start`:
// A(c0,c1) A(c1,c2) ... A(cl,c0); a fixed point contributes A(c,c).
Quaternion cycle_walk(const QMatrix& A, const std::vector<std::size_t>& cycle) {
    Quaternion prod = A.at(cycle[0], cycle.size() > 1 ? cycle[1] : cycle[0]);
    for (std::size_t t = 1; t < cycle.size(); ++t) {
        const std::size_t next = (t + 1 < cycle.size()) ? cycle[t + 1] : cycle[0];
        prod = q_mul(prod, A.at(cycle[t], next));
    }
    return prod;
}

Quaternion monomial_value(const QMatrix& A, const CycleDecomposition& d, DetKind kind) {
    if (kind == DetKind::Row) {
        // anchor cycle first, then the others by increasing minimum
        Quaternion prod = cycle_walk(A, d.cycles[0]);
        for (std::size_t c = 1; c < d.cycles.size(); ++c)
            prod = q_mul(prod, cycle_walk(A, d.cycles[c]));
        return prod;
    }
    // column kind: the others by decreasing minimum, anchor cycle last
    Quaternion prod;
    bool first = true;
    for (std::size_t c = d.cycles.size(); c-- > 1;) {
        const Quaternion block = cycle_walk(A, d.cycles[c]);
        prod = first ? block : q_mul(prod, block);
        first = false;
    }
    const Quaternion anchor_block = cycle_walk(A, d.cycles[0]);
    return first ? anchor_block : q_mul(prod, anchor_block);
}

template <typename Visit>
void for_each_monomial(const QMatrix& A, std::size_t idx, DetKind kind, Visit&& visit) {
    check_square(A);
    const std::size_t n = A.rows();
    check_det_size(n);
    check_anchor(idx, n);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        const CycleDecomposition d = CycleDecomposition::from_permutation(perm, idx);
        const std::size_t r = d.cycle_count();
        const int sign = ((n - r) % 2 == 0) ? 1 : -1;
        visit(sign, r, monomial_value(A, d, kind));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

Quaternion det_sum(const QMatrix& A, std::size_t idx, DetKind kind) {
    Quaternion total;
    for_each_monomial(A, idx, kind, [&](int sign, std::size_t, Quaternion value) {
        total = (sign > 0) ? q_add(total, value) : q_sub(total, value);
    });
    return total;
}

}  // namespace

CycleDecomposition CycleDecomposition::from_permutation(const std::vector<std::size_t>& perm,
                                                        std::size_t anchor) {
    const std::size_t n = perm.size();
    check_anchor(anchor, n);
    CycleDecomposition d;
    d.anchor = anchor;
    std::vector<bool> seen(n + 1, false);

    const auto trace = [&](std::size_t start) {
        std::vector<std::size_t> cycle{start};
        seen[start] = true;
        for (std::size_t t = perm[start - 1]; t != start; t = perm[t - 1]) {
            cycle.push_back(t);
            seen[t] = true;
        }
        return cycle;
    };

    d.cycles.push_back(trace(anchor));
    // ascending scan: each remaining cycle is discovered at, and walked from,
    // its minimum, so the non-anchor cycles come out sorted by minimum
    for (std::size_t s = 1; s <= n; ++s)
        if (!seen[s]) d.cycles.push_back(trace(s));
    return d;
}

Quaternion row_det(const QMatrix& A, std::size_t i) { return det_sum(A, i, DetKind::Row); }

Quaternion col_det(const QMatrix& A, std::size_t j) { return det_sum(A, j, DetKind::Col); }

std::vector<DetMonomial> det_monomials(const QMatrix& A, std::size_t idx, DetKind kind) {
    std::vector<DetMonomial> out;
    for_each_monomial(A, idx, kind, [&](int sign, std::size_t r, Quaternion value) {
        out.push_back({sign, r, std::move(value)});
    });
    return out;
}

Quaternion right_cofactor(const QMatrix& A, std::size_t i, std::size_t j) {
    check_square(A);
    const std::size_t n = A.rows();
    check_anchor(i, n);
    check_anchor(j, n);
    if (n == 1) return Quaternion(Rational(1));  // convention: empty minor
    if (i == j) return row_det(delete_row_col(A, i, i), 1);
    const QMatrix B = delete_row_col(replace_column(A, j, column_of(A, i)), i, i);
    const std::size_t local_j = j - (j > i ? 1 : 0);
    return q_neg(row_det(B, local_j));
}

Quaternion left_cofactor(const QMatrix& A, std::size_t i, std::size_t j) {
    check_square(A);
    const std::size_t n = A.rows();
    check_anchor(i, n);
    check_anchor(j, n);
    if (n == 1) return Quaternion(Rational(1));
    if (i == j) return col_det(delete_row_col(A, j, j), 1);
    const QMatrix B = delete_row_col(replace_row(A, i, row_of(A, j)), j, j);
    const std::size_t local_i = i - (i > j ? 1 : 0);
    return q_neg(col_det(B, local_i));
}

Rational hermitian_det(const QMatrix& A) {
    if (!is_hermitian(A)) throw NotHermitian("hermitian_det needs a Hermitian matrix");
    const Quaternion d = row_det(A, 1);
    assert(col_det(A, 1) == d);
    if (!is_real(d)) throw Error("internal: Hermitian determinant came out non-real");
    return d.w;
}

Rational double_det(const QMatrix& A) {
    check_square(A);
    const Rational d = hermitian_det(mat_mul(hermitian_adjoint(A), A));
    assert(hermitian_det(mat_mul(A, hermitian_adjoint(A))) == d);
    return d;
}

Rational principal_minor_sum(const QMatrix& A, std::size_t k) {
    if (!is_hermitian(A)) throw NotHermitian("principal minor sums need a Hermitian matrix");
    const std::size_t n = A.rows();
    if (k < 1 || k > n)
        throw InvalidArgument("minor order " + std::to_string(k) + " out of range [1, " +
                              std::to_string(n) + "]");
    Rational sum(0);
    for (const IndexSet& alpha : enumerate_index_sets(k, n))
        sum += hermitian_det(submatrix(A, alpha, alpha));
    return sum;
}

Rational RealPolynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (const Rational& c : coeffs) acc = acc * t + c;
    return acc;
}

std::string RealPolynomial::to_string() const {
    const std::size_t deg = degree();
    std::string out;
    for (std::size_t pos = 0; pos < coeffs.size(); ++pos) {
        const Rational& c = coeffs[pos];
        if (c == 0) continue;
        const std::size_t power = deg - pos;
        const bool leading = out.empty();
        const bool negative = c < 0;
        if (!leading) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const Rational mag = negative ? Rational(-c) : c;
        if (mag != 1 || power == 0) out += qmp::to_string(mag);
        if (power > 0) {
            out += "t";
            if (power > 1) out += "^" + std::to_string(power);
        }
    }
    return out.empty() ? "0" : out;
}

RealPolynomial char_poly(const QMatrix& A) {
    if (!is_hermitian(A)) throw NotHermitian("characteristic polynomial needs a Hermitian matrix");
    const std::size_t n = A.rows();
    RealPolynomial p;
    p.coeffs.assign(n + 1, Rational(0));
    p.coeffs[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational d_k = principal_minor_sum(A, k);
        p.coeffs[k] = (k % 2 == 1) ? Rational(-d_k) : d_k;
    }
    return p;
}

QMatrix hermitian_inverse(const QMatrix& A) {
    check_square(A);
    const std::size_t n = A.rows();
    const Rational dd = double_det(A);
    if (dd == 0) throw Singular("matrix has double determinant 0");
    const QMatrix As = hermitian_adjoint(A);
    const QMatrix AsA = mat_mul(As, A);
    const QMatrix AAs = mat_mul(A, As);
    const Rational inv_dd = Rational(1) / dd;

    QMatrix X(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const Quaternion via_cdet =
                q_scale(inv_dd, col_det(replace_column(AsA, i, column_of(As, j)), i));
            const Quaternion via_rdet =
                q_scale(inv_dd, row_det(replace_row(AAs, j, row_of(As, i)), j));
            if (via_cdet != via_rdet)
                throw Error("internal: the two double-cofactor inverse routes disagree");
            X.at(i, j) = via_cdet;
        }
    return X;
}

std::vector<Quaternion> bordered_char_coeffs(const QMatrix& A, std::size_t i, std::size_t j) {
    const std::size_t n = A.cols();
    if (i < 1 || i > n)
        throw IndexOutOfRange("column index " + std::to_string(i) + " out of range [1, " +
                              std::to_string(n) + "]");
    if (j < 1 || j > A.rows())
        throw IndexOutOfRange("row index " + std::to_string(j) + " out of range [1, " +
                              std::to_string(A.rows()) + "]");
    const QMatrix As = hermitian_adjoint(A);
    const QMatrix R = replace_column(mat_mul(As, A), i, column_of(As, j));
    std::vector<Quaternion> c;
    c.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) c.push_back(detail::minor_sum_cdet(R, i, k));
    return c;
}

namespace detail {

Quaternion minor_sum_cdet(const QMatrix& R, std::size_t anchor, std::size_t r) {
    check_square(R);
    Quaternion sum;
    for (const IndexSet& beta : enumerate_index_sets(r, R.rows(), anchor))
        sum = q_add(sum, col_det(submatrix(R, beta, beta), beta.local_of(anchor)));
    return sum;
}

Quaternion minor_sum_rdet(const QMatrix& R, std::size_t anchor, std::size_t r) {
    check_square(R);
    Quaternion sum;
    for (const IndexSet& alpha : enumerate_index_sets(r, R.rows(), anchor))
        sum = q_add(sum, row_det(submatrix(R, alpha, alpha), alpha.local_of(anchor)));
    return sum;
}

}  // namespace detail

}  // namespace qmp
