#include "doctest.h"
#include "helpers.hpp"
#include "qmp/rowcol_det.hpp"

using namespace qmp;
using namespace qmp::testing;

namespace {

Quaternion Q(const char* s) { return parse_quaternion(s); }

// 2x2 with entries chosen so every distinct monomial order is distinguishable
QMatrix probe2() {
    return matrix_from(
        "2 2\n"
        "i j\n"
        "k 1+2i+3j+4k\n");
}

}  // namespace

TEST_CASE("determinants of a 1x1 matrix") {
    const QMatrix A = matrix_from("1 1\n2-i+j-k\n");
    CHECK(row_det(A, 1) == Q("2-i+j-k"));
    CHECK(col_det(A, 1) == Q("2-i+j-k"));
}

TEST_CASE("2x2 closed forms") {
    const QMatrix A = probe2();
    const Quaternion a = A.at(1, 1), b = A.at(1, 2), c = A.at(2, 1), d = A.at(2, 2);
    CHECK(row_det(A, 1) == a * d - b * c);
    CHECK(row_det(A, 2) == d * a - c * b);
    CHECK(col_det(A, 1) == d * a - b * c);
    CHECK(col_det(A, 2) == a * d - c * b);
}

TEST_CASE("sample values: the 21 minor and the vanishing Gram determinant") {
    const QMatrix H = example_herm2();
    CHECK(row_det(H, 1) == Q("21"));
    CHECK(row_det(H, 2) == Q("21"));
    CHECK(col_det(H, 1) == Q("21"));
    CHECK(col_det(H, 2) == Q("21"));

    const QMatrix A = example_a();
    const QMatrix G = mat_mul(A, hermitian_adjoint(A));
    for (std::size_t t = 1; t <= 3; ++t) {
        CHECK(row_det(G, t) == Quaternion());
        CHECK(col_det(G, t) == Quaternion());
    }
}

TEST_CASE("determinant preconditions") {
    const QMatrix A = example_a();
    CHECK_THROWS_AS(row_det(A, 1), NotSquare);
    CHECK_THROWS_AS(col_det(A, 1), NotSquare);
    const QMatrix H = example_herm2();
    CHECK_THROWS_AS(row_det(H, 0), IndexOutOfRange);
    CHECK_THROWS_AS(row_det(H, 3), IndexOutOfRange);
    CHECK_THROWS_AS(col_det(H, 9), IndexOutOfRange);
    CHECK_THROWS_AS(row_det(QMatrix::identity(8), 1), SizeCapExceeded);
    CHECK_THROWS_AS(col_det(QMatrix::identity(8), 1), SizeCapExceeded);
    CHECK(row_det(QMatrix::identity(7), 1) == Q("1"));
}

TEST_CASE("monomial census: n! terms, sign from the cycle count") {
    auto rng = make_rng(301);
    for (std::size_t n = 1; n <= 4; ++n) {
        const QMatrix A = random_matrix(rng, n, n);
        for (const DetKind kind : {DetKind::Row, DetKind::Col}) {
            const auto monomials = det_monomials(A, 1, kind);
            std::size_t fact = 1;
            for (std::size_t t = 2; t <= n; ++t) fact *= t;
            CHECK(monomials.size() == fact);
            Quaternion total;
            for (const DetMonomial& m : monomials) {
                CHECK(m.sign == ((n - m.cycle_count) % 2 == 0 ? 1 : -1));
                total = total + q_scale(Rational(m.sign), m.value);
            }
            CHECK(total == (kind == DetKind::Row ? row_det(A, 1) : col_det(A, 1)));
        }
    }
}

TEST_CASE("cycle decomposition ordering") {
    // permutation (1 3)(2)(4 5) of {1..5}, anchored at 1
    const std::vector<std::size_t> perm{3, 2, 1, 5, 4};
    const CycleDecomposition d = CycleDecomposition::from_permutation(perm, 1);
    REQUIRE(d.cycle_count() == 3);
    CHECK(d.cycles[0] == std::vector<std::size_t>{1, 3});
    CHECK(d.cycles[1] == std::vector<std::size_t>{2});
    CHECK(d.cycles[2] == std::vector<std::size_t>{4, 5});

    // same permutation anchored inside the last cycle
    const CycleDecomposition e = CycleDecomposition::from_permutation(perm, 5);
    CHECK(e.cycles[0] == std::vector<std::size_t>{5, 4});
    CHECK(e.cycles[1] == std::vector<std::size_t>{1, 3});
    CHECK(e.cycles[2] == std::vector<std::size_t>{2});
}

TEST_CASE("row/column determinants are conjugate-dual") {
    auto rng = make_rng(302);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 4;
        const QMatrix A = random_matrix(rng, n, n);
        const QMatrix As = hermitian_adjoint(A);
        for (std::size_t idx = 1; idx <= n; ++idx)
            CHECK(row_det(As, idx) == q_conj(col_det(A, idx)));
    }
}

TEST_CASE("row homogeneity and column homogeneity") {
    auto rng = make_rng(303);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 4;
        const QMatrix A = random_matrix(rng, n, n);
        const Quaternion b = random_quaternion(rng);
        const std::size_t i = 1 + t % n;

        const QMatrix Ar = replace_row(A, i, scalar_mul(b, row_of(A, i)));
        CHECK(row_det(Ar, i) == b * row_det(A, i));

        QMatrix col = column_of(A, i);
        for (std::size_t s = 1; s <= n; ++s) col.at(s, 1) = col.at(s, 1) * b;
        const QMatrix Ac = replace_column(A, i, col);
        CHECK(col_det(Ac, i) == col_det(A, i) * b);
    }
}

TEST_CASE("row and column additivity at any position") {
    auto rng = make_rng(304);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 3;
        const QMatrix A = random_matrix(rng, n, n);
        const std::size_t pos = 1 + t % n;     // the split row/column
        const std::size_t anchor = 1 + (t / n) % n;

        const QMatrix u = random_matrix(rng, 1, n);
        const QMatrix v = random_matrix(rng, 1, n);
        const QMatrix Auv = replace_row(A, pos, mat_add(u, v));
        const QMatrix Au = replace_row(A, pos, u);
        const QMatrix Av = replace_row(A, pos, v);
        CHECK(row_det(Auv, anchor) == row_det(Au, anchor) + row_det(Av, anchor));
        CHECK(col_det(Auv, anchor) == col_det(Au, anchor) + col_det(Av, anchor));

        const QMatrix cu = random_matrix(rng, n, 1);
        const QMatrix cv = random_matrix(rng, n, 1);
        const QMatrix Buv = replace_column(A, pos, mat_add(cu, cv));
        const QMatrix Bu = replace_column(A, pos, cu);
        const QMatrix Bv = replace_column(A, pos, cv);
        CHECK(row_det(Buv, anchor) == row_det(Bu, anchor) + row_det(Bv, anchor));
        CHECK(col_det(Buv, anchor) == col_det(Bu, anchor) + col_det(Bv, anchor));
    }
}

TEST_CASE("cofactor expansions reproduce the determinants") {
    const QMatrix H = example_herm2();
    CHECK(right_cofactor(H, 1, 1) == H.at(2, 2));
    Quaternion expansion;
    for (std::size_t j = 1; j <= 2; ++j)
        expansion = expansion + H.at(1, j) * right_cofactor(H, 1, j);
    CHECK(expansion == Q("21"));

    // n = 1 convention: the diagonal cofactor is 1
    const QMatrix one = matrix_from("1 1\n3+i\n");
    CHECK(right_cofactor(one, 1, 1) == Q("1"));
    CHECK(left_cofactor(one, 1, 1) == Q("1"));

    auto rng = make_rng(305);
    for (int t = 0; t < 12; ++t) {
        const std::size_t n = 1 + t % 4;
        const QMatrix A = random_matrix(rng, n, n);
        for (std::size_t i = 1; i <= n; ++i) {
            Quaternion row_sum;
            for (std::size_t j = 1; j <= n; ++j)
                row_sum = row_sum + A.at(i, j) * right_cofactor(A, i, j);
            CHECK(row_sum == row_det(A, i));
        }
        for (std::size_t j = 1; j <= n; ++j) {
            Quaternion col_sum;
            for (std::size_t i = 1; i <= n; ++i)
                col_sum = col_sum + left_cofactor(A, i, j) * A.at(i, j);
            CHECK(col_sum == col_det(A, j));
        }
    }
}

TEST_CASE("hermitian determinant is the common real value") {
    CHECK(hermitian_det(example_herm2()) == Rational(21));
    CHECK(hermitian_det(QMatrix::identity(4)) == Rational(1));

    const QMatrix A = example_a();
    CHECK(hermitian_det(mat_mul(A, hermitian_adjoint(A))) == Rational(0));
    CHECK_THROWS_AS(hermitian_det(A), NotHermitian);
    CHECK_THROWS_AS(hermitian_det(probe2()), NotHermitian);

    auto rng = make_rng(306);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 4;
        const QMatrix H = random_hermitian(rng, n);
        const Rational d = hermitian_det(H);
        for (std::size_t idx = 1; idx <= n; ++idx) {
            CHECK(row_det(H, idx) == Quaternion(d));
            CHECK(col_det(H, idx) == Quaternion(d));
        }
    }
}

TEST_CASE("double determinant") {
    CHECK(double_det(matrix_from("2 2\ni 0\n0 j\n")) == Rational(1));
    CHECK(double_det(QMatrix::identity(3)) == Rational(1));
    CHECK(double_det(matrix_from("2 2\n1+i 1+i\n2j 2j\n")) == Rational(0));
    CHECK_THROWS_AS(double_det(example_a()), NotSquare);

    auto rng = make_rng(307);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 1 + t % 4;
        const QMatrix A = random_matrix(rng, n, n);
        const QMatrix As = hermitian_adjoint(A);
        CHECK(hermitian_det(mat_mul(As, A)) == hermitian_det(mat_mul(A, As)));
        CHECK(double_det(A) == hermitian_det(mat_mul(As, A)));
    }
}

TEST_CASE("determinants vanish on dependent rows and columns") {
    auto rng = make_rng(308);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 + t % 3;
        const QMatrix H = random_hermitian(rng, n);
        const std::size_t i = 1 + t % n;

        // replace row i by a left linear combination of the other rows
        QMatrix combo(1, n);
        for (std::size_t s = 1; s <= n; ++s) {
            if (s == i) continue;
            combo = mat_add(combo, scalar_mul(random_quaternion(rng), row_of(H, s)));
        }
        const QMatrix B = replace_row(H, i, combo);
        CHECK(row_det(B, i) == Quaternion());
        CHECK(col_det(B, i) == Quaternion());
    }

    for (int t = 0; t < 10; ++t) {
        const std::size_t m = 2 + t % 3, n = 1 + t % 2;
        const QMatrix A = random_matrix(rng, m, n);
        // append a column that is a right linear combination of A's columns
        QMatrix wide(m, n + 1);
        QMatrix last(m, 1);
        for (std::size_t j = 1; j <= n; ++j) {
            const Quaternion c = random_quaternion(rng);
            for (std::size_t s = 1; s <= m; ++s) {
                wide.at(s, j) = A.at(s, j);
                last.at(s, 1) = last.at(s, 1) + A.at(s, j) * c;
            }
        }
        for (std::size_t s = 1; s <= m; ++s) wide.at(s, n + 1) = last.at(s, 1);
        const QMatrix Ws = hermitian_adjoint(wide);
        CHECK(hermitian_det(mat_mul(Ws, wide)) == Rational(0));
    }
}

TEST_CASE("principal minor sums") {
    const QMatrix A = example_a();
    const QMatrix G = mat_mul(A, hermitian_adjoint(A));
    CHECK(principal_minor_sum(G, 1) == Rational(15));  // the trace 4+7+4
    CHECK(principal_minor_sum(G, 2) == Rational(42));
    CHECK(principal_minor_sum(G, 3) == hermitian_det(G));

    const QMatrix D = matrix_from("2 2\n1 0\n0 2\n");
    CHECK(principal_minor_sum(D, 1) == Rational(3));

    CHECK_THROWS_AS(principal_minor_sum(A, 1), NotHermitian);
    CHECK_THROWS_AS(principal_minor_sum(G, 0), InvalidArgument);
    CHECK_THROWS_AS(principal_minor_sum(G, 4), InvalidArgument);
}

TEST_CASE("characteristic polynomial") {
    const QMatrix D = matrix_from("2 2\n1 0\n0 2\n");
    CHECK(char_poly(D).to_string() == "t^2 - 3t + 2");

    const QMatrix one = matrix_from("1 1\n5\n");
    CHECK(char_poly(one).to_string() == "t - 5");
    CHECK(char_poly(matrix_from("1 1\n0\n")).to_string() == "t");

    const QMatrix A = example_a();
    const QMatrix G = mat_mul(A, hermitian_adjoint(A));
    const RealPolynomial p = char_poly(G);
    CHECK(p.to_string() == "t^3 - 15t^2 + 42t");
    CHECK(p.coeffs == std::vector<Rational>{Rational(1), Rational(-15), Rational(42), Rational(0)});

    CHECK_THROWS_AS(char_poly(A), NotHermitian);

    // coefficients agree with det(tI - A) at n+1 points
    auto rng = make_rng(309);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 4;
        const QMatrix H = random_hermitian(rng, n);
        const RealPolynomial q = char_poly(H);
        for (int v = 0; v <= static_cast<int>(n); ++v) {
            const Rational tv(2 * v + 1, 2);  // distinct non-integer points
            QMatrix tIminus = scalar_mul(Quaternion(tv), QMatrix::identity(n));
            tIminus = mat_sub(tIminus, H);
            CHECK(q.eval(tv) == hermitian_det(tIminus));
        }
    }
}

TEST_CASE("exact inverse from the double cofactor forms") {
    CHECK(hermitian_inverse(matrix_from("2 2\ni 0\n0 j\n")) == matrix_from("2 2\n-i 0\n0 -j\n"));
    CHECK(hermitian_inverse(QMatrix::identity(3)) == QMatrix::identity(3));
    CHECK_THROWS_AS(hermitian_inverse(matrix_from("2 2\n1+i 1+i\n2j 2j\n")), Singular);
    CHECK_THROWS_AS(hermitian_inverse(example_a()), NotSquare);

    auto rng = make_rng(310);
    int found = 0;
    while (found < 10) {
        const QMatrix A = random_matrix(rng, 3, 3);
        if (double_det(A) == 0) continue;
        ++found;
        const QMatrix X = hermitian_inverse(A);
        CHECK(mat_mul(A, X) == QMatrix::identity(3));
        CHECK(mat_mul(X, A) == QMatrix::identity(3));
    }
}

TEST_CASE("bordered coefficient lists") {
    // identity: the bordered matrix column is e_1, coefficients match a direct expansion
    const QMatrix I2 = QMatrix::identity(2);
    const auto coeffs = bordered_char_coeffs(I2, 1, 1);
    REQUIRE(coeffs.size() == 2);
    // (tI + A*A)_{.1}(a*_{.1}) at t has column (1, 0); direct cdet gives t + 1 -> c1 = 1, c2 = 1
    CHECK(coeffs[0] == Q("1"));
    CHECK(coeffs[1] == Q("1"));

    // polynomial rebuilt from coefficients agrees with the bordered determinant at t = 1, 2, 3
    auto rng = make_rng(311);
    for (int trial = 0; trial < 10; ++trial) {
        const QMatrix A = random_matrix(rng, 2, 3);
        if (is_zero(A)) continue;
        const QMatrix As = hermitian_adjoint(A);
        const QMatrix G = mat_mul(As, A);
        const std::size_t n = A.cols();
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= A.rows(); ++j) {
                const auto c = bordered_char_coeffs(A, i, j);
                for (int tv = 1; tv <= 3; ++tv) {
                    const Rational t(tv);
                    QMatrix tIG = mat_add(scalar_mul(Quaternion(t), QMatrix::identity(n)), G);
                    const QMatrix bordered = replace_column(tIG, i, column_of(As, j));
                    Quaternion poly;
                    Rational tpow(1);
                    for (std::size_t k = n; k >= 1; --k) {
                        poly = poly + q_scale(tpow, c[k - 1]);
                        tpow *= t;
                    }
                    CHECK(poly == col_det(bordered, i));
                }
            }
    }

    // coefficients vanish beyond the rank
    const QMatrix A = example_a();
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; j <= 3; ++j) {
            const auto c = bordered_char_coeffs(A, i, j);
            REQUIRE(c.size() == 4);
            CHECK(c[2] == Quaternion());
            CHECK(c[3] == Quaternion());
        }

    CHECK_THROWS_AS(bordered_char_coeffs(A, 5, 1), IndexOutOfRange);
    CHECK_THROWS_AS(bordered_char_coeffs(A, 1, 4), IndexOutOfRange);
}
