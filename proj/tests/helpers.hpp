#pragma once

#include <cstdint>
#include <random>

#include "qmp/qmatrix.hpp"

// Shared test utilities: seeded generators for the random families used by
// the property tests, plus the worked-example fixtures several suites share.

namespace qmp::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

// Quaternion with integer components in [lo, hi].
inline Quaternion random_quaternion(std::mt19937_64& rng, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> d(lo, hi);
    const int w = d(rng), x = d(rng), y = d(rng), z = d(rng);
    return {Rational(w), Rational(x), Rational(y), Rational(z)};
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo = -2,
                             int hi = 2) {
    QMatrix A(m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) A.at(i, j) = random_quaternion(rng, lo, hi);
    return A;
}

// B + B* is Hermitian for any square B.
inline QMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    const QMatrix B = random_matrix(rng, n, n);
    return mat_add(B, hermitian_adjoint(B));
}

inline QMatrix matrix_from(const char* qmat_text) { return parse_qmat(qmat_text); }

// The built-in sample system: left system x.A = y, A 3x4 of rank 2.
inline QMatrix example_a() {
    return matrix_from(
        "3 4\n"
        "i -k j 1\n"
        "2i j 1 k\n"
        "-1 j k i\n");
}

inline QMatrix example_y() { return matrix_from("1 4\ni j k 1\n"); }

// 42 times the example's pseudoinverse (the exact numerator matrix).
inline QMatrix example_pinv_numerators() {
    return matrix_from(
        "4 3\n"
        "-2-3i-2j-2k 2-12i+2j+2k -3+2i+2j-2k\n"
        "1+i+2j+6k -2+2i-6j-4k 1-i-6j+2k\n"
        "-2-i-6j-k 6-2i+4j+2k -1+2i+j-6k\n"
        "6+i+j+2k -4+2i-2j-6k 1-6i-2j+k\n");
}

// The rank-2 Hermitian principal block whose determinant is 21.
inline QMatrix example_herm2() {
    return matrix_from(
        "2 2\n"
        "4 2-i+j-k\n"
        "2+i-j+k 7\n");
}

}  // namespace qmp::testing
