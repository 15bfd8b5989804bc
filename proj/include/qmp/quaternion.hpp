#ifndef QMP_QUATERNION_HPP
#define QMP_QUATERNION_HPP

#include <string>
#include <string_view>

#include "qmp/rational.hpp"

namespace qmp {

// Quaternion w + x*i + y*j + z*k over exact rationals. Values are immutable
// in spirit: every operation below is pure and returns a fresh value.
struct Quaternion {
    Rational w;
    Rational x;
    Rational y;
    Rational z;

    Quaternion() : w(0), x(0), y(0), z(0) {}
    explicit Quaternion(Rational w_) : w(std::move(w_)), x(0), y(0), z(0) {}
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    bool operator==(const Quaternion&) const = default;
};

Quaternion q_add(const Quaternion& a, const Quaternion& b);
Quaternion q_sub(const Quaternion& a, const Quaternion& b);
Quaternion q_neg(const Quaternion& a);

// Hamilton product: i*i = j*j = k*k = i*j*k = -1. Noncommutative.
Quaternion q_mul(const Quaternion& a, const Quaternion& b);

Quaternion q_conj(const Quaternion& a);

// w^2 + x^2 + y^2 + z^2; zero iff a is zero.
Rational q_norm_sq(const Quaternion& a);

// Two-sided inverse conj(a) / |a|^2. Throws DivisionByZero on a = 0.
Quaternion q_inv(const Quaternion& a);

// Scale by a real rational (commutes with everything).
Quaternion q_scale(const Rational& s, const Quaternion& a);

bool is_real(const Quaternion& a);
bool is_zero(const Quaternion& a);

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) { return q_add(a, b); }
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) { return q_sub(a, b); }
inline Quaternion operator-(const Quaternion& a) { return q_neg(a); }
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return q_mul(a, b); }

// Literal grammar (no whitespace anywhere):
//   quat := term (('+'|'-') term)* | '0'
//   term := rat unit? | unit
//   unit := 'i' | 'j' | 'k'
//   rat  := int ('/' posint)?
// A '-' directly before a unit ("-i", "2-k") is accepted as the sign of an
// implicit coefficient 1. Throws ParseError with the 1-based column of the
// offending character.
Quaternion parse_quaternion(std::string_view text);

// Canonical form: terms ordered 1, i, j, k; zero terms omitted; the all-zero
// value prints "0"; denominators of 1 omitted; coefficients 1/-1 on a unit
// print as the bare/negated unit; sign attached to the numerator.
std::string format_quaternion(const Quaternion& q);

}  // namespace qmp

#endif
