#ifndef QMP_RATIONAL_HPP
#define QMP_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "qmp/errors.hpp"

namespace qmp {

using Integer = boost::multiprecision::mpz_int;

// Exact arbitrary-precision rational. GMP keeps every value canonical
// (denominator > 0, lowest terms) as long as construction goes through
// make_rational or an integer; never construct from a raw "a/b" string,
// mpq_set_str skips canonicalization.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(num, den);
}

// Canonical text form: "n" when the denominator is 1, else "n/d".
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace qmp

#endif
