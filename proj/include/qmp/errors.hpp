#ifndef QMP_ERRORS_HPP
#define QMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmp {

// Error taxonomy for the whole library. Every throw site uses one of these
// types so callers (and the CLI) can map failures to stable categories.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; line/column are 1-based, 0 when not applicable.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what), line(line_), column(column_) {}
};

struct DivisionByZero : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct Singular : Error {
    using Error::Error;
};
struct ZeroMatrix : Error {
    using Error::Error;
};
struct SizeCapExceeded : Error {
    using Error::Error;
};
struct MaxIterations : Error {
    using Error::Error;
};
struct IOError : Error {
    using Error::Error;
};

}  // namespace qmp

#endif
