#include "qmp/qmatrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace qmp {

namespace {

void check_nonempty(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("matrices must be at least 1x1");
}

void check_index(std::size_t value, std::size_t bound, const char* what) {
    if (value < 1 || value > bound)
        throw IndexOutOfRange(std::string(what) + " index " + std::to_string(value) +
                              " out of range [1, " + std::to_string(bound) + "]");
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_nonempty(rows, cols);
    e_.assign(rows * cols, Quaternion());
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    check_nonempty(rows, cols);
    if (e_.size() != rows * cols)
        throw DimensionMismatch("entry count " + std::to_string(e_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix I(n, n);
    for (std::size_t t = 1; t <= n; ++t) I.at(t, t) = Quaternion(Rational(1));
    return I;
}

std::size_t QMatrix::index_of(std::size_t i, std::size_t j) const {
    check_index(i, rows_, "row");
    check_index(j, cols_, "column");
    return (i - 1) * cols_ + (j - 1);
}

const Quaternion& QMatrix::at(std::size_t i, std::size_t j) const { return e_[index_of(i, j)]; }

Quaternion& QMatrix::at(std::size_t i, std::size_t j) { return e_[index_of(i, j)]; }

IndexSet::IndexSet(std::vector<std::size_t> indices, std::size_t bound)
    : idx_(std::move(indices)), bound_(bound) {
    if (idx_.empty()) throw InvalidArgument("index set must be nonempty");
    for (std::size_t pos = 0; pos < idx_.size(); ++pos) {
        check_index(idx_[pos], bound_, "set");
        if (pos > 0 && idx_[pos - 1] >= idx_[pos])
            throw InvalidArgument("index set must be strictly increasing");
    }
}

bool IndexSet::contains(std::size_t value) const {
    return std::binary_search(idx_.begin(), idx_.end(), value);
}

std::size_t IndexSet::local_of(std::size_t value) const {
    const auto it = std::lower_bound(idx_.begin(), idx_.end(), value);
    if (it == idx_.end() || *it != value)
        throw IndexOutOfRange("index " + std::to_string(value) + " not in set");
    return static_cast<std::size_t>(it - idx_.begin()) + 1;
}

std::vector<IndexSet> enumerate_index_sets(std::size_t r, std::size_t n,
                                           std::optional<std::size_t> forced) {
    if (r < 1 || r > n)
        throw InvalidArgument("index set size " + std::to_string(r) + " out of range [1, " +
                              std::to_string(n) + "]");
    if (forced) check_index(*forced, n, "forced");

    std::vector<IndexSet> out;
    std::vector<std::size_t> pick(r);
    for (std::size_t t = 0; t < r; ++t) pick[t] = t + 1;
    while (true) {
        if (!forced || std::binary_search(pick.begin(), pick.end(), *forced))
            out.emplace_back(pick, n);
        // advance to the lexicographic successor
        std::size_t t = r;
        while (t > 0 && pick[t - 1] == n - r + t) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (std::size_t s = t; s < r; ++s) pick[s] = pick[s - 1] + 1;
    }
    return out;
}

QMatrix hermitian_adjoint(const QMatrix& A) {
    QMatrix B(A.cols(), A.rows());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) B.at(j, i) = q_conj(A.at(i, j));
    return B;
}

QMatrix mat_mul(const QMatrix& A, const QMatrix& B) {
    if (A.cols() != B.rows())
        throw DimensionMismatch("cannot multiply " + std::to_string(A.rows()) + "x" +
                                std::to_string(A.cols()) + " by " + std::to_string(B.rows()) +
                                "x" + std::to_string(B.cols()));
    QMatrix C(A.rows(), B.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= B.cols(); ++j) {
            Quaternion sum;
            for (std::size_t k = 1; k <= A.cols(); ++k)
                sum = q_add(sum, q_mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = sum;
        }
    return C;
}

namespace {

QMatrix zip(const QMatrix& A, const QMatrix& B, Quaternion (*op)(const Quaternion&, const Quaternion&)) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("entrywise op needs equal shapes");
    QMatrix C(A.rows(), A.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) C.at(i, j) = op(A.at(i, j), B.at(i, j));
    return C;
}

}  // namespace

QMatrix mat_add(const QMatrix& A, const QMatrix& B) { return zip(A, B, q_add); }

QMatrix mat_sub(const QMatrix& A, const QMatrix& B) { return zip(A, B, q_sub); }

QMatrix scalar_mul(const Quaternion& q, const QMatrix& A) {
    QMatrix C(A.rows(), A.cols());
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j) C.at(i, j) = q_mul(q, A.at(i, j));
    return C;
}

bool is_hermitian(const QMatrix& A) {
    if (A.rows() != A.cols()) return false;
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = i; j <= A.cols(); ++j)
            if (A.at(i, j) != q_conj(A.at(j, i))) return false;
    return true;
}

bool is_zero(const QMatrix& A) {
    for (std::size_t i = 1; i <= A.rows(); ++i)
        for (std::size_t j = 1; j <= A.cols(); ++j)
            if (!qmp::is_zero(A.at(i, j))) return false;
    return true;
}

QMatrix column_of(const QMatrix& A, std::size_t j) {
    check_index(j, A.cols(), "column");
    QMatrix c(A.rows(), 1);
    for (std::size_t i = 1; i <= A.rows(); ++i) c.at(i, 1) = A.at(i, j);
    return c;
}

QMatrix row_of(const QMatrix& A, std::size_t i) {
    check_index(i, A.rows(), "row");
    QMatrix r(1, A.cols());
    for (std::size_t j = 1; j <= A.cols(); ++j) r.at(1, j) = A.at(i, j);
    return r;
}

QMatrix replace_column(const QMatrix& A, std::size_t j, const QMatrix& b) {
    check_index(j, A.cols(), "column");
    if (b.rows() != A.rows() || b.cols() != 1)
        throw DimensionMismatch("replacement column must be " + std::to_string(A.rows()) + "x1");
    QMatrix C = A;
    for (std::size_t i = 1; i <= A.rows(); ++i) C.at(i, j) = b.at(i, 1);
    return C;
}

QMatrix replace_row(const QMatrix& A, std::size_t i, const QMatrix& b) {
    check_index(i, A.rows(), "row");
    if (b.cols() != A.cols() || b.rows() != 1)
        throw DimensionMismatch("replacement row must be 1x" + std::to_string(A.cols()));
    QMatrix C = A;
    for (std::size_t j = 1; j <= A.cols(); ++j) C.at(i, j) = b.at(1, j);
    return C;
}

QMatrix delete_row_col(const QMatrix& A, std::size_t i, std::size_t j) {
    if (A.rows() < 2 || A.cols() < 2)
        throw DimensionMismatch("cannot delete a row and column from a matrix this small");
    check_index(i, A.rows(), "row");
    check_index(j, A.cols(), "column");
    QMatrix C(A.rows() - 1, A.cols() - 1);
    for (std::size_t s = 1, si = 1; s <= A.rows(); ++s) {
        if (s == i) continue;
        for (std::size_t t = 1, tj = 1; t <= A.cols(); ++t) {
            if (t == j) continue;
            C.at(si, tj) = A.at(s, t);
            ++tj;
        }
        ++si;
    }
    return C;
}

QMatrix submatrix(const QMatrix& A, const IndexSet& alpha, const IndexSet& beta) {
    if (alpha.bound() > A.rows() || alpha[alpha.size() - 1] > A.rows())
        throw IndexOutOfRange("row set exceeds matrix rows");
    if (beta.bound() > A.cols() || beta[beta.size() - 1] > A.cols())
        throw IndexOutOfRange("column set exceeds matrix columns");
    QMatrix C(alpha.size(), beta.size());
    for (std::size_t s = 0; s < alpha.size(); ++s)
        for (std::size_t t = 0; t < beta.size(); ++t) C.at(s + 1, t + 1) = A.at(alpha[s], beta[t]);
    return C;
}

namespace {

struct Line {
    std::string text;
    std::size_t number;  // 1-based position in the file
};

// Splits into lines, validating the trailing newline and dropping comments.
std::vector<Line> significant_lines(std::string_view text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError("file must end with a newline", text.empty() ? 1 : 1 + std::count(text.begin(), text.end(), '\n'), 1);
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.front() == '#') {
            start = end + 1;
            continue;
        }
        lines.push_back({std::string(line), number});
        start = end + 1;
    }
    return lines;
}

std::size_t parse_count(const std::string& token, const Line& line, std::size_t column,
                        const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("expected ") + what + " count", line.number, column);
    const unsigned long long v = std::stoull(token);
    if (v < 1) throw ParseError(std::string(what) + " count must be at least 1", line.number, column);
    return static_cast<std::size_t>(v);
}

}  // namespace

QMatrix parse_qmat(std::string_view text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("missing header line", 1, 1);

    const Line& header = lines[0];
    const std::size_t space = header.text.find(' ');
    if (space == std::string::npos || header.text.find(' ', space + 1) != std::string::npos)
        throw ParseError("header must be \"<rows> <cols>\"", header.number, 1);
    const std::size_t rows = parse_count(header.text.substr(0, space), header, 1, "row");
    const std::size_t cols = parse_count(header.text.substr(space + 1), header, space + 2, "column");

    if (lines.size() - 1 < rows)
        throw ParseError("expected " + std::to_string(rows) + " data lines, got " +
                             std::to_string(lines.size() - 1),
                         lines.back().number, 1);
    if (lines.size() - 1 > rows)
        throw ParseError("unexpected extra line after matrix data", lines[rows + 1].number, 1);

    QMatrix A(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i) {
        const Line& line = lines[i];
        std::size_t column = 1;  // 1-based position within the line
        std::size_t start = 0;
        for (std::size_t j = 1; j <= cols; ++j) {
            if (start > line.text.size())
                throw ParseError("expected " + std::to_string(cols) + " entries on this row",
                                 line.number, line.text.size() + 1);
            std::size_t end = line.text.find(' ', start);
            if (end == std::string::npos) end = line.text.size();
            const std::string token = line.text.substr(start, end - start);
            if (token.empty())
                throw ParseError("empty entry (check for doubled spaces)", line.number, column);
            try {
                A.at(i, j) = parse_quaternion(token);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line.number, column + e.column - 1);
            }
            column += token.size() + 1;
            start = end + 1;
        }
        if (start <= line.text.size())
            throw ParseError("unexpected trailing content on data row", line.number, column);
    }
    return A;
}

QMatrix read_qmat_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_qmat(buf.str());
}

std::string format_qmat(const QMatrix& A) {
    std::string out = std::to_string(A.rows()) + " " + std::to_string(A.cols()) + "\n";
    for (std::size_t i = 1; i <= A.rows(); ++i) {
        for (std::size_t j = 1; j <= A.cols(); ++j) {
            if (j > 1) out += ' ';
            out += format_quaternion(A.at(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_qmat_file(const std::string& path, const QMatrix& A) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << format_qmat(A);
    if (!out) throw IOError("failed writing " + path);
}

}  // namespace qmp
