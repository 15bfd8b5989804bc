#ifndef QMP_QMATRIX_HPP
#define QMP_QMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmp/quaternion.hpp"

namespace qmp {

// Dense quaternion matrix, row-major, at least 1x1. Public indices are
// 1-based to match the usual a_{ij} notation. Library operations never
// mutate their inputs; the non-const accessor exists for construction only.
class QMatrix {
  public:
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Quaternion& at(std::size_t i, std::size_t j) const;
    Quaternion& at(std::size_t i, std::size_t j);

    bool operator==(const QMatrix&) const = default;

  private:
    std::size_t index_of(std::size_t i, std::size_t j) const;

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Quaternion> e_;
};

// Strictly increasing 1-based indices within [1, bound]; models the index
// sets alpha/beta that select principal submatrices.
class IndexSet {
  public:
    IndexSet(std::vector<std::size_t> indices, std::size_t bound);

    std::size_t size() const { return idx_.size(); }
    std::size_t bound() const { return bound_; }
    std::size_t operator[](std::size_t pos) const { return idx_[pos]; }  // 0-based pos
    bool contains(std::size_t value) const;

    // 1-based position of value within the set. Throws IndexOutOfRange if absent.
    std::size_t local_of(std::size_t value) const;

    const std::vector<std::size_t>& indices() const { return idx_; }
    bool operator==(const IndexSet&) const = default;

  private:
    std::vector<std::size_t> idx_;
    std::size_t bound_;
};

// All C(n,r) r-element index sets over [1,n] in lexicographic order; with
// `forced`, only the C(n-1,r-1) sets containing it.
std::vector<IndexSet> enumerate_index_sets(std::size_t r, std::size_t n,
                                           std::optional<std::size_t> forced = std::nullopt);

// Conjugate transpose; (A*)* = A.
QMatrix hermitian_adjoint(const QMatrix& A);

// Exact noncommutative product, entry (i,j) = sum_k A(i,k) * B(k,j).
QMatrix mat_mul(const QMatrix& A, const QMatrix& B);

QMatrix mat_add(const QMatrix& A, const QMatrix& B);
QMatrix mat_sub(const QMatrix& A, const QMatrix& B);

// Left scalar multiple (q * each entry, preserving factor order).
QMatrix scalar_mul(const Quaternion& q, const QMatrix& A);

// True iff A is square and equals its Hermitian adjoint entrywise.
bool is_hermitian(const QMatrix& A);

bool is_zero(const QMatrix& A);

// j-th column as an m x 1 matrix / i-th row as a 1 x n matrix.
QMatrix column_of(const QMatrix& A, std::size_t j);
QMatrix row_of(const QMatrix& A, std::size_t i);

// Copy of A with column j (row i) replaced; b must be rows x 1 (1 x cols).
QMatrix replace_column(const QMatrix& A, std::size_t j, const QMatrix& b);
QMatrix replace_row(const QMatrix& A, std::size_t i, const QMatrix& b);

// Copy of A with row i and column j removed; A must be at least 2x2.
QMatrix delete_row_col(const QMatrix& A, std::size_t i, std::size_t j);

// Rows indexed by alpha, columns by beta, in increasing index order.
QMatrix submatrix(const QMatrix& A, const IndexSet& alpha, const IndexSet& beta);

// .qmat text format:
//   line 1: "<rows> <cols>"
//   then exactly `rows` lines of `cols` quaternion literals separated by
//   single spaces. Lines starting with '#' are comments and are skipped.
//   The final data line must end with a newline.
QMatrix parse_qmat(std::string_view text);
QMatrix read_qmat_file(const std::string& path);
std::string format_qmat(const QMatrix& A);
void write_qmat_file(const std::string& path, const QMatrix& A);

}  // namespace qmp

#endif
