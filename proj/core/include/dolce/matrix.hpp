#pragma once

#include <optional>
#include <vector>

#include "dolce/rational.hpp"

namespace dolce {

/// Dense matrix over the exact Gaussian rationals. Row major.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat transpose() const;
    Mat conj_transpose() const;

    std::vector<Scalar> row(int i) const;
    std::vector<Scalar> col(int j) const;
    void set_row(int i, const std::vector<Scalar>& v);

    /// Horizontal block paste of `b` starting at column j0 (rows must match).
    void paste(int i0, int j0, const Mat& b);

    Mat operator*(const Mat& b) const;
    std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
    Mat operator+(const Mat& b) const;
    Mat operator-(const Mat& b) const;
    Mat operator*(const Scalar& s) const;
    Mat operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Mat reduced;              // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
    int rank = 0;
};

/// Reduced row echelon form. The forward elimination is fraction-free
/// (one-step Bareiss over Gaussian integers after clearing denominators);
/// pivot normalization and back-substitution run over the field.
Echelon rref(const Mat& a);

/// Canonical basis of { x : A x = 0 }, one kernel vector per row.
Mat nullspace(const Mat& a);

/// One solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b);

/// Fraction-free determinant (square input).
Scalar det(const Mat& a);

/// Inverse of a nonsingular square matrix; throws internal_error if singular.
Mat inverse(const Mat& a);

}  // namespace dolce
