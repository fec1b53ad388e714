#pragma once

#include <string>
#include <vector>

#include "dolce/matrix.hpp"

namespace dolce {

/// Raised when an exactly checked precondition between spaces fails
/// (ambient mismatch, missing containment). These signal bugs upstream.
struct containment_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Subspace of a fixed coordinate space, stored as a reduced row echelon
/// basis; membership tests and all set operations are exact.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(int ambient) { return Subspace(ambient, Mat(0, ambient)); }
    static Subspace full(int ambient) { return Subspace(ambient, Mat::identity(ambient)); }
    /// Span of the rows of `rows` (reduced on construction).
    static Subspace span_rows(const Mat& rows);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    /// Residual of v after elimination against the basis rows.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    Subspace(int ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}
    int ambient_ = 0;
    Mat basis_;  // RREF rows
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Exact intersection; dim(a&b) = dim a + dim b - dim(a+b) is asserted.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Exact linear map between two coordinate spaces; columns are the images
/// of the source basis vectors.
struct LinearOperator {
    Mat m;
    std::string src_label, dst_label;

    int src_dim() const { return m.cols(); }
    int dst_dim() const { return m.rows(); }
};

/// Kernel and image; rank-nullity is asserted.
std::pair<Subspace, Subspace> kernel_image(const LinearOperator& op);

/// Representatives completing `quotient_by` to a basis of `sub`. Throws
/// containment_error unless quotient_by is contained in sub.
struct QuotientBasis {
    Mat representatives;  // one representative per row
    int dim() const { return representatives.rows(); }
};
QuotientBasis quotient_basis(const Subspace& sub, const Subspace& quotient_by);

/// Coordinates on a fixed quotient sub/quotient_by: coords(v) are the
/// coefficients of [v] on the representative rows.
class QuotientMap {
  public:
    QuotientMap() = default;
    QuotientMap(Subspace sub, Subspace quotient_by);

    int dim() const { return reps_.representatives.rows(); }
    const Mat& representatives() const { return reps_.representatives; }
    const Subspace& numerator() const { return sub_; }
    const Subspace& denominator() const { return by_; }

    std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
    /// Representative form of coordinates c: c * representatives.
    std::vector<Scalar> lift(const std::vector<Scalar>& c) const;

  private:
    Subspace sub_, by_;
    QuotientBasis reps_;
    Mat solve_matrix_;  // [reps; by] stacked, transposed solves give coords
};

}  // namespace dolce
