#include "dolce/subspace.hpp"

namespace dolce {

Subspace Subspace::span_rows(const Mat& rows) {
    Echelon e = rref(rows);
    Mat basis(e.rank, rows.cols());
    for (int i = 0; i < e.rank; ++i) basis.set_row(i, e.reduced.row(i));
    return Subspace(rows.cols(), std::move(basis));
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw containment_error("reduce: ambient mismatch");
    for (int i = 0; i < basis_.rows(); ++i) {
        int piv = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!basis_.at(i, j).is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        const Scalar f = v[piv];  // pivot of an RREF row is 1
        if (f.is_zero()) continue;
        for (int j = piv; j < ambient_; ++j) v[j] -= f * basis_.at(i, j);
    }
    return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    for (const Scalar& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw containment_error("contains: ambient mismatch");
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw containment_error("sum: ambient mismatch");
    Mat stacked(a.dim() + b.dim(), a.ambient());
    stacked.paste(0, 0, a.basis());
    stacked.paste(a.dim(), 0, b.basis());
    return Subspace::span_rows(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw containment_error("intersect: ambient mismatch");
    // v = alpha * A = beta * B; solve the joint system over (alpha, beta)
    Mat joint(a.ambient(), a.dim() + b.dim());
    joint.paste(0, 0, a.basis().transpose());
    joint.paste(0, a.dim(), -(b.basis().transpose()));
    Mat null = nullspace(joint);
    Mat vecs(null.rows(), a.ambient());
    for (int r = 0; r < null.rows(); ++r) {
        std::vector<Scalar> v(a.ambient());
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.ambient(); ++j) v[j] += null.at(r, i) * a.basis().at(i, j);
        vecs.set_row(r, v);
    }
    Subspace meet = Subspace::span_rows(vecs);
    if (meet.dim() != a.dim() + b.dim() - sum(a, b).dim())
        throw internal_error("intersect: dimension identity violated");
    return meet;
}

std::pair<Subspace, Subspace> kernel_image(const LinearOperator& op) {
    Subspace ker = Subspace::span_rows(nullspace(op.m));
    Subspace img = Subspace::span_rows(op.m.transpose());
    if (ker.dim() + img.dim() != op.src_dim())
        throw internal_error("kernel_image: rank-nullity violated");
    return {ker, img};
}

QuotientBasis quotient_basis(const Subspace& sub, const Subspace& quotient_by) {
    if (sub.ambient() != quotient_by.ambient())
        throw containment_error("quotient_basis: ambient mismatch");
    if (!sub.contains(quotient_by))
        throw containment_error("quotient_basis: quotient_by is not contained in sub");
    // reduce sub's rows against quotient_by and keep the independent residuals
    Mat residuals(sub.dim(), sub.ambient());
    int count = 0;
    Subspace running = quotient_by;
    for (int i = 0; i < sub.dim(); ++i) {
        std::vector<Scalar> w = running.reduce(sub.basis().row(i));
        bool zero = true;
        for (const Scalar& x : w)
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (zero) continue;
        residuals.set_row(count++, w);
        Mat one(1, sub.ambient());
        one.set_row(0, w);
        running = sum(running, Subspace::span_rows(one));
    }
    Mat reps(count, sub.ambient());
    for (int i = 0; i < count; ++i) reps.set_row(i, residuals.row(i));
    Echelon e = rref(reps);
    QuotientBasis out;
    out.representatives = Mat(e.rank, sub.ambient());
    for (int i = 0; i < e.rank; ++i) out.representatives.set_row(i, e.reduced.row(i));
    if (out.representatives.rows() != sub.dim() - quotient_by.dim())
        throw internal_error("quotient_basis: dimension mismatch");
    return out;
}

QuotientMap::QuotientMap(Subspace sub, Subspace quotient_by)
    : sub_(std::move(sub)), by_(std::move(quotient_by)) {
    reps_ = quotient_basis(sub_, by_);
    Mat stacked(reps_.dim() + by_.dim(), sub_.ambient());
    stacked.paste(0, 0, reps_.representatives);
    stacked.paste(reps_.dim(), 0, by_.basis());
    solve_matrix_ = stacked.transpose();
}

std::vector<Scalar> QuotientMap::coords(const std::vector<Scalar>& v) const {
    auto x = solve(solve_matrix_, v);
    if (!x) throw containment_error("QuotientMap::coords: vector outside the numerator");
    x->resize(reps_.dim());
    return *x;
}

std::vector<Scalar> QuotientMap::lift(const std::vector<Scalar>& c) const {
    if (static_cast<int>(c.size()) != reps_.dim()) throw internal_error("lift: size mismatch");
    std::vector<Scalar> v(sub_.ambient());
    for (int i = 0; i < reps_.dim(); ++i)
        for (int j = 0; j < sub_.ambient(); ++j) v[j] += c[i] * reps_.representatives.at(i, j);
    return v;
}

}  // namespace dolce
