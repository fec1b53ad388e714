#include "dolce/matrix.hpp"

namespace dolce {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::conj_transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j).conj();
    return t;
}

std::vector<Scalar> Mat::row(int i) const {
    std::vector<Scalar> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

std::vector<Scalar> Mat::col(int j) const {
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_row(int i, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != cols_) throw internal_error("set_row: size mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Mat::paste(int i0, int j0, const Mat& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_) throw internal_error("paste: out of range");
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

Mat Mat::operator*(const Mat& b) const {
    if (cols_ != b.rows_) throw internal_error("matrix product: shape mismatch");
    Mat c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

std::vector<Scalar> Mat::operator*(const std::vector<Scalar>& v) const {
    if (cols_ != static_cast<int>(v.size())) throw internal_error("matrix-vector product: shape mismatch");
    std::vector<Scalar> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Mat Mat::operator+(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw internal_error("matrix sum: shape mismatch");
    Mat c(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) c.data_[t] = data_[t] + b.data_[t];
    return c;
}

Mat Mat::operator-(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw internal_error("matrix difference: shape mismatch");
    Mat c(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) c.data_[t] = data_[t] - b.data_[t];
    return c;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat c(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) c.data_[t] = data_[t] * s;
    return c;
}

namespace {

// Gaussian integer used inside the fraction-free eliminations.
struct Zi {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

Zi mul(const Zi& a, const Zi& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Zi sub(const Zi& a, const Zi& b) { return {a.re - b.re, a.im - b.im}; }

mpz_class exact_div_z(const mpz_class& n, const mpz_class& d) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw internal_error("fraction-free elimination: non-exact division");
    return q;
}

// Exact division in Z[i]; the Bareiss recurrence guarantees divisibility.
Zi exact_div(const Zi& u, const Zi& v) {
    mpz_class n = v.re * v.re + v.im * v.im;
    if (n == 0) throw internal_error("fraction-free elimination: zero divisor");
    Zi t = mul(u, {v.re, -v.im});
    return {exact_div_z(t.re, n), exact_div_z(t.im, n)};
}

// Clears denominators row by row; row scaling preserves row space and kernel.
std::vector<std::vector<Zi>> to_integer_rows(const Mat& a) {
    std::vector<std::vector<Zi>> m(a.rows(), std::vector<Zi>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).re().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).im().get_den().get_mpz_t());
        }
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            m[i][j].re = x.re().get_num() * exact_div_z(l, x.re().get_den());
            m[i][j].im = x.im().get_num() * exact_div_z(l, x.im().get_den());
        }
    }
    return m;
}

// One-step Bareiss forward elimination; returns pivot columns. Row swaps are
// recorded in `sign` for determinant callers.
std::vector<int> bareiss_forward(std::vector<std::vector<Zi>>& m, int& sign) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivots;
    Zi prev{mpz_class(1), mpz_class(0)};
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) {
            std::swap(m[pr], m[r]);
            sign = -sign;
        }
        const Zi piv = m[r][c];
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = exact_div(sub(mul(piv, m[i][j]), mul(m[i][c], m[r][j])), prev);
            m[i][c] = {mpz_class(0), mpz_class(0)};
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Echelon rref(const Mat& a) {
    auto m = to_integer_rows(a);
    int sign = 1;
    Echelon e;
    e.pivots = bareiss_forward(m, sign);
    e.rank = static_cast<int>(e.pivots.size());

    // normalize pivots to 1 and eliminate upwards over the field
    Mat r(e.rank, a.cols());
    for (int i = 0; i < e.rank; ++i) {
        Scalar piv(Rational(m[i][e.pivots[i]].re), Rational(m[i][e.pivots[i]].im));
        for (int j = 0; j < a.cols(); ++j)
            r.at(i, j) = Scalar(Rational(m[i][j].re), Rational(m[i][j].im)) / piv;
    }
    for (int i = e.rank - 1; i >= 0; --i)
        for (int k = 0; k < i; ++k) {
            Scalar f = r.at(k, e.pivots[i]);
            if (f.is_zero()) continue;
            for (int j = e.pivots[i]; j < a.cols(); ++j) r.at(k, j) -= f * r.at(i, j);
        }
    e.reduced = std::move(r);
    return e;
}

Mat nullspace(const Mat& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat k(static_cast<int>(free_cols.size()), a.cols());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        int f = free_cols[t];
        k.at(static_cast<int>(t), f) = Scalar(1);
        for (int i = 0; i < e.rank; ++i) k.at(static_cast<int>(t), e.pivots[i]) = -e.reduced.at(i, f);
    }
    return k;
}

std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw internal_error("solve: rhs size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    aug.paste(0, 0, a);
    for (int i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
    Echelon e = rref(aug);
    for (int c : e.pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols());
    for (int i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced.at(i, a.cols());
    return x;
}

Scalar det(const Mat& a) {
    if (!a.is_square()) throw internal_error("det: non-square matrix");
    if (a.rows() == 0) return Scalar(1);

    // scale rows to Gaussian integers, remembering the scaling factors
    std::vector<std::vector<Zi>> m(a.rows(), std::vector<Zi>(a.cols()));
    Rational scale(1);
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < a.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).re().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).im().get_den().get_mpz_t());
        }
        scale *= Rational(l);
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            m[i][j].re = x.re().get_num() * exact_div_z(l, x.re().get_den());
            m[i][j].im = x.im().get_num() * exact_div_z(l, x.im().get_den());
        }
    }
    int sign = 1;
    auto pivots = bareiss_forward(m, sign);
    if (static_cast<int>(pivots.size()) < a.rows()) return Scalar(0);
    const Zi& last = m[a.rows() - 1][pivots.back()];
    Scalar d(Rational(last.re), Rational(last.im));
    return d * Scalar(Rational(sign) / scale);
}

Mat inverse(const Mat& a) {
    if (!a.is_square()) throw internal_error("inverse: non-square matrix");
    Mat aug(a.rows(), 2 * a.cols());
    aug.paste(0, 0, a);
    aug.paste(0, a.cols(), Mat::identity(a.rows()));
    Echelon e = rref(aug);
    if (e.rank < a.rows() || e.pivots[a.rows() - 1] >= a.cols())
        throw internal_error("inverse: singular matrix");
    Mat inv(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) inv.at(i, j) = e.reduced.at(i, a.cols() + j);
    return inv;
}

}  // namespace dolce
