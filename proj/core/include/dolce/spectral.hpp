#pragma once

#include "dolce/model.hpp"

namespace dolce {

/// Dimension grid over the (m+1) x (m+1) bidegree square.
struct Grid {
    int m = 0;
    std::vector<int> dims;  // (m+1)*(m+1), row-major in p

    Grid() = default;
    explicit Grid(int m_) : m(m_), dims((m_ + 1) * (m_ + 1), 0) {}
    int& at(int p, int q) { return dims[p * (m + 1) + q]; }
    int at(int p, int q) const { return dims[p * (m + 1) + q]; }
    int total(int k) const;
    friend bool operator==(const Grid& a, const Grid& b) = default;
};

struct SpectralPage {
    int r = 1;
    Grid dims;
    std::map<std::pair<int, int>, std::vector<FormVector>> representatives;
};

struct FrolicherReport {
    std::vector<int> betti;
    std::vector<int> hodge_totals;  // sum of h^{p,q} over p+q = k
    std::vector<int> slack;         // hodge_totals - betti, nonnegative
    bool inequality_holds = false;
    bool euler_matches = false;
    int euler = 0;
};

/// The spectral sequence in the explicit witness-space model. X^{p,q}_r is
/// cut out by the staircase system
///     0 = mu a_{s-3} + del a_{s-2} + delbar a_{s-1} + mubar a_s,  s = 0..r,
/// on tuples (a_0..a_r), a_j of bidegree (p+j, q-j) (absent terms zero);
/// Y^{p,q}_r is the image of
///     eta = mu h_2 + del h_1 + delbar h_0 + mubar h_{-1}
/// over witness tuples (h_{-1}..h_{r-1}), h_j of bidegree (p-j, q+j-1),
/// subject to 0 = mu h_k + del h_{k-1} + delbar h_{k-2} + mubar h_{k-3} for
/// k = 3..r+2. Pages are the exact quotients X/Y; containment is checked
/// before every quotient. Computed spaces are memoized per (p,q,r).
class SpectralSequence {
  public:
    explicit SpectralSequence(const Model& model);

    const Model& model() const { return *model_; }

    const Subspace& x_space(int p, int q, int r);
    const Subspace& y_space(int p, int q, int r);

    SpectralPage page(int r);

    /// Pages never move past r = m+1 (d_r shifts p by r, off an m-wide grid),
    /// so E_{m+1} = E_infinity. Returns the limit page and the least r whose
    /// dimensions already equal it. Asserts sum over p+q=k of dim E_infinity
    /// equals b_k.
    std::pair<SpectralPage, int> e_infinity();

    /// d_1 on a page-1 class: [del a + delbar w] for any witness w of
    /// delbar a + mubar w = 0. The class is independent of the witness.
    std::vector<Scalar> d1_class(int p, int q, const FormVector& alpha, const FormVector& witness);
    /// A particular witness for alpha in X^{p,q}_1.
    FormVector d1_witness(int p, int q, const FormVector& alpha);
    /// Matrix of d_1 : E_1^{p,q} -> E_1^{p+1,q} on the page representatives.
    Mat d1_matrix(int p, int q);

    /// Quotient model of E_r^{p,q} (memoized with the spaces).
    const QuotientMap& page_quotient(int p, int q, int r);

  private:
    const Model* model_;
    std::map<std::tuple<int, int, int>, Subspace> x_cache_, y_cache_;
    std::map<std::tuple<int, int, int>, QuotientMap> quotient_cache_;
    std::map<int, SpectralPage> page_cache_;
};

/// b^k <= sum h^{p,q} per degree, and the alternating sums agree with the
/// Euler characteristic.
FrolicherReport frolicher_check(const Model& model);

}  // namespace dolce
