#pragma once

#include "dolce/cohomology.hpp"
#include "dolce/model.hpp"

namespace dolce {

struct HarmonicSpace {
    int p = 0, q = 0;
    Subspace kernel;  // coordinates in the (p,q) monomial basis
    int dim() const { return kernel.dim(); }
};

/// Metric side of the engine. The inner product on generators is the
/// document metric (identity by default, generators orthonormal); the
/// orientation is fixed by Vol = e^1 ^ ... ^ e^{2m}. Forms inherit the
/// inner product through compound minors, complex pieces through the
/// sesquilinear extension, and the star operator is cut out exactly by
/// <phi, eta> Vol = phi ^ star(conj eta).
class HarmonicContext {
  public:
    explicit HarmonicContext(const Model& model);

    const Model& model() const { return *model_; }

    /// Gram matrix of the real degree-k monomial basis.
    const Mat& gram_real(int k) const { return gram_real_[k]; }
    /// Hermitian Gram matrix of the (p,q) monomial basis.
    const Mat& gram(int p, int q) const;
    /// <u, v> for coordinate vectors in the (p,q) basis.
    Scalar inner(int p, int q, const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

    /// Star on real degree-k coordinates, A^k -> A^{2m-k}.
    const Mat& star_real(int k) const { return star_real_[k]; }
    /// Star on (p,q) coordinates, landing in (m-q, m-p).
    const Mat& star(int p, int q) const;
    FormVector star(const FormVector& f) const;

    /// Metric adjoint delta^* : conjugate transpose with respect to the
    /// Hermitian inner products; maps the target of delta back to (p,q)
    /// where (p,q) is delta's source.
    Mat adjoint(OpKind delta, int p, int q) const;
    /// The star-and-conjugation route -det(g) * star conj(delta) star.
    /// Coincides with the metric adjoint exactly when d vanishes on
    /// (2m-1)-forms; the tests pin both the agreement there and the
    /// divergence off it.
    Mat adjoint_by_star(OpKind delta, int p, int q) const;

    /// Laplacian delta delta^* + delta^* delta on (p,q).
    Mat laplacian(OpKind delta, int p, int q) const;
    HarmonicSpace laplacian_harmonics(OpKind delta, int p, int q) const;

    /// Laplacian of the full differential d on real degree k.
    Mat laplacian_real_d(int k) const;

    /// Orthogonal projection onto a subspace of the (p,q) piece.
    Mat orthogonal_projector(int p, int q, const Subspace& onto) const;

  private:
    const Model* model_;
    Mat g_;  // metric on generators
    Scalar det_g_;
    std::vector<Mat> gram_real_;
    std::vector<Mat> star_real_;
    mutable std::map<std::pair<int, int>, Mat> gram_cplx_;
    mutable std::map<std::pair<int, int>, Mat> star_cplx_;
};

/// Exact orthogonal three-way splitting A^{p,q} = harmonic + image + coimage
/// for the mubar operator.
struct HodgeDecomposition {
    HarmonicSpace harmonic;
    Subspace image;    // mubar(A^{p+1,q-2})
    Subspace coimage;  // mubar^*(A^{p-1,q+2})
    bool orthogonal = false;
    bool spans = false;
};
HodgeDecomposition mubar_hodge_decomposition(const HarmonicContext& ctx, int p, int q);

/// The operator delbar_mubar = (projection onto mubar-harmonics) after
/// delbar, acting on mubar-harmonic spaces, its square-zero property, its
/// cohomology and its harmonic spaces.
class DelbarMubar {
  public:
    DelbarMubar(const HarmonicContext& ctx, int p);

    const HarmonicContext& context() const { return *ctx_; }
    int p() const { return p_; }
    /// mubar-harmonic basis at (p,q), one form per column.
    const Mat& harmonic_basis(int q) const { return basis_[q]; }
    int harmonic_dim(int q) const { return basis_[q].cols(); }
    /// delbar_mubar on harmonic coordinates, q -> q+1.
    const Mat& op(int q) const { return op_[q]; }
    /// adjoint route (projection after delta^*), q+1 -> q.
    const Mat& op_adjoint(int q) const { return op_adj_[q]; }

    CohomologyGroup cohomology(int q) const;
    HarmonicSpace harmonics(int q) const;  // kernel coordinates in the ambient (p,q) piece

    /// Three-way splitting of the mubar-harmonic space at (p,q); exact for
    /// unimodular inputs, reported otherwise.
    struct Splitting {
        bool orthogonal = false, spans = false, dims_match = false;
        bool ok() const { return orthogonal && spans && dims_match; }
    };
    Splitting splitting(int q) const;

  private:
    const HarmonicContext* ctx_;
    int p_;
    std::vector<Mat> basis_;
    std::vector<Mat> op_, op_adj_;
};

struct SerrePageReport {
    int r = 0;
    bool symmetric = false;  // dim E^{p,q}_r == dim E^{m-p,m-q}_r everywhere
};

struct SerreDualityReport {
    bool unimodular = false;
    std::vector<SerrePageReport> pages;  // r = 1..m+1
    bool all_pages_symmetric = false;
    /// star-conjugation carries delbar_mubar-harmonics at (p,q) bijectively
    /// onto (m-p, m-q); established for unimodular inputs.
    bool page1_witnessed = false;
    std::vector<std::string> notes;
};

SerreDualityReport serre_duality_check(const HarmonicContext& ctx);

/// The three equivalent formulations checked as independent booleans:
/// del = 0 on A^{m-1,m}; d = 0 on A^{2m-1}; b^{2m} = 1. All must agree with
/// the trace criterion.
struct SufficientConditionReport {
    bool del_vanishes_top = false;
    bool d_vanishes_top = false;
    bool top_de_rham_is_line = false;
    bool trace_unimodular = false;
    bool all_agree = false;
};
SufficientConditionReport sufficient_conditions(const Model& model);

}  // namespace dolce
