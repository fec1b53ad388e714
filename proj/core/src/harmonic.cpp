#include "dolce/harmonic.hpp"

#include <bit>

#include "dolce/spectral.hpp"

namespace dolce {

namespace {

// real matrix of monomial conjugation (x,y) -> (y,x)
Mat conj_matrix(const ExteriorAlgebra& alg, int p, int q) {
    const auto& src = alg.basis(p, q);
    Mat c(alg.dim(q, p), alg.dim(p, q));
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto [image, sign] = alg.conj_mono(src[i]);
        c.at(alg.index_in_bidegree(image), static_cast<int>(i)) = Scalar(sign);
    }
    return c;
}

std::vector<Scalar> conj_coords(std::vector<Scalar> v) {
    for (auto& x : v) x = x.conj();
    return v;
}

}  // namespace

HarmonicContext::HarmonicContext(const Model& model) : model_(&model) {
    const auto& alg = model.real_algebra();
    const int n = alg.generators();
    g_ = model.metric() ? *model.metric() : Mat::identity(n);
    if (!model.metric() && model.has_acs()) {
        // the harmonic theory needs a J-compatible inner product; average the
        // default one (a no-op whenever J is orthogonal)
        const Mat& j = model.j();
        g_ = (g_ + j.transpose() * g_ * j) * Scalar(Rational(1, 2));
    }
    if (model.has_acs() && !(model.j().transpose() * g_ * model.j() - g_).is_zero())
        throw internal_error("harmonic context: inner product is not J-compatible");
    det_g_ = det(g_);

    // coframe inner product is the inverse metric; k-monomials pair by minors
    Mat g_star = inverse(g_);
    for (int k = 0; k <= n; ++k) {
        const auto& basis = alg.basis(k);
        Mat gram(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                std::vector<int> ia, ib;
                for (Mono rest = basis[a]; rest; rest &= rest - 1) ia.push_back(std::countr_zero(rest));
                for (Mono rest = basis[b]; rest; rest &= rest - 1) ib.push_back(std::countr_zero(rest));
                Mat minor(k, k);
                for (int x = 0; x < k; ++x)
                    for (int y = 0; y < k; ++y) minor.at(x, y) = g_star.at(ia[x], ib[y]);
                gram.at(static_cast<int>(a), static_cast<int>(b)) = det(minor);
            }
        gram_real_.push_back(std::move(gram));
    }

    // star columns from the defining relation against Vol = e^{1..2m}
    const Mono full = (n == 32) ? ~Mono(0) : ((Mono(1) << n) - 1);
    for (int k = 0; k <= n; ++k) {
        const auto& basis = alg.basis(k);
        const auto& dual_basis = alg.basis(n - k);
        Mat star(static_cast<int>(dual_basis.size()), static_cast<int>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                // coefficient of star(e_i) on the complement of e_j
                const Scalar& inner = gram_real_[k].at(static_cast<int>(j), static_cast<int>(i));
                if (inner.is_zero()) continue;
                Mono comp = full & ~basis[j];
                int sign = wedge_sign(basis[j], comp);
                star.at(alg.index_in_degree(comp), static_cast<int>(i)) += Scalar(sign) * inner;
            }
        star_real_.push_back(std::move(star));
    }
}

const Mat& HarmonicContext::gram(int p, int q) const {
    auto it = gram_cplx_.find({p, q});
    if (it != gram_cplx_.end()) return it->second;
    const auto& cplx = model_->cplx_algebra();
    const auto& frame = model_->frame();
    const int k = p + q;
    const auto& piece = cplx.basis(p, q);
    const Mat& c_full = frame.cplx_to_real[k];
    Mat c(c_full.rows(), static_cast<int>(piece.size()));
    for (std::size_t col = 0; col < piece.size(); ++col) {
        int full_col = cplx.index_in_degree(piece[col]);
        for (int row = 0; row < c_full.rows(); ++row)
            c.at(row, static_cast<int>(col)) = c_full.at(row, full_col);
    }
    Mat k_mat = c.conj_transpose() * gram_real_[k] * c;
    return gram_cplx_.emplace(std::pair<int, int>{p, q}, std::move(k_mat)).first->second;
}

Scalar HarmonicContext::inner(int p, int q, const std::vector<Scalar>& u,
                              const std::vector<Scalar>& v) const {
    const Mat& k = gram(p, q);
    auto ku = k * u;
    Scalar out(0);
    for (std::size_t b = 0; b < v.size(); ++b) out += v[b].conj() * ku[b];
    return out;
}

const Mat& HarmonicContext::star(int p, int q) const {
    auto it = star_cplx_.find({p, q});
    if (it != star_cplx_.end()) return it->second;
    const auto& cplx = model_->cplx_algebra();
    const auto& frame = model_->frame();
    const int k = p + q;
    const int m = cplx.m();
    const int n = 2 * m;

    const auto& piece = cplx.basis(p, q);
    Mat full_route = frame.real_to_cplx[n - k] * star_real_[k] * frame.cplx_to_real[k];
    // restrict columns to (p,q), restrict rows to (m-q, m-p); other rows must vanish
    const auto& target = cplx.basis(m - q, m - p);
    Mat s(static_cast<int>(target.size()), static_cast<int>(piece.size()));
    for (std::size_t col = 0; col < piece.size(); ++col) {
        int full_col = cplx.index_in_degree(piece[col]);
        for (std::size_t row = 0; row < cplx.basis(n - k).size(); ++row) {
            const Scalar& c = full_route.at(static_cast<int>(row), full_col);
            if (c.is_zero()) continue;
            Mono mono = cplx.basis(n - k)[row];
            auto [tp, tq] = cplx.bidegree(mono);
            if (tp != m - q || tq != m - p)
                throw internal_error("star does not map (p,q) into (m-q, m-p)");
            s.at(cplx.index_in_bidegree(mono), static_cast<int>(col)) = c;
        }
    }
    return star_cplx_.emplace(std::pair<int, int>{p, q}, std::move(s)).first->second;
}

FormVector HarmonicContext::star(const FormVector& f) const {
    const auto& cplx = model_->cplx_algebra();
    if (f.is_zero()) return FormVector(cplx);
    auto [p, q] = cplx.bidegree(f.terms().begin()->first);
    auto coords = star(p, q) * f.bidegree_coords(p, q);
    return FormVector::from_bidegree_coords(cplx, cplx.m() - q, cplx.m() - p, coords);
}

Mat HarmonicContext::adjoint(OpKind delta, int p, int q) const {
    const auto& cplx = model_->cplx_algebra();
    auto [a, b] = op_bidegree(delta);
    const int tp = p + a, tq = q + b;
    if (!cplx.valid_bidegree(tp, tq)) return Mat(cplx.dim(p, q), 0);
    const Mat& mat = model_->quad().component(delta, p, q);
    return inverse(gram(p, q)) * mat.conj_transpose() * gram(tp, tq);
}

Mat HarmonicContext::adjoint_by_star(OpKind delta, int p, int q) const {
    const auto& cplx = model_->cplx_algebra();
    const int m = cplx.m();
    auto [a, b] = op_bidegree(delta);
    const int tp = p + a, tq = q + b;
    if (!cplx.valid_bidegree(tp, tq)) return Mat(cplx.dim(p, q), 0);

    // -det(g) * star . (conjugate operator of delta) . star, applied from the
    // target side. d is real, so the conjugate operator of a component is the
    // component of the opposite kind.
    OpKind conj_kind = OpKind::mu;
    switch (delta) {
        case OpKind::mu: conj_kind = OpKind::mubar; break;
        case OpKind::mubar: conj_kind = OpKind::mu; break;
        case OpKind::del: conj_kind = OpKind::delbar; break;
        case OpKind::delbar: conj_kind = OpKind::del; break;
    }
    const int sp = m - tq, sq = m - tp;  // the first star lands here
    const Mat& middle = model_->quad().component(conj_kind, sp, sq);
    auto [ca, cb] = op_bidegree(conj_kind);
    Mat composed = star(sp + ca, sq + cb) * middle * star(tp, tq);
    return composed * (-det_g_);
}

Mat HarmonicContext::laplacian(OpKind delta, int p, int q) const {
    const auto& cplx = model_->cplx_algebra();
    auto [a, b] = op_bidegree(delta);
    const int d = cplx.dim(p, q);
    Mat lap(d, d);
    if (cplx.valid_bidegree(p + a, q + b)) {
        const Mat& out = model_->quad().component(delta, p, q);
        lap = lap + adjoint(delta, p, q) * out;
    }
    if (cplx.valid_bidegree(p - a, q - b)) {
        const Mat& in = model_->quad().component(delta, p - a, q - b);
        lap = lap + in * adjoint(delta, p - a, q - b);
    }
    return lap;
}

HarmonicSpace HarmonicContext::laplacian_harmonics(OpKind delta, int p, int q) const {
    HarmonicSpace h;
    h.p = p;
    h.q = q;
    h.kernel = Subspace::span_rows(nullspace(laplacian(delta, p, q)));
    return h;
}

Mat HarmonicContext::laplacian_real_d(int k) const {
    const auto& alg = model_->real_algebra();
    const int n = alg.generators();
    const int d = static_cast<int>(alg.basis(k).size());
    Mat lap(d, d);
    auto gram_adjoint = [&](int deg) {
        // adjoint of d : A^deg -> A^{deg+1} with respect to the real Grams
        const Mat& mat = model_->d_real().at(deg);
        return inverse(gram_real_[deg]) * mat.conj_transpose() * gram_real_[deg + 1];
    };
    if (k < n) lap = lap + gram_adjoint(k) * model_->d_real().at(k);
    if (k > 0) lap = lap + model_->d_real().at(k - 1) * gram_adjoint(k - 1);
    return lap;
}

Mat HarmonicContext::orthogonal_projector(int p, int q, const Subspace& onto) const {
    const int d = model_->cplx_algebra().dim(p, q);
    if (onto.dim() == 0) return Mat(d, d);
    Mat b = onto.basis().transpose();  // columns span the subspace
    const Mat& k = gram(p, q);
    Mat gram_onto = b.conj_transpose() * k * b;
    Mat proj = b * inverse(gram_onto) * b.conj_transpose() * k;
    if (!((proj * proj) - proj).is_zero()) throw internal_error("orthogonal projector not idempotent");
    return proj;
}

HodgeDecomposition mubar_hodge_decomposition(const HarmonicContext& ctx, int p, int q) {
    const Model& model = ctx.model();
    const auto& cplx = model.cplx_algebra();
    HodgeDecomposition out;
    out.harmonic = ctx.laplacian_harmonics(OpKind::mubar, p, q);

    Subspace image = cplx.valid_bidegree(p + 1, q - 2)
                         ? Subspace::span_rows(model.quad().component(OpKind::mubar, p + 1, q - 2).transpose())
                         : Subspace::zero(cplx.dim(p, q));
    // mubar^* landing in (p,q) is the adjoint of mubar at source (p,q)
    Subspace coimage = Subspace::span_rows(ctx.adjoint(OpKind::mubar, p, q).transpose());
    out.image = image;
    out.coimage = coimage;

    auto orthogonal = [&](const Subspace& a, const Subspace& b) {
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j)
                if (!ctx.inner(p, q, a.basis().row(i), b.basis().row(j)).is_zero()) return false;
        return true;
    };
    out.orthogonal = orthogonal(out.harmonic.kernel, image) && orthogonal(out.harmonic.kernel, coimage) &&
                     orthogonal(image, coimage);
    out.spans =
        sum(sum(out.harmonic.kernel, image), coimage).dim() == cplx.dim(p, q) &&
        out.harmonic.dim() + image.dim() + coimage.dim() == cplx.dim(p, q);
    return out;
}

DelbarMubar::DelbarMubar(const HarmonicContext& ctx, int p) : ctx_(&ctx), p_(p) {
    const Model& model = ctx.model();
    const auto& cplx = model.cplx_algebra();
    const int m = cplx.m();

    std::vector<Mat> projectors;
    for (int q = 0; q <= m; ++q) {
        HarmonicSpace h = ctx.laplacian_harmonics(OpKind::mubar, p, q);
        basis_.push_back(h.kernel.basis().transpose());
        projectors.push_back(ctx.orthogonal_projector(p, q, h.kernel));
    }

    auto in_harmonic_coords = [&](int q, const std::vector<Scalar>& ambient) {
        auto sol = solve(basis_[q], ambient);
        if (!sol) throw internal_error("delbar_mubar: projection left the harmonic space");
        return *sol;
    };

    for (int q = 0; q <= m; ++q) {
        const int src_dim = basis_[q].cols();
        if (q == m) {
            op_.push_back(Mat(0, src_dim));
            continue;
        }
        const Mat& delbar = model.quad().component(OpKind::delbar, p, q);
        Mat t(basis_[q + 1].cols(), src_dim);
        for (int col = 0; col < src_dim; ++col) {
            auto image = projectors[q + 1] * (delbar * basis_[q].col(col));
            auto coords = in_harmonic_coords(q + 1, image);
            for (int row = 0; row < t.rows(); ++row) t.at(row, col) = coords[row];
        }
        op_.push_back(std::move(t));
    }
    for (int q = 0; q + 1 <= m; ++q)
        if (!(op_[q + 1] * op_[q]).is_zero())
            throw internal_error("delbar_mubar does not square to zero");

    for (int q = 0; q <= m; ++q) {
        if (q == m) {
            op_adj_.push_back(Mat(basis_[q].cols(), 0));
            continue;
        }
        // adjoint route: harmonic projection after delta^*
        Mat adj = ctx.adjoint(OpKind::delbar, p, q);
        Mat s(basis_[q].cols(), basis_[q + 1].cols());
        for (int col = 0; col < basis_[q + 1].cols(); ++col) {
            auto image = projectors[q] * (adj * basis_[q + 1].col(col));
            auto coords = in_harmonic_coords(q, image);
            for (int row = 0; row < s.rows(); ++row) s.at(row, col) = coords[row];
        }
        op_adj_.push_back(std::move(s));
    }
}

CohomologyGroup DelbarMubar::cohomology(int q) const {
    const auto& cplx = ctx_->model().cplx_algebra();
    CohomologyGroup g;
    Subspace ker = Subspace::span_rows(nullspace(op_[q]));
    Subspace img = q > 0 ? Subspace::span_rows(op_[q - 1].transpose())
                         : Subspace::zero(basis_[q].cols());
    QuotientBasis reps = quotient_basis(ker, img);
    g.piece = "H_mubar^{" + std::to_string(p_) + "," + std::to_string(q) + "}";
    g.numerator = "ker delbar_mubar";
    g.denominator = "im delbar_mubar";
    g.numerator_dim = ker.dim();
    g.denominator_dim = img.dim();
    g.dim = reps.dim();
    for (int i = 0; i < reps.dim(); ++i) {
        auto harmonic_coords = reps.representatives.row(i);
        auto ambient = basis_[q] * harmonic_coords;
        g.representatives.push_back(FormVector::from_bidegree_coords(cplx, p_, q, ambient));
    }
    return g;
}

HarmonicSpace DelbarMubar::harmonics(int q) const {
    // Delta = op_adj . op + op . op_adj on harmonic coordinates
    const int d = basis_[q].cols();
    Mat lap(d, d);
    lap = lap + op_adj_[q] * op_[q];
    if (q > 0) lap = lap + op_[q - 1] * op_adj_[q - 1];
    Mat ker = nullspace(lap);
    // back to ambient (p,q) coordinates
    Mat ambient(ker.rows(), ctx_->model().cplx_algebra().dim(p_, q));
    for (int i = 0; i < ker.rows(); ++i) ambient.set_row(i, basis_[q] * ker.row(i));
    HarmonicSpace h;
    h.p = p_;
    h.q = q;
    h.kernel = Subspace::span_rows(ambient);
    return h;
}

DelbarMubar::Splitting DelbarMubar::splitting(int q) const {
    Splitting s;
    const int d = basis_[q].cols();

    // coordinates of the three pieces inside the harmonic space at (p,q)
    Subspace harm_coords = Subspace::span_rows(nullspace([&] {
        Mat lap(d, d);
        lap = lap + op_adj_[q] * op_[q];
        if (q > 0) lap = lap + op_[q - 1] * op_adj_[q - 1];
        return lap;
    }()));
    Subspace image = q > 0 ? Subspace::span_rows(op_[q - 1].transpose()) : Subspace::zero(d);
    Subspace coimage = Subspace::span_rows(op_adj_[q].transpose());

    // inner product inherited from the ambient piece
    const auto& k_ambient = ctx_->gram(p_, q);
    Mat k_harm = basis_[q].conj_transpose() * k_ambient * basis_[q];
    auto inner = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
        auto ku = k_harm * u;
        Scalar out(0);
        for (std::size_t t = 0; t < v.size(); ++t) out += v[t].conj() * ku[t];
        return out;
    };
    auto orthogonal = [&](const Subspace& a, const Subspace& b) {
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j)
                if (!inner(a.basis().row(i), b.basis().row(j)).is_zero()) return false;
        return true;
    };
    s.orthogonal = orthogonal(harm_coords, image) && orthogonal(harm_coords, coimage) &&
                   orthogonal(image, coimage);
    s.dims_match = harm_coords.dim() + image.dim() + coimage.dim() == d;
    s.spans = sum(sum(harm_coords, image), coimage).dim() == d;
    return s;
}

SerreDualityReport serre_duality_check(const HarmonicContext& ctx) {
    const Model& model = ctx.model();
    const int m = model.m();
    SerreDualityReport report;
    report.unimodular = model.unimodularity().unimodular;

    SpectralSequence ss(model);
    report.all_pages_symmetric = true;
    for (int r = 1; r <= m + 1; ++r) {
        SpectralPage page = ss.page(r);
        SerrePageReport pr;
        pr.r = r;
        pr.symmetric = true;
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q)
                if (page.dims.at(p, q) != page.dims.at(m - p, m - q)) pr.symmetric = false;
        report.all_pages_symmetric = report.all_pages_symmetric && pr.symmetric;
        report.pages.push_back(pr);
    }

    // page-1 witness: star-conjugation pairs the delbar_mubar harmonic spaces
    report.page1_witnessed = true;
    std::vector<DelbarMubar> rows;
    for (int p = 0; p <= m; ++p) rows.emplace_back(ctx, p);
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            HarmonicSpace src = rows[p].harmonics(q);
            HarmonicSpace dst = rows[m - p].harmonics(m - q);
            if (src.dim() != dst.dim()) {
                report.page1_witnessed = false;
                report.notes.push_back("harmonic dimension asymmetry at (" + std::to_string(p) + "," +
                                       std::to_string(q) + ")");
                continue;
            }
            for (int i = 0; i < src.dim(); ++i) {
                // sigma(h) = star(conj h)
                auto coords = src.kernel.basis().row(i);
                auto conj_c = conj_matrix(model.cplx_algebra(), p, q) * conj_coords(coords);
                auto image = ctx.star(q, p) * conj_c;
                if (!dst.kernel.contains(image)) {
                    report.page1_witnessed = false;
                    report.notes.push_back("star-conjugation left the harmonic space at (" +
                                           std::to_string(p) + "," + std::to_string(q) + ")");
                    break;
                }
            }
        }
    return report;
}

SufficientConditionReport sufficient_conditions(const Model& model) {
    SufficientConditionReport out;
    const int m = model.m();
    out.del_vanishes_top = model.quad().component(OpKind::del, m - 1, m).is_zero();
    out.d_vanishes_top = model.d_real().at(2 * m - 1).is_zero();
    out.top_de_rham_is_line = model.de_rham().betti[2 * m] == 1;
    out.trace_unimodular = model.unimodularity().unimodular;
    out.all_agree = out.del_vanishes_top == out.d_vanishes_top &&
                    out.d_vanishes_top == out.top_de_rham_is_line &&
                    out.top_de_rham_is_line == out.trace_unimodular;
    return out;
}

}  // namespace dolce
