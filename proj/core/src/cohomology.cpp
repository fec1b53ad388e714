#include "dolce/cohomology.hpp"

#include "dolce/spectral.hpp"

namespace dolce {

namespace {

Subspace operator_kernel(const Mat& m) { return Subspace::span_rows(nullspace(m)); }
Subspace operator_image(const Mat& m) { return Subspace::span_rows(m.transpose()); }

}  // namespace

CohomologyGroup mu_bar_cohomology(const Model& model, int p, int q) {
    const auto& alg = model.cplx_algebra();
    CohomologyGroup g;
    if (!alg.valid_bidegree(p, q)) return g;
    const BigradedComplex& quad = model.quad();
    Subspace ker = operator_kernel(quad.component(OpKind::mubar, p, q));
    Subspace img = alg.valid_bidegree(p + 1, q - 2)
                       ? operator_image(quad.component(OpKind::mubar, p + 1, q - 2))
                       : Subspace::zero(alg.dim(p, q));
    QuotientBasis reps = quotient_basis(ker, img);
    g.piece = "A^{" + std::to_string(p) + "," + std::to_string(q) + "}";
    g.numerator = "ker mubar";
    g.denominator = "im mubar";
    g.numerator_dim = ker.dim();
    g.denominator_dim = img.dim();
    g.dim = reps.dim();
    for (int i = 0; i < reps.dim(); ++i)
        g.representatives.push_back(
            FormVector::from_bidegree_coords(alg, p, q, reps.representatives.row(i)));
    return g;
}

DolbeaultRow::DolbeaultRow(const Model& model, int p) : model_(&model), p_(p) {
    const auto& alg = model.cplx_algebra();
    const BigradedComplex& quad = model.quad();
    const int m = alg.m();
    for (int q = 0; q <= m; ++q) {
        Subspace ker = operator_kernel(quad.component(OpKind::mubar, p, q));
        Subspace img = alg.valid_bidegree(p + 1, q - 2)
                           ? operator_image(quad.component(OpKind::mubar, p + 1, q - 2))
                           : Subspace::zero(alg.dim(p, q));
        classes_.emplace_back(ker, img);
    }
    // delbar passes to mubar-classes because delbar mubar + mubar delbar = 0
    for (int q = 0; q <= m; ++q) {
        const QuotientMap& src = classes_[q];
        if (q == m) {
            induced_.push_back(Mat(0, src.dim()));
            continue;
        }
        const QuotientMap& dst = classes_[q + 1];
        Mat ind(dst.dim(), src.dim());
        const Mat& delbar = quad.component(OpKind::delbar, p, q);
        for (int col = 0; col < src.dim(); ++col) {
            auto image = delbar * src.representatives().row(col);
            auto coords = dst.coords(image);  // throws if delbar left ker(mubar): impossible
            for (int row = 0; row < dst.dim(); ++row) ind.at(row, col) = coords[row];
        }
        induced_.push_back(std::move(ind));
    }
    for (int q = 0; q + 1 <= m; ++q)
        if (!(induced_[q + 1] * induced_[q]).is_zero())
            throw internal_error("DolbeaultRow: induced delbar does not square to zero");
}

CohomologyGroup DolbeaultRow::cohomology(int q) const {
    const auto& alg = model_->cplx_algebra();
    CohomologyGroup g;
    if (!alg.valid_bidegree(p_, q)) return g;
    Subspace ker = operator_kernel(induced_[q]);
    Subspace img = q > 0 ? operator_image(induced_[q - 1]) : Subspace::zero(classes_[q].dim());
    QuotientBasis reps = quotient_basis(ker, img);
    g.piece = "A^{" + std::to_string(p_) + "," + std::to_string(q) + "}";
    g.numerator = "ker(delbar on mubar-classes)";
    g.denominator = "im(delbar on mubar-classes)";
    g.numerator_dim = ker.dim();
    g.denominator_dim = img.dim();
    g.dim = reps.dim();
    for (int i = 0; i < reps.dim(); ++i) {
        auto lifted = classes_[q].lift(reps.representatives.row(i));
        g.representatives.push_back(FormVector::from_bidegree_coords(alg, p_, q, lifted));
    }
    return g;
}

CohomologyGroup dolbeault(const Model& model, int p, int q) {
    if (!model.cplx_algebra().valid_bidegree(p, q)) return {};
    return DolbeaultRow(model, p).cohomology(q);
}

std::vector<std::vector<int>> dolbeault_grid(const Model& model) {
    const int m = model.m();
    std::vector<std::vector<int>> grid(m + 1, std::vector<int>(m + 1, 0));
    for (int p = 0; p <= m; ++p) {
        DolbeaultRow row(model, p);
        for (int q = 0; q <= m; ++q) grid[p][q] = row.cohomology(q).dim;
    }
    return grid;
}

JInvariantReport h_plus_minus(const Model& model) {
    const auto& alg = model.real_algebra();
    const CeDifferential& d = model.d_real();
    TwoFormSplit split = two_form_split(alg, model.j());

    // invariant forms are the real forms of bidegree (1,1), anti-invariant
    // ones live in (2,0) + (0,2); checked through the change of basis
    const auto& cplx = model.cplx_algebra();
    auto bidegree_pure = [&](const Subspace& space, bool diagonal) {
        for (int i = 0; i < space.dim(); ++i) {
            auto coords = model.frame().real_to_cplx[2] * space.basis().row(i);
            FormVector f = FormVector::from_degree_coords(cplx, 2, coords);
            FormVector expected = diagonal
                                      ? f.bidegree_component(1, 1)
                                      : f.bidegree_component(2, 0) + f.bidegree_component(0, 2);
            if (!(f == expected)) return false;
        }
        return true;
    };
    if (!bidegree_pure(split.invariant, true) || !bidegree_pure(split.anti_invariant, false))
        throw internal_error("h_plus_minus: two-form split does not match the bigrading");

    Subspace closed = operator_kernel(d.at(2));
    Subspace exact = operator_image(d.at(1));
    QuotientMap h2(closed, exact);

    JInvariantReport report;
    report.b2 = h2.dim();

    auto handle = [&](const Subspace& cone, std::vector<FormVector>& reps_out, int& dim_out) {
        Subspace closed_cone = intersect(cone, closed);
        Subspace boundary_part = intersect(closed_cone, exact);
        QuotientBasis reps = quotient_basis(closed_cone, boundary_part);
        dim_out = reps.dim();
        for (int i = 0; i < reps.dim(); ++i)
            reps_out.push_back(FormVector::from_degree_coords(alg, 2, reps.representatives.row(i)));
        // image inside H^2
        Mat image_coords(closed_cone.dim(), h2.dim());
        for (int i = 0; i < closed_cone.dim(); ++i)
            image_coords.set_row(i, h2.coords(closed_cone.basis().row(i)));
        return Subspace::span_rows(image_coords);
    };

    Subspace img_plus = handle(split.invariant, report.plus_representatives, report.h_plus);
    Subspace img_minus = handle(split.anti_invariant, report.minus_representatives, report.h_minus);
    if (img_plus.dim() != report.h_plus || img_minus.dim() != report.h_minus)
        throw internal_error("h_plus_minus: image dimension disagrees with quotient dimension");

    Subspace meet = intersect(img_plus, img_minus);
    Subspace join = sum(img_plus, img_minus);
    if (meet.dim() + join.dim() != img_plus.dim() + img_minus.dim())
        throw internal_error("h_plus_minus: dimension identity violated inside H^2");
    report.c_pure = meet.dim() == 0;
    report.c_full = join.dim() == report.b2;
    return report;
}

InclusionReport inclusion_condition(const Model& model) {
    SpectralSequence ss(model);
    InclusionReport report;
    report.e01_page1 = ss.x_space(0, 1, 1).dim() - ss.y_space(0, 1, 1).dim();
    report.e01_page2 = ss.x_space(0, 1, 2).dim() - ss.y_space(0, 1, 2).dim();
    const Subspace& y1 = ss.y_space(1, 1, 1);
    const Subspace& y2 = ss.y_space(1, 1, 2);
    const Subspace& y3 = ss.y_space(1, 1, 3);
    if (!y2.contains(y1)) throw internal_error("inclusion_condition: Y_1 not inside Y_2");
    if (!(y2 == y3)) throw internal_error("inclusion_condition: Y_2 != Y_3 at bidegree (1,1)");
    report.y11_page1 = y1.dim();
    report.y11_page2 = y2.dim();
    report.condition_star = report.e01_page1 == report.e01_page2;
    report.y_spaces_equal = y1 == y2;
    report.flags_agree = report.condition_star == report.y_spaces_equal;
    Subspace obstruction = intersect(y1, ss.x_space(1, 1, 3));
    report.inclusion_injective = y3.contains(obstruction);
    return report;
}

}  // namespace dolce
