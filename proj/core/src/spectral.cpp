#include "dolce/spectral.hpp"

#include "dolce/cohomology.hpp"

namespace dolce {

int Grid::total(int k) const {
    int s = 0;
    for (int p = 0; p <= m; ++p) {
        int q = k - p;
        if (q >= 0 && q <= m) s += at(p, q);
    }
    return s;
}

SpectralSequence::SpectralSequence(const Model& model) : model_(&model) {
    model.quad();  // require an almost complex structure up front
}

namespace {

// column layout of a direct sum of bidegree pieces
struct BlockLayout {
    std::vector<std::pair<int, int>> pieces;  // (p,q) per variable slot, invalid slots skipped
    std::vector<int> offset;                  // per slot; -1 when absent
    int total = 0;
};

BlockLayout layout(const ExteriorAlgebra& alg, const std::vector<std::pair<int, int>>& slots) {
    BlockLayout l;
    l.pieces = slots;
    l.offset.resize(slots.size(), -1);
    for (std::size_t t = 0; t < slots.size(); ++t) {
        auto [p, q] = slots[t];
        if (!alg.valid_bidegree(p, q)) continue;
        l.offset[t] = l.total;
        l.total += alg.dim(p, q);
    }
    return l;
}

}  // namespace

const Subspace& SpectralSequence::x_space(int p, int q, int r) {
    auto key = std::make_tuple(p, q, r);
    if (auto it = x_cache_.find(key); it != x_cache_.end()) return it->second;
    const auto& alg = model_->cplx_algebra();
    const BigradedComplex& quad = model_->quad();
    if (!alg.valid_bidegree(p, q)) throw internal_error("x_space: bidegree off the grid");
    if (r < 1) throw internal_error("x_space: page index must be >= 1");

    // variables a_j of bidegree (p+j, q-j), j = 0..r
    std::vector<std::pair<int, int>> var_slots;
    for (int j = 0; j <= r; ++j) var_slots.push_back({p + j, q - j});
    BlockLayout vars = layout(alg, var_slots);

    // equations s = 0..r in bidegree (p+s-1, q-s+2):
    //   mu a_{s-3} + del a_{s-2} + delbar a_{s-1} + mubar a_s = 0
    std::vector<std::pair<int, int>> eq_slots;
    for (int s = 0; s <= r; ++s) eq_slots.push_back({p + s - 1, q - s + 2});
    BlockLayout eqs = layout(alg, eq_slots);

    Mat system(eqs.total, vars.total);
    const OpKind term_kind[4] = {OpKind::mu, OpKind::del, OpKind::delbar, OpKind::mubar};
    for (int s = 0; s <= r; ++s) {
        if (eqs.offset[s] < 0) continue;
        for (int t = 0; t < 4; ++t) {
            int j = s - 3 + t;
            if (j < 0 || j > r || vars.offset[j] < 0) continue;
            auto [vp, vq] = vars.pieces[j];
            const Mat& block = quad.component(term_kind[t], vp, vq);
            if (block.rows() == 0) continue;
            system.paste(eqs.offset[s], vars.offset[j], block);
        }
    }

    Mat kernel = nullspace(system);
    // project witness tuples onto the leading (p,q) coordinate
    const int lead = alg.dim(p, q);
    Mat head(kernel.rows(), lead);
    for (int i = 0; i < kernel.rows(); ++i)
        for (int c = 0; c < lead; ++c) head.at(i, c) = kernel.at(i, c);
    auto [it, inserted] = x_cache_.emplace(key, Subspace::span_rows(head));
    return it->second;
}

const Subspace& SpectralSequence::y_space(int p, int q, int r) {
    auto key = std::make_tuple(p, q, r);
    if (auto it = y_cache_.find(key); it != y_cache_.end()) return it->second;
    const auto& alg = model_->cplx_algebra();
    const BigradedComplex& quad = model_->quad();
    if (!alg.valid_bidegree(p, q)) throw internal_error("y_space: bidegree off the grid");
    if (r < 1) throw internal_error("y_space: page index must be >= 1");

    // witnesses h_j of bidegree (p-j, q+j-1), j = -1..r-1 (slot t = j+1)
    std::vector<std::pair<int, int>> var_slots;
    for (int j = -1; j <= r - 1; ++j) var_slots.push_back({p - j, q + j - 1});
    BlockLayout vars = layout(alg, var_slots);

    // side conditions k = 3..r+2 in bidegree (p-k+2, q+k-2):
    //   mu h_k + del h_{k-1} + delbar h_{k-2} + mubar h_{k-3} = 0
    std::vector<std::pair<int, int>> eq_slots;
    for (int k = 3; k <= r + 2; ++k) eq_slots.push_back({p - k + 2, q + k - 2});
    BlockLayout eqs = layout(alg, eq_slots);

    const OpKind term_kind[4] = {OpKind::mu, OpKind::del, OpKind::delbar, OpKind::mubar};
    Mat side(eqs.total, vars.total);
    for (int k = 3; k <= r + 2; ++k) {
        int erow = k - 3;
        if (eqs.offset[erow] < 0) continue;
        for (int t = 0; t < 4; ++t) {
            int j = k - t;  // mu acts on h_k, del on h_{k-1}, delbar on h_{k-2}, mubar on h_{k-3}
            int slot = j + 1;
            if (j < -1 || j > r - 1 || vars.offset[slot] < 0) continue;
            auto [vp, vq] = vars.pieces[slot];
            const Mat& block = quad.component(term_kind[t], vp, vq);
            if (block.rows() == 0) continue;
            side.paste(eqs.offset[erow], vars.offset[slot], block);
        }
    }

    // output map eta = mu h_2 + del h_1 + delbar h_0 + mubar h_{-1}
    Mat output(alg.dim(p, q), vars.total);
    for (int t = 0; t < 4; ++t) {
        int j = 2 - t;
        int slot = j + 1;
        if (j < -1 || j > r - 1 || vars.offset[slot] < 0) continue;
        auto [vp, vq] = vars.pieces[slot];
        const Mat& block = quad.component(term_kind[t], vp, vq);
        if (block.rows() == 0) continue;
        output.paste(0, vars.offset[slot], block);
    }

    Mat witness_kernel = nullspace(side);
    Mat images(witness_kernel.rows(), alg.dim(p, q));
    for (int i = 0; i < witness_kernel.rows(); ++i) images.set_row(i, output * witness_kernel.row(i));
    auto [it, inserted] = y_cache_.emplace(key, Subspace::span_rows(images));
    return it->second;
}

const QuotientMap& SpectralSequence::page_quotient(int p, int q, int r) {
    auto key = std::make_tuple(p, q, r);
    if (auto it = quotient_cache_.find(key); it != quotient_cache_.end()) return it->second;
    const Subspace& x = x_space(p, q, r);
    const Subspace& y = y_space(p, q, r);
    if (!x.contains(y))
        throw containment_error("spectral page: Y^{p,q}_r is not contained in X^{p,q}_r");
    auto [it, inserted] = quotient_cache_.emplace(key, QuotientMap(x, y));
    return it->second;
}

SpectralPage SpectralSequence::page(int r) {
    if (auto it = page_cache_.find(r); it != page_cache_.end()) return it->second;
    const auto& alg = model_->cplx_algebra();
    const int m = alg.m();
    SpectralPage out;
    out.r = r;
    out.dims = Grid(m);
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            const QuotientMap& quotient = page_quotient(p, q, r);
            out.dims.at(p, q) = quotient.dim();
            std::vector<FormVector> reps;
            for (int i = 0; i < quotient.dim(); ++i)
                reps.push_back(FormVector::from_bidegree_coords(
                    alg, p, q, quotient.representatives().row(i)));
            out.representatives[{p, q}] = std::move(reps);
        }
    if (r == 1) {
        // two independent routes: the witness quotients and the
        // delbar-of-mubar cohomology must agree dimension-wise
        auto grid = dolbeault_grid(*model_);
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q)
                if (grid[p][q] != out.dims.at(p, q))
                    throw internal_error("page 1 dimensions disagree with the Dolbeault computation");
    }
    page_cache_[r] = out;
    return out;
}

std::pair<SpectralPage, int> SpectralSequence::e_infinity() {
    const int m = model_->m();
    std::vector<SpectralPage> pages;
    for (int r = 1; r <= m + 1; ++r) pages.push_back(page(r));

    for (int idx = 0; idx + 1 < static_cast<int>(pages.size()); ++idx) {
        int drop = 0;
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                int dr = pages[idx].dims.at(p, q), dn = pages[idx + 1].dims.at(p, q);
                if (dn > dr) throw internal_error("page dimensions increased with r");
                drop += dr - dn;
                // the witness spaces are monotone: X shrinks, Y grows
                int r = idx + 1;
                if (!x_space(p, q, r).contains(x_space(p, q, r + 1)))
                    throw internal_error("X spaces are not decreasing in r");
                if (!y_space(p, q, r + 1).contains(y_space(p, q, r)))
                    throw internal_error("Y spaces are not increasing in r");
            }
        if (drop % 2 != 0) throw internal_error("total dimension drop between pages is odd");
    }

    const SpectralPage& limit = pages.back();
    int stage = m + 1;
    for (int r = 1; r <= m + 1; ++r)
        if (pages[r - 1].dims == limit.dims) {
            stage = r;
            break;
        }

    const auto& betti = model_->de_rham().betti;
    for (int k = 0; k <= 2 * m; ++k)
        if (limit.dims.total(k) != betti[k])
            throw internal_error("E_infinity totals disagree with the Betti numbers");
    return {limit, stage};
}

FormVector SpectralSequence::d1_witness(int p, int q, const FormVector& alpha) {
    const auto& alg = model_->cplx_algebra();
    const BigradedComplex& quad = model_->quad();
    FormVector delbar_alpha = quad.apply(OpKind::delbar, alpha);
    if (!alg.valid_bidegree(p + 1, q - 1)) {
        if (!delbar_alpha.is_zero())
            throw internal_error("d1_witness: no witness slot but delbar alpha != 0");
        return FormVector(alg);
    }
    // delbar alpha = mubar w
    const Mat& mubar = quad.component(OpKind::mubar, p + 1, q - 1);
    auto rhs = delbar_alpha.is_zero() ? std::vector<Scalar>(alg.dim(p, q + 1))
                                      : delbar_alpha.bidegree_coords(p, q + 1);
    auto w = solve(mubar, rhs);
    if (!w) throw internal_error("d1_witness: alpha is not in X_1");
    return FormVector::from_bidegree_coords(alg, p + 1, q - 1, *w);
}

std::vector<Scalar> SpectralSequence::d1_class(int p, int q, const FormVector& alpha,
                                               const FormVector& witness) {
    const BigradedComplex& quad = model_->quad();
    if (!model_->cplx_algebra().valid_bidegree(p + 1, q)) return {};
    FormVector value = quad.apply(OpKind::del, alpha) - quad.apply(OpKind::delbar, witness);
    const QuotientMap& target = page_quotient(p + 1, q, 1);
    if (value.is_zero()) return std::vector<Scalar>(target.dim());
    return target.coords(value.bidegree_coords(p + 1, q));
}

Mat SpectralSequence::d1_matrix(int p, int q) {
    const auto& alg = model_->cplx_algebra();
    const QuotientMap& src = page_quotient(p, q, 1);
    if (!alg.valid_bidegree(p + 1, q)) return Mat(0, src.dim());
    const QuotientMap& dst = page_quotient(p + 1, q, 1);
    Mat d1(dst.dim(), src.dim());
    for (int col = 0; col < src.dim(); ++col) {
        FormVector alpha =
            FormVector::from_bidegree_coords(alg, p, q, src.representatives().row(col));
        auto cls = d1_class(p, q, alpha, d1_witness(p, q, alpha));
        for (int row = 0; row < dst.dim(); ++row) d1.at(row, col) = cls[row];
    }
    return d1;
}

FrolicherReport frolicher_check(const Model& model) {
    FrolicherReport report;
    report.betti = model.de_rham().betti;
    auto grid = dolbeault_grid(model);
    const int m = model.m();
    report.hodge_totals.resize(2 * m + 1, 0);
    int hodge_euler = 0;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            report.hodge_totals[p + q] += grid[p][q];
            hodge_euler += ((p + q) % 2 == 0 ? 1 : -1) * grid[p][q];
        }
    report.inequality_holds = true;
    for (int k = 0; k <= 2 * m; ++k) {
        report.slack.push_back(report.hodge_totals[k] - report.betti[k]);
        if (report.slack.back() < 0) report.inequality_holds = false;
    }
    report.euler = model.de_rham().euler_characteristic;
    report.euler_matches = hodge_euler == report.euler;
    return report;
}

}  // namespace dolce
