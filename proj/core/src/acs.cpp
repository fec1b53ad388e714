#include "dolce/acs.hpp"

#include <bit>

namespace dolce {

ValidationReport validate_acs(const Mat& j, int dim, const std::optional<Mat>& metric) {
    ValidationReport report;
    if (j.rows() != dim || j.cols() != dim) {
        report.add("acs-shape", "J must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
        return report;
    }
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (!j.at(a, b).is_real()) report.add("acs-rational", "J entries must be rational");
    if (!report.ok()) return report;
    if (!(j * j + Mat::identity(dim)).is_zero()) report.add("acs-square", "J^2 != -Id");
    if (metric) {
        if (metric->rows() != dim || metric->cols() != dim)
            report.add("metric-shape", "metric dimension mismatch");
        else if (!(j.transpose() * (*metric) * j - *metric).is_zero())
            report.add("acs-metric", "metric is not J-compatible: <Jx,Jy> != <x,y>");
    }
    return report;
}

ComplexFrame complex_frame(const ExteriorAlgebra& real_alg, const ExteriorAlgebra& cplx_alg, const Mat& j) {
    const int n = real_alg.generators();
    const int m = n / 2;
    ComplexFrame out;

    // candidate phi from e^a: e^a - i * (transpose action of J on e^a)
    Mat candidates(n, n);
    for (int a = 0; a < n; ++a) {
        candidates.at(a, a) += Scalar(1);
        for (int b = 0; b < n; ++b) candidates.at(a, b) -= Scalar::i() * j.at(a, b);
    }

    // greedy selection of m independent +i eigenvectors
    Mat rows(m, n);
    int picked = 0;
    for (int a = 0; a < n && picked < m; ++a) {
        Mat trial(picked + 1, n);
        for (int i = 0; i < picked; ++i) trial.set_row(i, rows.row(i));
        trial.set_row(picked, candidates.row(a));
        if (rref(trial).rank == picked + 1) {
            rows.set_row(picked, candidates.row(a));
            ++picked;
        }
    }
    if (picked != m) throw internal_error("complex_frame: could not assemble an eigenbasis");

    out.frame = Mat(n, n);
    for (int i = 0; i < m; ++i) {
        out.frame.set_row(i, rows.row(i));
        std::vector<Scalar> bar(n);
        for (int b = 0; b < n; ++b) bar[b] = rows.at(i, b).conj();
        out.frame.set_row(m + i, bar);
    }
    // each phi is a +i eigenvector of the transpose action
    for (int i = 0; i < m; ++i) {
        std::vector<Scalar> lhs(n);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) lhs[b] += out.frame.at(i, c) * j.at(c, b);
        for (int b = 0; b < n; ++b)
            if (lhs[b] != Scalar::i() * out.frame.at(i, b))
                throw internal_error("complex_frame: frame row is not a +i eigenvector");
    }
    out.frame_inverse = inverse(out.frame);

    // change of basis per degree: column = real coordinates of a complex monomial
    std::vector<FormVector> gens;
    for (int a = 0; a < n; ++a) {
        FormVector g(real_alg);
        for (int b = 0; b < n; ++b) g.add_term(Mono(1) << b, out.frame.at(a, b));
        gens.push_back(g);
    }
    for (int k = 0; k <= n; ++k) {
        const auto& cb = cplx_alg.basis(k);
        const auto& rb = real_alg.basis(k);
        Mat c(static_cast<int>(rb.size()), static_cast<int>(cb.size()));
        for (std::size_t col = 0; col < cb.size(); ++col) {
            FormVector image = FormVector::monomial(real_alg, 0);
            for (Mono rest = cb[col]; rest; rest &= rest - 1)
                image = wedge(image, gens[std::countr_zero(rest)]);
            for (const auto& [mo, coeff] : image.terms())
                c.at(real_alg.index_in_degree(mo), static_cast<int>(col)) = coeff;
        }
        out.real_to_cplx.push_back(inverse(c));
        out.cplx_to_real.push_back(std::move(c));
    }
    return out;
}

std::pair<int, int> op_bidegree(OpKind kind) {
    switch (kind) {
        case OpKind::mu: return {2, -1};
        case OpKind::del: return {1, 0};
        case OpKind::delbar: return {0, 1};
        case OpKind::mubar: return {-1, 2};
    }
    throw internal_error("op_bidegree: bad kind");
}

const char* op_name(OpKind kind) {
    switch (kind) {
        case OpKind::mu: return "mu";
        case OpKind::del: return "del";
        case OpKind::delbar: return "delbar";
        case OpKind::mubar: return "mubar";
    }
    throw internal_error("op_name: bad kind");
}

BigradedComplex BigradedComplex::build(const ExteriorAlgebra& cplx_alg,
                                       const std::vector<FormVector>& d_generators) {
    BigradedComplex out;
    out.alg_ = &cplx_alg;
    out.d_gen_ = d_generators;
    const int n = cplx_alg.top_degree();
    const int m = cplx_alg.m();

    for (int k = 0; k <= n; ++k) out.d_total_.push_back(derivation_matrix(cplx_alg, k, d_generators));
    for (int k = 0; k + 1 <= n; ++k)
        if (!(out.d_total_[k + 1] * out.d_total_[k]).is_zero())
            throw internal_error("bigraded complex: d^2 != 0");

    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            const auto& src = cplx_alg.basis(p, q);
            const int k = p + q;
            // blocks of d restricted to source bidegree (p,q), split by target bidegree
            for (OpKind kind : all_op_kinds) {
                auto [a, b] = op_bidegree(kind);
                Mat block(cplx_alg.dim(p + a, q + b), static_cast<int>(src.size()));
                out.blocks_[{static_cast<int>(kind), p, q}] = std::move(block);
            }
            if (k + 1 <= n) {
                const Mat& d = out.d_total_[k];
                for (std::size_t col = 0; col < src.size(); ++col) {
                    int src_col = cplx_alg.index_in_degree(src[col]);
                    for (std::size_t row = 0; row < cplx_alg.basis(k + 1).size(); ++row) {
                        const Scalar& c = d.at(static_cast<int>(row), src_col);
                        if (c.is_zero()) continue;
                        Mono tmono = cplx_alg.basis(k + 1)[row];
                        auto [tp, tq] = cplx_alg.bidegree(tmono);
                        bool placed = false;
                        for (OpKind kind : all_op_kinds) {
                            auto [a, b] = op_bidegree(kind);
                            if (tp == p + a && tq == q + b) {
                                out.blocks_[{static_cast<int>(kind), p, q}].at(
                                    cplx_alg.index_in_bidegree(tmono), static_cast<int>(col)) = c;
                                placed = true;
                                break;
                            }
                        }
                        if (!placed)
                            throw internal_error("bigraded complex: d has a component outside the four bidegrees");
                    }
                }
            }
        }

    // exact reassembly: the four components must regrade to d
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            const auto& src = cplx_alg.basis(p, q);
            const int k = p + q;
            if (k + 1 > n) continue;
            Mat sum_back(static_cast<int>(cplx_alg.basis(k + 1).size()), static_cast<int>(src.size()));
            for (OpKind kind : all_op_kinds) {
                auto [a, b] = op_bidegree(kind);
                int tp = p + a, tq = q + b;
                if (!cplx_alg.valid_bidegree(tp, tq)) continue;
                const Mat& block = out.blocks_.at({static_cast<int>(kind), p, q});
                const auto& tb = cplx_alg.basis(tp, tq);
                for (std::size_t r = 0; r < tb.size(); ++r)
                    for (std::size_t c = 0; c < src.size(); ++c)
                        sum_back.at(cplx_alg.index_in_degree(tb[r]), static_cast<int>(c)) +=
                            block.at(static_cast<int>(r), static_cast<int>(c));
            }
            for (std::size_t c = 0; c < src.size(); ++c) {
                int src_col = cplx_alg.index_in_degree(src[c]);
                for (int r = 0; r < sum_back.rows(); ++r)
                    if (sum_back.at(r, static_cast<int>(c)) != out.d_total_[k].at(r, src_col))
                        throw internal_error("bigraded complex: reassembly of the four components != d");
            }
        }
    return out;
}

const Mat& BigradedComplex::component(OpKind kind, int p, int q) const {
    static const Mat empty;
    auto it = blocks_.find({static_cast<int>(kind), p, q});
    if (it == blocks_.end()) {
        if (!alg_->valid_bidegree(p, q)) return empty;
        throw internal_error("component: missing block");
    }
    return it->second;
}

const Mat& BigradedComplex::d_total(int k) const { return d_total_[k]; }

bool BigradedComplex::mubar_vanishes() const {
    for (const auto& [key, block] : blocks_)
        if (std::get<0>(key) == static_cast<int>(OpKind::mubar) && !block.is_zero()) return false;
    return true;
}

FormVector BigradedComplex::apply(OpKind kind, const FormVector& f) const {
    if (f.is_zero()) return FormVector(*alg_);
    auto [p, q] = alg_->bidegree(f.terms().begin()->first);
    auto [a, b] = op_bidegree(kind);
    if (!alg_->valid_bidegree(p + a, q + b)) return FormVector(*alg_);
    auto coords = component(kind, p, q) * f.bidegree_coords(p, q);
    return FormVector::from_bidegree_coords(*alg_, p + a, q + b, coords);
}

namespace {

// compose two components out of source (p,q); inner applied first
Mat compose(const ExteriorAlgebra& alg, const std::function<Mat(OpKind, int, int)>& component,
            OpKind outer, OpKind inner, int p, int q) {
    auto [ia, ib] = op_bidegree(inner);
    Mat in = component(inner, p, q);
    Mat out = component(outer, p + ia, q + ib);
    if (out.rows() == 0 || out.cols() == 0 || in.rows() == 0) {
        auto [oa, ob] = op_bidegree(outer);
        int tp = p + ia + oa, tq = q + ib + ob;
        return Mat(alg.dim(tp, tq), alg.dim(p, q));
    }
    return out * in;
}

}  // namespace

SquareZeroReport verify_square_zero_relations(const ExteriorAlgebra& alg,
                                              const std::function<Mat(OpKind, int, int)>& component) {
    using K = OpKind;
    struct Relation {
        const char* name;
        std::vector<std::pair<K, K>> terms;  // outer, inner
    };
    const std::vector<Relation> relations = {
        {"mu^2 = 0", {{K::mu, K::mu}}},
        {"mu del + del mu = 0", {{K::mu, K::del}, {K::del, K::mu}}},
        {"mu delbar + delbar mu + del^2 = 0", {{K::mu, K::delbar}, {K::delbar, K::mu}, {K::del, K::del}}},
        {"mu mubar + del delbar + delbar del + mubar mu = 0",
         {{K::mu, K::mubar}, {K::del, K::delbar}, {K::delbar, K::del}, {K::mubar, K::mu}}},
        {"mubar del + del mubar + delbar^2 = 0",
         {{K::mubar, K::del}, {K::del, K::mubar}, {K::delbar, K::delbar}}},
        {"mubar delbar + delbar mubar = 0", {{K::mubar, K::delbar}, {K::delbar, K::mubar}}},
        {"mubar^2 = 0", {{K::mubar, K::mubar}}},
    };

    SquareZeroReport report;
    const int m = alg.m();
    for (const auto& rel : relations)
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                Mat acc;
                bool first = true;
                for (auto [outer, inner] : rel.terms) {
                    Mat term = compose(alg, component, outer, inner, p, q);
                    if (first) {
                        acc = std::move(term);
                        first = false;
                    } else {
                        acc = acc + term;
                    }
                }
                if (!acc.is_zero())
                    report.violations.push_back(std::string(rel.name) + " fails on bidegree (" +
                                                std::to_string(p) + "," + std::to_string(q) + ")");
            }
    return report;
}

SquareZeroReport verify_square_zero_relations(const BigradedComplex& q) {
    return verify_square_zero_relations(
        q.algebra(), [&q](OpKind kind, int p, int qq) { return q.component(kind, p, qq); });
}

std::map<std::pair<int, int>, std::vector<Rational>> nijenhuis(const LieAlgebraSpec& spec, const Mat& j) {
    const int n = spec.dim;
    auto jr = [&](int a, int b) { return j.at(a, b).re(); };
    // bracket of coefficient vectors, bilinear extension of the structure constants
    auto bracket = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        std::vector<Rational> out(n, Rational(0));
        for (int a = 0; a < n; ++a) {
            if (u[a] == 0) continue;
            for (int b = 0; b < n; ++b) {
                if (v[b] == 0) continue;
                auto w = spec.bracket(a, b);
                for (int l = 0; l < n; ++l) out[l] += u[a] * v[b] * w[l];
            }
        }
        return out;
    };
    auto apply_j = [&](const std::vector<Rational>& u) {
        std::vector<Rational> out(n, Rational(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) out[a] += jr(a, b) * u[b];
        return out;
    };
    auto unit = [&](int a) {
        std::vector<Rational> u(n, Rational(0));
        u[a] = 1;
        return u;
    };

    std::map<std::pair<int, int>, std::vector<Rational>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto ja = apply_j(unit(a)), jb = apply_j(unit(b));
            auto t1 = bracket(ja, jb);
            auto t2 = spec.bracket(a, b);
            auto t3 = apply_j(bracket(ja, unit(b)));
            auto t4 = apply_j(bracket(unit(a), jb));
            std::vector<Rational> nj(n, Rational(0));
            for (int l = 0; l < n; ++l) nj[l] = t1[l] - t2[l] - t3[l] - t4[l];
            out[{a, b}] = std::move(nj);
        }
    return out;
}

bool is_integrable(const LieAlgebraSpec& spec, const Mat& j, const BigradedComplex& quad) {
    bool mubar_zero = quad.mubar_vanishes();
    bool nj_zero = true;
    for (const auto& [pair, nj] : nijenhuis(spec, j))
        for (const auto& c : nj)
            if (c != 0) nj_zero = false;
    if (mubar_zero != nj_zero)
        throw internal_error("is_integrable: mubar and Nijenhuis criteria disagree");
    return mubar_zero;
}

TwoFormSplit two_form_split(const ExteriorAlgebra& real_alg, const Mat& j) {
    const int n = real_alg.generators();
    std::vector<FormVector> images;
    for (int l = 0; l < n; ++l) {
        FormVector im(real_alg);
        for (int b = 0; b < n; ++b) im.add_term(Mono(1) << b, j.at(l, b));
        images.push_back(im);
    }
    Mat action = algebra_map_matrix(real_alg, 2, images);
    const int d2 = action.rows();
    if (!(action * action - Mat::identity(d2)).is_zero())
        throw internal_error("two_form_split: J on 2-forms is not an involution");
    Scalar half(Rational(1, 2));
    TwoFormSplit out;
    out.plus = (Mat::identity(d2) + action) * half;
    out.minus = (Mat::identity(d2) - action) * half;
    if (!((out.plus * out.plus) - out.plus).is_zero() || !((out.minus * out.minus) - out.minus).is_zero())
        throw internal_error("two_form_split: projectors are not idempotent");
    out.invariant = Subspace::span_rows(out.plus.transpose());
    out.anti_invariant = Subspace::span_rows(out.minus.transpose());
    return out;
}

Deformation deform(const ExteriorAlgebra& real_alg, const ExteriorAlgebra& cplx_alg, const Mat& j,
                   const Mat& l) {
    const int n = real_alg.generators();
    const int m = n / 2;
    ValidationReport report;
    if (l.rows() != n || l.cols() != n) report.add("deform-shape", "L dimension mismatch");
    if (report.ok() && !(l * j + j * l).is_zero())
        report.add("deform-anticommute", "L J + J L != 0");
    if (report.ok() && det(Mat::identity(n) + l).is_zero())
        report.add("deform-singular", "Id + L is singular");
    if (!report.ok()) throw validation_error(report);

    Mat id_l = Mat::identity(n) + l;
    Deformation out;
    out.deformed_j = id_l * j * inverse(id_l);
    if (!(out.deformed_j * out.deformed_j + Mat::identity(n)).is_zero())
        throw internal_error("deform: deformed structure does not square to -Id");

    // psi = 1/2 (L - i J L), expressed against the frame of the undeformed J
    Mat psi_e = (l - (j * l) * Scalar::i()) * Scalar(Rational(1, 2));
    ComplexFrame frame = complex_frame(real_alg, cplx_alg, j);
    Mat psi_frame = frame.frame * psi_e * frame.frame_inverse;
    out.psi = Mat(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            out.psi.at(a, b) = psi_frame.at(a, m + b);
            if (!psi_frame.at(m + a, m + b).is_zero())
                throw internal_error("deform: psi does not land in the (1,0) block");
            if (!psi_frame.at(a, b).is_zero() || !psi_frame.at(m + a, b).is_zero())
                throw internal_error("deform: psi does not annihilate the (1,0) vectors");
        }
    // real part check: psi + conj(psi) reproduces L
    Mat back(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) back.at(a, b) = psi_e.at(a, b) + psi_e.at(a, b).conj();
    if (!(back - l).is_zero()) throw internal_error("deform: psi + conj(psi) != L");
    return out;
}

}  // namespace dolce
