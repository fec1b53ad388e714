#include "dolce/model.hpp"

#include <bit>

namespace dolce {

namespace {

// SPD via exact leading principal minors
void validate_metric(const Mat& g, int dim, ValidationReport& report) {
    if (g.rows() != dim || g.cols() != dim) {
        report.add("metric-shape", "metric must be " + std::to_string(dim) + "x" + std::to_string(dim));
        return;
    }
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            if (!g.at(a, b).is_real()) report.add("metric-rational", "metric entries must be rational");
            if (g.at(a, b) != g.at(b, a)) {
                report.add("metric-symmetric", "metric is not symmetric");
                return;
            }
        }
    for (int k = 1; k <= dim; ++k) {
        Mat lead(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) lead.at(a, b) = g.at(a, b);
        Scalar minor = det(lead);
        if (minor.re() <= 0) {
            report.add("metric-spd", "leading principal minor " + std::to_string(k) + " is not positive");
            return;
        }
    }
}

// d phi^i in the complexified algebra for a real-mode model
std::vector<FormVector> coframe_differentials_from_real(const ExteriorAlgebra& cplx_alg,
                                                        const ComplexFrame& frame,
                                                        const CeDifferential& d_real) {
    const int n = cplx_alg.generators();
    std::vector<FormVector> d_gen;
    for (int a = 0; a < n; ++a) {
        // d phi^a = sum_b frame[a][b] d e^b, pushed through the degree-2 change of basis
        std::vector<Scalar> real_coords(d_real.at(1).rows());
        for (int b = 0; b < n; ++b) {
            const Scalar& c = frame.frame.at(a, b);
            if (c.is_zero()) continue;
            for (int r = 0; r < d_real.at(1).rows(); ++r) real_coords[r] += c * d_real.at(1).at(r, b);
        }
        auto cplx_coords = frame.real_to_cplx[2] * real_coords;
        d_gen.push_back(FormVector::from_degree_coords(cplx_alg, 2, cplx_coords));
    }
    return d_gen;
}

// d phi FormVectors from a complex-mode document, conjugate rows included
std::vector<FormVector> coframe_differentials_from_doc(const ExteriorAlgebra& cplx_alg,
                                                       const InputDocument& doc) {
    const int m = doc.dimension;
    std::vector<FormVector> d_gen(2 * m, FormVector(cplx_alg));
    for (int i = 0; i < m; ++i) {
        FormVector f(cplx_alg);
        for (const CoframeTerm& term : doc.d_phi[i]) {
            Mono mono = 0;
            int sign = 1;
            switch (term.kind) {
                case TermKind::holomorphic:  // phi^a ^ phi^b, a < b
                    mono = (Mono(1) << (term.a - 1)) | (Mono(1) << (term.b - 1));
                    break;
                case TermKind::mixed:  // phi^a ^ conj(phi^b)
                    mono = (Mono(1) << (term.a - 1)) | (Mono(1) << (m + term.b - 1));
                    break;
                case TermKind::antiholomorphic:  // conj(phi^a) ^ conj(phi^b), a < b
                    mono = (Mono(1) << (m + term.a - 1)) | (Mono(1) << (m + term.b - 1));
                    break;
            }
            f.add_term(mono, term.coeff * Scalar(sign));
        }
        d_gen[i] = f;
        d_gen[m + i] = conj(f);
    }
    return d_gen;
}

// real Lie algebra underlying a complex-mode document: coframe
// e^{2i-1} = (phi^i + conj phi^i)/2, e^{2i} = (phi^i - conj phi^i)/(2i)
LieAlgebraSpec reconstruct_real_spec(const ExteriorAlgebra& cplx_alg,
                                     const std::vector<FormVector>& d_gen, const std::string& name) {
    const int m = cplx_alg.m();
    const int n = 2 * m;
    LieAlgebraSpec spec;
    spec.dim = n;
    spec.name = name;

    // phi-coordinates of the real coframe
    std::vector<FormVector> d_real_coframe(n, FormVector(cplx_alg));
    const Scalar half(Rational(1, 2));
    const Scalar half_over_i = Scalar(Rational(0), Rational(-1, 2));  // 1/(2i)
    for (int i = 0; i < m; ++i) {
        d_real_coframe[2 * i] = (d_gen[i] + d_gen[m + i]) * half;
        d_real_coframe[2 * i + 1] = (d_gen[i] - d_gen[m + i]) * half_over_i;
    }

    // expand the complexified 2-form basis into wedge products of the real coframe:
    // invert the substitution phi^i = e^{2i-1} + i e^{2i}
    ExteriorAlgebra real_alg(n);
    std::vector<FormVector> phi_in_e;
    for (int i = 0; i < m; ++i) {
        FormVector f(real_alg);
        f.add_term(Mono(1) << (2 * i), Scalar(1));
        f.add_term(Mono(1) << (2 * i + 1), Scalar::i());
        phi_in_e.push_back(f);
    }
    for (int i = 0; i < m; ++i) phi_in_e.push_back(conj(phi_in_e[i]));

    for (int l = 0; l < n; ++l) {
        FormVector de(real_alg);
        for (const auto& [mono, c] : d_real_coframe[l].terms()) {
            FormVector w = FormVector::monomial(real_alg, 0, c);
            for (Mono rest = mono; rest; rest &= rest - 1)
                w = wedge(w, phi_in_e[std::countr_zero(rest)]);
            de = de + w;
        }
        // d e^l must be real: read off C^l_{jk} = - coefficient of e^{jk}
        for (const auto& [mono, c] : de.terms()) {
            if (!c.is_real())
                throw internal_error("reconstruct_real_spec: non-real structure constant");
            int j = std::countr_zero(mono);
            int k = std::countr_zero(mono & (mono - 1));
            if (j > k) std::swap(j, k);
            auto current = spec.bracket(j, k);
            current[l] = -c.re();
            spec.set_bracket(j, k, current);
        }
    }
    return spec;
}

Mat standard_j(int m) {
    Mat j(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        j.at(2 * i + 1, 2 * i) = Scalar(1);   // J e_{2i-1} = e_{2i}
        j.at(2 * i, 2 * i + 1) = Scalar(-1);  // J e_{2i}   = -e_{2i-1}
    }
    return j;
}

}  // namespace

std::unique_ptr<Model> Model::build(const InputDocument& doc) {
    auto model = std::unique_ptr<Model>(new Model());
    model->name_ = doc.name;
    model->from_complex_mode_ = doc.mode == InputMode::complex_coframe;

    ValidationReport report;

    if (doc.mode == InputMode::real) {
        model->m_ = doc.dimension / 2;
        model->spec_.dim = doc.dimension;
        model->spec_.name = doc.name;
        for (const BracketEntry& entry : doc.brackets) {
            std::vector<Rational> coeffs(doc.dimension, Rational(0));
            for (const auto& [l, c] : entry.coefficients) coeffs[l - 1] = c;
            model->spec_.set_bracket(entry.j - 1, entry.k - 1, coeffs);
        }
        report = validate_lie_algebra(model->spec_);
        if (!report.ok()) throw validation_error(report);

        model->real_alg_ = std::make_unique<ExteriorAlgebra>(doc.dimension);
        model->d_real_ = ce_differential(*model->real_alg_, model->spec_);

        if (doc.j) {
            report = validate_acs(*doc.j, doc.dimension, doc.metric);
            if (!report.ok()) throw validation_error(report);
            model->j_ = *doc.j;
            model->has_acs_ = true;
        }
    } else {
        model->m_ = doc.dimension;
        auto cplx = ExteriorAlgebra::bigraded(model->m_);

        // validate d^2 = 0 for the document's coframe differentials
        auto tmp_alg = std::make_unique<ExteriorAlgebra>(std::move(cplx));
        auto d_gen = coframe_differentials_from_doc(*tmp_alg, doc);
        for (int k = 0; k + 1 <= tmp_alg->top_degree(); ++k) {
            Mat dk = derivation_matrix(*tmp_alg, k, d_gen);
            Mat dk1 = derivation_matrix(*tmp_alg, k + 1, d_gen);
            if (!(dk1 * dk).is_zero()) {
                report.add("coframe-d2", "the induced differential does not satisfy d^2 = 0");
                throw validation_error(report);
            }
        }

        model->spec_ = reconstruct_real_spec(*tmp_alg, d_gen, doc.name);
        report = validate_lie_algebra(model->spec_);
        if (!report.ok()) throw validation_error(report);
        model->real_alg_ = std::make_unique<ExteriorAlgebra>(model->spec_.dim);
        model->d_real_ = ce_differential(*model->real_alg_, model->spec_);
        model->j_ = standard_j(model->m_);
        model->has_acs_ = true;
        report = validate_acs(model->j_, model->spec_.dim, doc.metric);
        if (!report.ok()) throw validation_error(report);
    }

    if (doc.metric) {
        validate_metric(*doc.metric, model->spec_.dim, report);
        if (!report.ok()) throw validation_error(report);
        model->metric_ = doc.metric;
    }

    model->unimodular_ = dolce::unimodularity(model->spec_);

    if (model->has_acs_) {
        model->cplx_alg_ = std::make_unique<ExteriorAlgebra>(ExteriorAlgebra::bigraded(model->m_));
        model->frame_ = complex_frame(*model->real_alg_, *model->cplx_alg_, model->j_);
        auto d_gen = coframe_differentials_from_real(*model->cplx_alg_, model->frame_, model->d_real_);
        model->quad_ = BigradedComplex::build(*model->cplx_alg_, d_gen);

        // the two routes to d agree: CE differential conjugated by the change
        // of basis equals the derivation extension of the coframe differentials
        for (int k = 0; k < model->spec_.dim; ++k) {
            Mat via_real =
                model->frame_.real_to_cplx[k + 1] * model->d_real_.at(k) * model->frame_.cplx_to_real[k];
            if (!(via_real - model->quad_.d_total(k)).is_zero())
                throw internal_error("model: real and complex routes to d disagree");
        }

        SquareZeroReport sq = verify_square_zero_relations(model->quad_);
        if (!sq.ok()) throw internal_error("model: square-zero relations violated: " + sq.violations[0]);
    }
    return model;
}

namespace {
[[noreturn]] void missing_acs() {
    ValidationReport report;
    report.add("no-acs", "this computation needs an almost complex structure; the document has none");
    throw validation_error(report);
}
}  // namespace

const Mat& Model::j() const {
    if (!has_acs_) missing_acs();
    return j_;
}

const ComplexFrame& Model::frame() const {
    if (!has_acs_) missing_acs();
    return frame_;
}

const BigradedComplex& Model::quad() const {
    if (!has_acs_) missing_acs();
    return quad_;
}

const DeRhamCohomology& Model::de_rham() const {
    if (!de_rham_) de_rham_ = dolce::de_rham(*real_alg_, d_real_);
    return *de_rham_;
}

}  // namespace dolce
