#include "dolce/lie_algebra.hpp"

namespace dolce {

namespace {

std::string issues_to_string(const ValidationReport& report) {
    std::string out = "validation failed:";
    for (const auto& issue : report.issues) out += "\n  [" + issue.code + "] " + issue.detail;
    return out;
}

}  // namespace

validation_error::validation_error(const ValidationReport& r)
    : std::runtime_error(issues_to_string(r)), report(r) {}

std::vector<Rational> LieAlgebraSpec::bracket(int j, int k) const {
    std::vector<Rational> out(dim, Rational(0));
    if (j == k) return out;
    bool flip = j > k;
    if (flip) std::swap(j, k);
    auto it = brackets.find({j, k});
    if (it == brackets.end()) return out;
    out = it->second;
    if (flip)
        for (auto& c : out) c = -c;
    return out;
}

void LieAlgebraSpec::set_bracket(int j, int k, std::vector<Rational> coeffs) {
    if (j >= k) throw internal_error("set_bracket expects j < k");
    if (static_cast<int>(coeffs.size()) != dim) throw internal_error("set_bracket: coefficient size");
    for (auto& c : coeffs) c = canonical(std::move(c));
    bool zero = true;
    for (const auto& c : coeffs)
        if (c != 0) zero = false;
    if (zero)
        brackets.erase({j, k});
    else
        brackets[{j, k}] = std::move(coeffs);
}

namespace {

std::vector<Rational> bracket_vec(const LieAlgebraSpec& spec, int j, const std::vector<Rational>& v) {
    // [e_j, v] for a coefficient vector v
    std::vector<Rational> out(spec.dim, Rational(0));
    for (int k = 0; k < spec.dim; ++k) {
        if (v[k] == 0) continue;
        auto b = spec.bracket(j, k);
        for (int l = 0; l < spec.dim; ++l) out[l] += v[k] * b[l];
    }
    return out;
}

std::vector<FormVector> ce_generator_images(const ExteriorAlgebra& alg, const LieAlgebraSpec& spec) {
    std::vector<FormVector> images(spec.dim, FormVector(alg));
    for (int l = 0; l < spec.dim; ++l) {
        FormVector dl(alg);
        for (const auto& [pair, coeffs] : spec.brackets) {
            auto [j, k] = pair;
            if (coeffs[l] == 0) continue;
            dl.add_term((Mono(1) << j) | (Mono(1) << k), Scalar(-coeffs[l]));
        }
        images[l] = dl;
    }
    return images;
}

}  // namespace

ValidationReport validate_lie_algebra(const LieAlgebraSpec& spec) {
    ValidationReport report;
    if (spec.dim <= 0 || spec.dim % 2 != 0)
        report.add("dimension", "dimension must be a positive even integer, got " + std::to_string(spec.dim));
    for (const auto& [pair, coeffs] : spec.brackets) {
        auto [j, k] = pair;
        if (j < 0 || k >= spec.dim || j >= k)
            report.add("bracket-index", "bracket pair out of range");
        if (static_cast<int>(coeffs.size()) != spec.dim)
            report.add("bracket-size", "bracket coefficient vector has wrong length");
    }
    if (!report.ok()) return report;

    int jacobi_failures = 0;
    for (int j = 0; j < spec.dim; ++j)
        for (int k = j + 1; k < spec.dim; ++k)
            for (int l = k + 1; l < spec.dim; ++l) {
                auto s1 = bracket_vec(spec, j, spec.bracket(k, l));
                auto s2 = bracket_vec(spec, k, spec.bracket(l, j));
                auto s3 = bracket_vec(spec, l, spec.bracket(j, k));
                bool zero = true;
                for (int t = 0; t < spec.dim; ++t)
                    if (s1[t] + s2[t] + s3[t] != 0) zero = false;
                if (!zero) {
                    ++jacobi_failures;
                    report.add("jacobi", "cyclic sum nonzero on triple (" + std::to_string(j + 1) + "," +
                                             std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
                }
            }

    // cross-check: Jacobi holds iff d^2 = 0 on 1-forms
    ExteriorAlgebra alg(spec.dim);
    auto images = ce_generator_images(alg, spec);
    Mat d1 = derivation_matrix(alg, 1, images);
    Mat d2 = derivation_matrix(alg, 2, images);
    bool d_squares = (d2 * d1).is_zero();
    if (d_squares != (jacobi_failures == 0))
        throw internal_error("validate_lie_algebra: Jacobi and d^2 criteria disagree");
    return report;
}

CeDifferential ce_differential(const ExteriorAlgebra& alg, const LieAlgebraSpec& spec) {
    ValidationReport report = validate_lie_algebra(spec);
    if (!report.ok()) throw validation_error(report);
    auto images = ce_generator_images(alg, spec);
    std::vector<Mat> d;
    for (int k = 0; k <= alg.top_degree(); ++k) d.push_back(derivation_matrix(alg, k, images));
    for (int k = 0; k + 1 <= alg.top_degree(); ++k)
        if (!(d[k + 1] * d[k]).is_zero()) throw internal_error("ce_differential: d^2 != 0");
    if (!d[alg.top_degree()].is_zero())
        throw internal_error("ce_differential: d nonzero on the top degree");
    return CeDifferential(&alg, std::move(d));
}

UnimodularityReport unimodularity(const LieAlgebraSpec& spec) {
    UnimodularityReport out;
    out.traces.resize(spec.dim, Rational(0));
    for (int j = 0; j < spec.dim; ++j) {
        // Tr(ad_{e_j}) = sum_k C^k_{jk}
        for (int k = 0; k < spec.dim; ++k) {
            if (k == j) continue;
            out.traces[j] += spec.bracket(j, k)[k];
        }
    }
    out.unimodular = true;
    for (const auto& t : out.traces)
        if (t != 0) out.unimodular = false;

    // equivalent criterion: d vanishes identically on (2m-1)-forms
    ExteriorAlgebra alg(spec.dim);
    CeDifferential d = ce_differential(alg, spec);
    bool top_minus_one_zero = d.at(spec.dim - 1).is_zero();
    if (top_minus_one_zero != out.unimodular)
        throw internal_error("unimodularity: trace and top-degree criteria disagree");
    return out;
}

DeRhamCohomology de_rham(const ExteriorAlgebra& alg, const CeDifferential& d) {
    DeRhamCohomology out;
    const int n = alg.top_degree();
    for (int k = 0; k <= n; ++k) {
        LinearOperator dk{d.at(k), "A^" + std::to_string(k), "A^" + std::to_string(k + 1)};
        auto [ker, img_unused] = kernel_image(dk);
        Subspace img = k > 0 ? kernel_image({d.at(k - 1), "", ""}).second
                             : Subspace::zero(static_cast<int>(alg.basis(k).size()));
        QuotientBasis q = quotient_basis(ker, img);
        CohomologyGroup g;
        g.piece = "A^" + std::to_string(k);
        g.numerator = "ker d";
        g.denominator = "im d";
        g.numerator_dim = ker.dim();
        g.denominator_dim = img.dim();
        g.dim = q.dim();
        for (int i = 0; i < q.dim(); ++i)
            g.representatives.push_back(FormVector::from_degree_coords(alg, k, q.representatives.row(i)));
        out.groups.push_back(std::move(g));
        out.betti.push_back(out.groups.back().dim);
        out.euler_characteristic += (k % 2 == 0 ? 1 : -1) * out.betti.back();
    }
    return out;
}

}  // namespace dolce
