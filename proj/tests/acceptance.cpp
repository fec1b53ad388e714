// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Everything is exact arithmetic; "tolerance" everywhere is equality.

#include <functional>
#include <iostream>
#include <random>

#include "dolce/checks.hpp"
#include "dolce/cohomology.hpp"
#include "dolce/corpus.hpp"
#include "dolce/harmonic.hpp"
#include "dolce/model.hpp"
#include "dolce/spectral.hpp"
#include "spectral_oracle.hpp"

using namespace dolce;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note << "\n";
    if (!pass) ++g_failures;
}

std::unique_ptr<Model> model_of(const std::string& key) {
    const CorpusEntry* entry = corpus_find(key);
    if (!entry) throw std::runtime_error("missing corpus key " + key);
    return Model::build(entry->document);
}

InputDocument g_alpha_document(long a2, long a3, long a4, const std::vector<std::pair<int, int>>& pairs) {
    InputDocument doc;
    doc.mode = InputMode::real;
    doc.name = "G-alpha";
    doc.dimension = 4;
    long alpha[3] = {a2, a3, a4};
    for (int j = 1; j < 4; ++j) {
        BracketEntry be;
        be.j = 1;
        be.k = j + 1;
        be.coefficients[j + 1] = Rational(alpha[j - 1]);
        doc.brackets.push_back(be);
    }
    Mat j(4, 4);
    for (auto [a, b] : pairs) {
        j.at(b - 1, a - 1) = Scalar(1);
        j.at(a - 1, b - 1) = Scalar(-1);
    }
    doc.j = j;
    return doc;
}

// random rational almost complex structure: conjugate the standard pairing by
// a random invertible rational matrix
Mat random_acs(std::mt19937_64& rng, int dim) {
    Mat j0(dim, dim);
    for (int i = 0; i < dim / 2; ++i) {
        j0.at(2 * i + 1, 2 * i) = Scalar(1);
        j0.at(2 * i, 2 * i + 1) = Scalar(-1);
    }
    std::uniform_int_distribution<long> entry(-3, 3);
    while (true) {
        Mat s(dim, dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) s.at(a, b) = Scalar(entry(rng));
        if (det(s).is_zero()) continue;
        return s * j0 * inverse(s);
    }
}

bool grids_equal(const Model& a, const Model& b, int pages) {
    SpectralSequence sa(a), sb(b);
    for (int r = 1; r <= pages; ++r)
        if (!(sa.page(r).dims == sb.page(r).dims)) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "Betti tables and Euler characteristics", [] {
        auto sol3 = model_of("sol3-A");
        auto g = model_of("G-alpha-112-A");
        return sol3->de_rham().betti == std::vector<int>{1, 2, 2, 2, 1} &&
               sol3->de_rham().euler_characteristic == 0 &&
               g->de_rham().betti == std::vector<int>{1, 1, 0, 1, 1} &&
               g->de_rham().euler_characteristic == 0;
    });

    criterion(2, "sol3 page grids and degeneration stages", [] {
        auto a = model_of("sol3-A");
        SpectralSequence ssa(*a);
        Grid e1a = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        auto [lim_a, stage_a] = ssa.e_infinity();
        if (!(ssa.page(1).dims == e1a) || stage_a != 1) return false;

        auto b = model_of("sol3-B");
        SpectralSequence ssb(*b);
        auto [lim_b, stage_b] = ssb.e_infinity();
        if (!(ssb.page(1).dims == e1a) || stage_b != 1) return false;
        for (int r = 1; r <= 3; ++r)
            if (!(ssb.page(r).dims == ssa.page(r).dims)) return false;

        auto c = model_of("sol3-C");
        SpectralSequence ssc(*c);
        Grid e1c = grid_rows(2, {{0, 1, 1}, {2, 4, 2}, {1, 1, 0}});
        Grid e2c = grid_rows(2, {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}});
        auto [lim_c, stage_c] = ssc.e_infinity();
        return ssc.page(1).dims == e1c && ssc.page(2).dims == e2c && stage_c == 2 &&
               lim_c.dims == e2c;
    });

    criterion(3, "G(alpha) page grids and the alpha-permutation rule", [] {
        auto a = model_of("G-alpha-112-A");
        SpectralSequence ss(*a);
        Grid e1 = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        Grid e2 = grid_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
        auto [lim, stage] = ss.e_infinity();
        if (!(ss.page(1).dims == e1 && ss.page(2).dims == e2 && ss.page(3).dims == e2 && stage == 2))
            return false;

        // structure (B) pairs e1 with e3: weights permute to (a3, a2, a4)
        auto b = model_of("G-alpha-112-B");
        auto b_ref = Model::build(g_alpha_document(1, 1, -2, {{1, 2}, {3, 4}}));
        if (!grids_equal(*b, *b_ref, 3)) return false;

        // structure (C) pairs e1 with e4: weights permute to (a4, a2, a3)
        auto c = model_of("G-alpha-112-C");
        auto c_ref = Model::build(g_alpha_document(-2, 1, 1, {{1, 2}, {3, 4}}));
        return grids_equal(*c, *c_ref, 3);
    });

    criterion(4, "J-invariant and anti-invariant groups of sol3", [] {
        auto a = model_of("sol3-A");
        JInvariantReport ra = h_plus_minus(*a);
        if (ra.h_plus != 1 || ra.h_minus != 1) return false;
        const auto& alg = a->real_algebra();
        FormVector e14 = FormVector::monomial(alg, (Mono(1) << 0) | (Mono(1) << 3));
        FormVector e23 = FormVector::monomial(alg, (Mono(1) << 1) | (Mono(1) << 2));
        Mat plus(1, 6), minus(1, 6);
        plus.set_row(0, (e14 - e23).degree_coords(2));
        minus.set_row(0, (e14 + e23).degree_coords(2));
        if (!Subspace::span_rows(plus).contains(ra.plus_representatives[0].degree_coords(2)))
            return false;
        if (!Subspace::span_rows(minus).contains(ra.minus_representatives[0].degree_coords(2)))
            return false;
        JInvariantReport rc = h_plus_minus(*model_of("sol3-C"));
        return rc.h_plus == 2 && rc.h_minus == 0;
    });

    criterion(5, "inclusion criterion equivalence, pinned cases and 110 random structures", [] {
        InclusionReport a = inclusion_condition(*model_of("sol3-A"));
        InclusionReport c = inclusion_condition(*model_of("sol3-C"));
        InclusionReport s0 = inclusion_condition(*model_of("cu-nilpotent-s0"));
        InclusionReport s1 = inclusion_condition(*model_of("cu-nilpotent-s1"));
        if (!(a.condition_star && a.flags_agree && a.inclusion_injective)) return false;
        if (!(!c.condition_star && c.flags_agree)) return false;
        if (!(!s1.condition_star && s1.flags_agree && s1.e01_page1 == 3 && s1.e01_page2 == 2))
            return false;
        if (!(s0.condition_star && s0.flags_agree && s0.inclusion_injective)) return false;

        for (const auto& entry : corpus()) {
            auto model = Model::build(entry.document);
            if (!model->has_acs()) continue;
            InclusionReport r = inclusion_condition(*model);
            if (!r.flags_agree) return false;
            if (r.condition_star && !r.inclusion_injective) return false;
            if (entry.expected.condition_star && r.condition_star != *entry.expected.condition_star)
                return false;
        }

        std::mt19937_64 rng(2024);
        const char* base_keys[3] = {"sol3-A", "G-alpha-112-A", "abelian-R4-stdJ"};
        for (int t = 0; t < 102; ++t) {
            InputDocument doc = corpus_find(base_keys[t % 3])->document;
            doc.j = random_acs(rng, 4);
            auto model = Model::build(doc);
            InclusionReport r = inclusion_condition(*model);
            if (!r.flags_agree) return false;
            if (r.condition_star && !r.inclusion_injective) return false;
        }

        // a handful of random structures over the 6-dimensional algebra: use
        // the real form reconstructed from the coframe document
        auto cu = model_of("cu-nilpotent-s1");
        InputDocument cu_real;
        cu_real.mode = InputMode::real;
        cu_real.name = "cu-real";
        cu_real.dimension = 6;
        for (const auto& [pair, coeffs] : cu->spec().brackets) {
            BracketEntry be;
            be.j = pair.first + 1;
            be.k = pair.second + 1;
            for (int l = 0; l < 6; ++l)
                if (coeffs[l] != 0) be.coefficients[l + 1] = coeffs[l];
            cu_real.brackets.push_back(be);
        }
        for (int t = 0; t < 8; ++t) {
            cu_real.j = random_acs(rng, 6);
            auto model = Model::build(cu_real);
            InclusionReport r = inclusion_condition(*model);
            if (!r.flags_agree) return false;
            if (r.condition_star && !r.inclusion_injective) return false;
        }
        return true;
    });

    criterion(6, "deformation dichotomy for structure (C)", [] {
        auto di = model_of("sol3-C-deform-i");
        SpectralSequence ssi(*di);
        auto [lim_i, stage_i] = ssi.e_infinity();
        if (stage_i != 2) return false;

        auto dii = model_of("sol3-C-deform-ii");
        auto a = model_of("sol3-A");
        SpectralSequence ssii(*dii), ssa(*a);
        auto [lim_ii, stage_ii] = ssii.e_infinity();
        if (stage_ii != 1) return false;
        for (int r = 1; r <= 3; ++r)
            if (!(ssii.page(r).dims == ssa.page(r).dims)) return false;
        return true;
    });

    criterion(7, "Serre duality at every page with the star-conjugation witness", [] {
        for (const auto& entry : corpus()) {
            auto model = Model::build(entry.document);
            if (!model->has_acs()) continue;
            if (!model->unimodularity().unimodular) continue;
            HarmonicContext ctx(*model);
            SerreDualityReport report = serre_duality_check(ctx);
            if (!report.all_pages_symmetric || !report.page1_witnessed) return false;
        }
        return true;
    });

    criterion(8, "property suites on every corpus entry", [] {
        for (const auto& entry : corpus()) {
            auto model = Model::build(entry.document);
            if (!model->has_acs()) continue;
            CheckRun run = run_checks(*model, "all");
            if (!run.all_pass()) {
                for (const auto& line : run.lines)
                    if (!line.pass)
                        std::cout << "       " << entry.key << ": " << line.label << "\n";
                return false;
            }
            // the two routes to page 1 are compared inside page(); force both
            SpectralSequence ss(*model);
            auto grid = dolbeault_grid(*model);
            for (int p = 0; p <= model->m(); ++p)
                for (int q = 0; q <= model->m(); ++q)
                    if (ss.page(1).dims.at(p, q) != grid[p][q]) return false;
        }
        return true;
    });

    criterion(9, "brute-force staircase oracle on abelian and random nilpotent inputs", [] {
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<long> coeff(-3, 3);

        std::vector<LieAlgebraSpec> specs;
        LieAlgebraSpec abelian;
        abelian.dim = 4;
        abelian.name = "abelian";
        specs.push_back(abelian);
        for (int t = 0; t < 12; ++t) {
            LieAlgebraSpec spec;
            spec.dim = 4;
            spec.name = "nilpotent-" + std::to_string(t);
            std::vector<Rational> c12(4, Rational(0)), c13(4, Rational(0)), c23(4, Rational(0));
            c12[2] = coeff(rng);
            c12[3] = coeff(rng);
            c13[3] = coeff(rng);
            c23[3] = coeff(rng);
            spec.set_bracket(0, 1, c12);
            spec.set_bracket(0, 2, c13);
            spec.set_bracket(1, 2, c23);
            specs.push_back(spec);
        }

        Mat j(4, 4);
        j.at(1, 0) = Scalar(1);
        j.at(0, 1) = Scalar(-1);
        j.at(3, 2) = Scalar(1);
        j.at(2, 3) = Scalar(-1);

        for (const auto& spec : specs) {
            InputDocument doc;
            doc.mode = InputMode::real;
            doc.name = spec.name;
            doc.dimension = 4;
            for (const auto& [pair, coeffs] : spec.brackets) {
                BracketEntry be;
                be.j = pair.first + 1;
                be.k = pair.second + 1;
                for (int l = 0; l < 4; ++l)
                    if (coeffs[l] != 0) be.coefficients[l + 1] = coeffs[l];
                doc.brackets.push_back(be);
            }
            doc.j = j;
            auto model = Model::build(doc);
            SpectralSequence ss(*model);
            oracle::Complex cx = oracle::Complex::from_spec(spec);
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2; ++q)
                    for (int r = 1; r <= 3; ++r) {
                        if (ss.x_space(p, q, r).dim() != oracle::x_dim(cx, p, q, r)) return false;
                        if (ss.y_space(p, q, r).dim() != oracle::y_dim(cx, p, q, r)) return false;
                    }
        }
        return true;
    });

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
