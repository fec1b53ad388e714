#include <doctest.h>

#include <random>

#include "dolce/corpus.hpp"
#include "dolce/spectral.hpp"
#include "spectral_oracle.hpp"

using namespace dolce;

namespace {

std::unique_ptr<Model> corpus_model(const std::string& key) {
    const CorpusEntry* entry = corpus_find(key);
    REQUIRE(entry != nullptr);
    return Model::build(entry->document);
}

Mono phi_mono(const ExteriorAlgebra& alg, std::initializer_list<int> hol,
              std::initializer_list<int> anti) {
    Mono m = 0;
    for (int i : hol) m |= Mono(1) << (i - 1);
    for (int i : anti) m |= Mono(1) << (alg.m() + i - 1);
    return m;
}

}  // namespace

TEST_CASE("witness spaces of structure (A) at (1,1)") {
    auto model = corpus_model("sol3-A");
    SpectralSequence ss(*model);
    const auto& alg = model->cplx_algebra();

    const Subspace& x1 = ss.x_space(1, 1, 1);
    CHECK(x1.dim() == 3);
    for (auto mono : {phi_mono(alg, {1}, {1}), phi_mono(alg, {1}, {2}), phi_mono(alg, {2}, {1})})
        CHECK(x1.contains(FormVector::monomial(alg, mono).bidegree_coords(1, 1)));

    const Subspace& y1 = ss.y_space(1, 1, 1);
    CHECK(y1.dim() == 1);
    CHECK(y1.contains(FormVector::monomial(alg, phi_mono(alg, {1}, {1})).bidegree_coords(1, 1)));

    // the second-stage denominator coincides with the first here
    CHECK(ss.y_space(1, 1, 2) == y1);
}

TEST_CASE("witness spaces of integrable inputs and the abelian baseline") {
    auto cu = corpus_model("cu-nilpotent-s0");
    SpectralSequence ss(*cu);
    const auto& quad = cu->quad();
    // integrable: X^{p,q}_1 = ker delbar on the piece
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            Subspace ker = Subspace::span_rows(nullspace(quad.component(OpKind::delbar, p, q)));
            CHECK(ss.x_space(p, q, 1) == ker);
        }

    auto ab = corpus_model("abelian-R4-stdJ");
    SpectralSequence ss_ab(*ab);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (int r = 1; r <= 3; ++r) CHECK(ss_ab.y_space(p, q, r).dim() == 0);
}

TEST_CASE("structure (C) pages") {
    auto model = corpus_model("sol3-C");
    SpectralSequence ss(*model);
    const auto& alg = model->cplx_algebra();

    // X^{1,1}_2 contains phi^{1 1bar} and phi^{2 2bar}
    const Subspace& x2 = ss.x_space(1, 1, 2);
    CHECK(x2.contains(FormVector::monomial(alg, phi_mono(alg, {1}, {1})).bidegree_coords(1, 1)));
    CHECK(x2.contains(FormVector::monomial(alg, phi_mono(alg, {2}, {2})).bidegree_coords(1, 1)));

    SpectralPage p1 = ss.page(1);
    CHECK(p1.dims == grid_rows(2, {{0, 1, 1}, {2, 4, 2}, {1, 1, 0}}));
    SpectralPage p2 = ss.page(2);
    CHECK(p2.dims == grid_rows(2, {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}}));
    auto [limit, stage] = ss.e_infinity();
    CHECK(stage == 2);
    CHECK(limit.dims == p2.dims);
}

TEST_CASE("degeneration stages across the corpus") {
    for (const auto& entry : corpus()) {
        if (entry.expected.degeneration_stage < 0) continue;
        auto model = Model::build(entry.document);
        SpectralSequence ss(*model);
        auto [limit, stage] = ss.e_infinity();
        INFO(entry.key);
        CHECK(stage == entry.expected.degeneration_stage);
        for (const auto& [r, grid] : entry.expected.pages) CHECK(ss.page(r).dims == grid);
    }
}

TEST_CASE("frolicher relations") {
    FrolicherReport a = frolicher_check(*corpus_model("sol3-A"));
    CHECK(a.inequality_holds);
    CHECK(a.euler_matches);
    CHECK(a.slack == std::vector<int>{0, 0, 0, 0, 0});

    FrolicherReport c = frolicher_check(*corpus_model("sol3-C"));
    CHECK(c.inequality_holds);
    CHECK(c.euler_matches);
    CHECK(c.slack[1] == 1);  // b^1 = 2 < h^{1,0} + h^{0,1} = 3

    FrolicherReport ab = frolicher_check(*corpus_model("abelian-R4-stdJ"));
    for (int s : ab.slack) CHECK(s == 0);
}

TEST_CASE("d_1 class is independent of the witness") {
    auto model = corpus_model("sol3-A");
    SpectralSequence ss(*model);
    const auto& alg = model->cplx_algebra();

    // alpha = phi^{2bar} lies in X^{0,1}_1 with witness phi^2
    FormVector alpha = FormVector::monomial(alg, phi_mono(alg, {}, {2}));
    FormVector witness = ss.d1_witness(0, 1, alpha);
    auto class1 = ss.d1_class(0, 1, alpha, witness);
    // shifting the witness by anything mubar-closed leaves the class alone
    FormVector shifted = witness + FormVector::monomial(alg, phi_mono(alg, {1}, {}), Scalar(7));
    auto class2 = ss.d1_class(0, 1, alpha, shifted);
    CHECK(class1 == class2);
    for (const auto& c : class1) CHECK(c.is_zero());  // d_1 vanishes here (stage-1 degeneration)
}

TEST_CASE("page 2 equals the d_1 cohomology of page 1") {
    for (const char* key : {"sol3-C", "G-alpha-112-A", "cu-nilpotent-s1"}) {
        auto model = corpus_model(key);
        SpectralSequence ss(*model);
        const int m = model->m();
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                INFO(key << " (" << p << "," << q << ")");
                Mat out = ss.d1_matrix(p, q);
                int rank_out = rref(out).rank;
                int rank_in = p > 0 ? rref(ss.d1_matrix(p - 1, q)).rank : 0;
                int e2 = ss.page(1).dims.at(p, q) - rank_out - rank_in;
                CHECK(e2 == ss.page(2).dims.at(p, q));
            }
    }
}

TEST_CASE("staircase dimensions match the brute-force oracle") {
    // abelian baseline
    LieAlgebraSpec abelian;
    abelian.dim = 4;
    abelian.name = "abelian";

    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);

    std::vector<LieAlgebraSpec> specs{abelian};
    for (int t = 0; t < 20; ++t) {
        // two-step nilpotent: brackets land in the central span of e3, e4
        LieAlgebraSpec spec;
        spec.dim = 4;
        spec.name = "nilpotent-" + std::to_string(t);
        std::vector<Rational> c12(4, Rational(0)), c13(4, Rational(0)), c23(4, Rational(0));
        c12[2] = Rational(coeff(rng), den(rng));
        c12[3] = Rational(coeff(rng), den(rng));
        c13[3] = Rational(coeff(rng), den(rng));
        c23[3] = Rational(coeff(rng), den(rng));
        spec.set_bracket(0, 1, c12);
        spec.set_bracket(0, 2, c13);
        spec.set_bracket(1, 2, c23);
        specs.push_back(spec);
    }

    Mat j(4, 4);  // standard pairing
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
                    INFO(spec.name << " at (" << p << "," << q << ") r = " << r);
                    CHECK(ss.x_space(p, q, r).dim() == oracle::x_dim(cx, p, q, r));
                    CHECK(ss.y_space(p, q, r).dim() == oracle::y_dim(cx, p, q, r));
                }
    }
}
