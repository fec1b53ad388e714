#include <doctest.h>

#include "dolce/cohomology.hpp"
#include "dolce/corpus.hpp"

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

Subspace rep_span(const ExteriorAlgebra& alg, const CohomologyGroup& g, int p, int q) {
    Mat rows(static_cast<int>(g.representatives.size()), alg.dim(p, q));
    for (std::size_t i = 0; i < g.representatives.size(); ++i)
        rows.set_row(static_cast<int>(i), g.representatives[i].bidegree_coords(p, q));
    return Subspace::span_rows(rows);
}

}  // namespace

TEST_CASE("mubar cohomology of structure (A)") {
    auto model = corpus_model("sol3-A");

    // (1,1): mubar vanishes into and out of the piece
    CohomologyGroup h11 = mu_bar_cohomology(*model, 1, 1);
    CHECK(h11.dim == 4);
    CHECK(h11.numerator_dim == 4);
    CHECK(h11.denominator_dim == 0);

    // (0,2): mubar phi^2 spans the image, kernel is everything
    CohomologyGroup h02 = mu_bar_cohomology(*model, 0, 2);
    CHECK(h02.numerator_dim == 1);
    CHECK(h02.denominator_dim == 1);
    CHECK(h02.dim == 0);

    // off-grid bidegrees give the zero group
    CHECK(mu_bar_cohomology(*model, 3, 0).dim == 0);
}

TEST_CASE("mubar cohomology of integrable input is the full piece") {
    auto model = corpus_model("cu-nilpotent-s0");
    const auto& alg = model->cplx_algebra();
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            CHECK(mu_bar_cohomology(*model, p, q).dim == alg.dim(p, q));
}

TEST_CASE("Dolbeault grid of structure (A)") {
    auto model = corpus_model("sol3-A");
    auto grid = dolbeault_grid(*model);
    // rows p, cols q
    int expected[3][3] = {{1, 2, 0}, {0, 2, 0}, {0, 2, 1}};
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(grid[p][q] == expected[p][q]);

    // representatives of h^{1,1} span <phi^{1 2bar}, phi^{2 1bar}> modulo the
    // degenerate directions
    CohomologyGroup h11 = dolbeault(*model, 1, 1);
    CHECK(h11.dim == 2);
    const auto& alg = model->cplx_algebra();
    Subspace span = rep_span(alg, h11, 1, 1);
    // the paper's representatives phi^{1 2bar} and phi^{1bar 2} = -phi^{2 1bar}
    CHECK(span.contains(
        FormVector::monomial(alg, phi_mono(alg, {1}, {2})).bidegree_coords(1, 1)));
    CHECK(span.contains(
        FormVector::monomial(alg, phi_mono(alg, {2}, {1})).bidegree_coords(1, 1)));
}

TEST_CASE("Dolbeault grid of structure (C) and the abelian baseline") {
    auto c = corpus_model("sol3-C");
    auto grid = dolbeault_grid(*c);
    CHECK(grid[1][1] == 4);
    CHECK(grid[0][1] == 2);
    CHECK(grid[1][0] == 1);
    CHECK(grid[2][1] == 2);
    CHECK(grid[1][2] == 1);

    auto ab = corpus_model("abelian-R4-stdJ");
    auto gab = dolbeault_grid(*ab);
    int binom[3] = {1, 2, 1};
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(gab[p][q] == binom[p] * binom[q]);
}

TEST_CASE("J-invariant and anti-invariant cohomology") {
    auto a = corpus_model("sol3-A");
    JInvariantReport ra = h_plus_minus(*a);
    CHECK(ra.h_plus == 1);
    CHECK(ra.h_minus == 1);
    CHECK(ra.c_pure);
    CHECK(ra.c_full);
    // representative spans: <e14 - e23> and <e14 + e23>
    const auto& alg = a->real_algebra();
    FormVector e14 = FormVector::monomial(alg, (Mono(1) << 0) | (Mono(1) << 3));
    FormVector e23 = FormVector::monomial(alg, (Mono(1) << 1) | (Mono(1) << 2));
    REQUIRE(ra.plus_representatives.size() == 1);
    REQUIRE(ra.minus_representatives.size() == 1);
    {
        Mat row(1, 6);
        row.set_row(0, (e14 - e23).degree_coords(2));
        CHECK(Subspace::span_rows(row).contains(ra.plus_representatives[0].degree_coords(2)));
    }
    {
        Mat row(1, 6);
        row.set_row(0, (e14 + e23).degree_coords(2));
        CHECK(Subspace::span_rows(row).contains(ra.minus_representatives[0].degree_coords(2)));
    }

    JInvariantReport rc = h_plus_minus(*corpus_model("sol3-C"));
    CHECK(rc.h_plus == 2);
    CHECK(rc.h_minus == 0);
    CHECK(rc.c_pure);
    CHECK(rc.c_full);

    JInvariantReport rb = h_plus_minus(*corpus_model("abelian-R4-stdJ"));
    CHECK(rb.h_plus == 4);
    CHECK(rb.h_minus == 2);
    CHECK(rb.c_pure);
    CHECK(rb.c_full);
    CHECK(rb.h_plus + rb.h_minus == rb.b2);
}

TEST_CASE("h+ + h- is bounded by b2 on every corpus entry") {
    for (const auto& entry : corpus()) {
        auto model = Model::build(entry.document);
        JInvariantReport r = h_plus_minus(*model);
        CHECK(r.h_plus + r.h_minus <= r.b2);
        // 4-dimensional entries are pure and full
        if (model->real_dim() == 4) {
            CHECK(r.c_pure);
            CHECK(r.c_full);
            CHECK(r.h_plus + r.h_minus == r.b2);
        }
    }
}

TEST_CASE("two-dimensional edge cases") {
    // abelian R^2 with the standard J: everything trivial and symmetric
    InputDocument doc;
    doc.mode = InputMode::real;
    doc.name = "abelian-R2";
    doc.dimension = 2;
    Mat j(2, 2);
    j.at(1, 0) = Scalar(1);
    j.at(0, 1) = Scalar(-1);
    doc.j = j;
    auto model = Model::build(doc);
    CHECK(model->de_rham().betti == std::vector<int>{1, 2, 1});
    auto grid = dolbeault_grid(*model);
    CHECK(grid[0][0] == 1);
    CHECK(grid[1][0] == 1);
    CHECK(grid[0][1] == 1);
    CHECK(grid[1][1] == 1);
    SpectralSequence ss(*model);
    CHECK(ss.e_infinity().second == 1);
    JInvariantReport r = h_plus_minus(*model);
    CHECK(r.h_plus == 1);  // the area form
    CHECK(r.h_minus == 0);

    // the affine algebra [e1,e2] = e2 in dimension two is not unimodular
    doc.name = "affine-2";
    BracketEntry be;
    be.j = 1;
    be.k = 2;
    be.coefficients[2] = Rational(1);
    doc.brackets = {be};
    auto affine = Model::build(doc);
    CHECK(affine->de_rham().betti == std::vector<int>{1, 1, 0});
    CHECK(!affine->unimodularity().unimodular);
    SpectralSequence ss2(*affine);
    CHECK(ss2.e_infinity().second <= 2);
}

TEST_CASE("inclusion criterion") {
    InclusionReport a = inclusion_condition(*corpus_model("sol3-A"));
    CHECK(a.condition_star);
    CHECK(a.y_spaces_equal);
    CHECK(a.flags_agree);
    CHECK(a.inclusion_injective);

    InclusionReport c = inclusion_condition(*corpus_model("sol3-C"));
    CHECK(!c.condition_star);
    CHECK(!c.y_spaces_equal);
    CHECK(c.flags_agree);

    InclusionReport s1 = inclusion_condition(*corpus_model("cu-nilpotent-s1"));
    CHECK(!s1.condition_star);
    CHECK(s1.e01_page1 == 3);
    CHECK(s1.e01_page2 == 2);
    CHECK(s1.flags_agree);

    InclusionReport s0 = inclusion_condition(*corpus_model("cu-nilpotent-s0"));
    CHECK(s0.condition_star);
    CHECK(s0.e01_page1 == 2);
    CHECK(s0.e01_page2 == 2);
    CHECK(s0.flags_agree);
    CHECK(s0.inclusion_injective);
}
