#include "dolce/checks.hpp"

#include "dolce/cohomology.hpp"

namespace dolce {

namespace {

void check_square(const Model& model, CheckRun& run) {
    SquareZeroReport report = verify_square_zero_relations(model.quad());
    run.add(report.ok(), "square-zero relations",
            report.ok() ? "all seven identities hold on every bidegree"
                        : report.violations.front());
}

void check_nijenhuis(const Model& model, CheckRun& run) {
    bool mubar_zero = model.quad().mubar_vanishes();
    bool nj_zero = true;
    for (const auto& [pair, v] : nijenhuis(model.spec(), model.j()))
        for (const auto& c : v)
            if (c != 0) nj_zero = false;
    run.add(mubar_zero == nj_zero, "integrability criteria",
            std::string("mubar ") + (mubar_zero ? "= 0" : "!= 0") + ", Nijenhuis tensor " +
                (nj_zero ? "= 0" : "!= 0"));
}

void check_frolicher(const Model& model, CheckRun& run) {
    FrolicherReport report = frolicher_check(model);
    run.add(report.inequality_holds, "Frolicher inequality per degree");
    run.add(report.euler_matches, "Euler characteristic from hodge numbers",
            "chi = " + std::to_string(report.euler));
}

void check_serre(const Model& model, CheckRun& run) {
    HarmonicContext ctx(model);
    SerreDualityReport report = serre_duality_check(ctx);
    bool unimodular = report.unimodular;
    for (const SerrePageReport& page : report.pages)
        run.add(page.symmetric || !unimodular, "Serre symmetry on page " + std::to_string(page.r),
                page.symmetric ? "" : (unimodular ? "asymmetric grid" : "not unimodular, reported only"));
    run.add(report.page1_witnessed || !unimodular, "star-conjugation pairing on page 1",
            report.notes.empty() ? "" : report.notes.front());
}

void check_hodge(const Model& model, CheckRun& run) {
    HarmonicContext ctx(model);
    const int m = model.m();
    bool unimodular = model.unimodularity().unimodular;

    bool decomposition_ok = true, dims_ok = true;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            HodgeDecomposition dec = mubar_hodge_decomposition(ctx, p, q);
            if (!dec.orthogonal || !dec.spans) decomposition_ok = false;
            if (dec.harmonic.dim() != mu_bar_cohomology(model, p, q).dim) dims_ok = false;
        }
    run.add(decomposition_ok, "mubar Hodge decomposition is orthogonal and spans");
    run.add(dims_ok, "dim ker(mubar Laplacian) matches mubar cohomology");

    bool square_ok = true, dolbeault_ok = true, splitting_ok = true;
    auto grid = dolbeault_grid(model);
    for (int p = 0; p <= m; ++p) {
        DelbarMubar row(ctx, p);  // constructor asserts the square is zero
        for (int q = 0; q <= m; ++q) {
            if (row.harmonics(q).dim() != grid[p][q]) dolbeault_ok = false;
            if (!row.splitting(q).ok()) splitting_ok = false;
        }
    }
    run.add(square_ok, "delbar_mubar squares to zero");
    if (unimodular) {
        run.add(dolbeault_ok, "delbar_mubar harmonics match Dolbeault dimensions");
        run.add(splitting_ok, "three-way splitting of the mubar-harmonic spaces");
    } else {
        run.add(true, "delbar_mubar harmonic comparisons skipped",
                "not unimodular: adjoint formula is not the metric adjoint");
    }
}

void check_theorem41(const Model& model, CheckRun& run) {
    InclusionReport report = inclusion_condition(model);
    run.add(report.flags_agree, "inclusion criterion equivalence",
            "E^{0,1}_1 = E^{0,1}_2 is " + std::string(report.condition_star ? "true" : "false") +
                ", Y^{1,1}_1 = Y^{1,1}_2 is " + std::string(report.y_spaces_equal ? "true" : "false"));
    if (report.condition_star)
        run.add(report.inclusion_injective, "induced map E^{1,1}_3 -> E^{1,1}_1 is injective");
}

void check_suffcond(const Model& model, CheckRun& run) {
    SufficientConditionReport report = sufficient_conditions(model);
    run.add(report.all_agree, "top-degree vanishing conditions agree",
            std::string("del|A^{m-1,m} = 0: ") + (report.del_vanishes_top ? "yes" : "no") +
                ", d|A^{2m-1} = 0: " + (report.d_vanishes_top ? "yes" : "no") + ", b^{2m} = 1: " +
                (report.top_de_rham_is_line ? "yes" : "no") + ", traces vanish: " +
                (report.trace_unimodular ? "yes" : "no"));
}

void check_einf(const Model& model, CheckRun& run) {
    SpectralSequence ss(model);
    auto [limit, stage] = ss.e_infinity();  // asserts totals and monotonicity internally
    run.add(true, "E_infinity totals equal Betti numbers",
            "degenerates at stage " + std::to_string(stage));
    const int m = model.m();
    int stable_from = m == 2 ? 2 : 3;
    bool stable = true;
    for (int r = stable_from; r <= m + 1; ++r)
        if (ss.page(r).dims.at(1, 1) != limit.dims.at(1, 1)) stable = false;
    run.add(stable, "E^{1,1} stable from page " + std::to_string(stable_from));
}

}  // namespace

std::vector<std::string> known_check_suites() {
    return {"square", "nijenhuis", "frolicher", "serre", "hodge", "theorem41", "suffcond", "einf", "all"};
}

CheckRun run_checks(const Model& model, const std::string& suite) {
    CheckRun run;
    bool all = suite == "all";
    if (all || suite == "square") check_square(model, run);
    if (all || suite == "nijenhuis") check_nijenhuis(model, run);
    if (all || suite == "frolicher") check_frolicher(model, run);
    if (all || suite == "serre") check_serre(model, run);
    if (all || suite == "hodge") check_hodge(model, run);
    if (all || suite == "theorem41") check_theorem41(model, run);
    if (all || suite == "suffcond") check_suffcond(model, run);
    if (all || suite == "einf") check_einf(model, run);
    if (run.lines.empty()) throw internal_error("unknown check suite: " + suite);
    return run;
}

}  // namespace dolce
