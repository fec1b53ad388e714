#pragma once

#include "dolce/harmonic.hpp"
#include "dolce/spectral.hpp"

namespace dolce {

struct CheckLine {
    bool pass = false;
    std::string label;
    std::string detail;  // optional
};

struct CheckRun {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(bool pass, std::string label, std::string detail = "") {
        lines.push_back({pass, std::move(label), std::move(detail)});
    }
};

/// Property suites over one model. Suite names:
///   square     the seven square-zero identities
///   nijenhuis  integrability criteria agree (mubar == 0 vs N_J == 0)
///   frolicher  b^k <= sum h^{p,q} and the Euler characteristic identity
///   serre      dim E^{p,q}_r = dim E^{m-p,m-q}_r for r = 1..m+1, with the
///              star-conjugation witness on page 1
///   hodge      orthogonal three-way splittings and harmonic = cohomology
///              dimensions for mubar and for delbar_mubar
///   theorem41  the inclusion criterion flags agree, with injectivity
///   suffcond   the equivalent top-degree vanishing conditions agree
///   einf       E_infinity totals match Betti numbers, page monotonicity,
///              and the (1,1) stabilization bound
///   all        everything above
CheckRun run_checks(const Model& model, const std::string& suite);

std::vector<std::string> known_check_suites();

}  // namespace dolce
