#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dolce/exterior.hpp"
#include "dolce/subspace.hpp"

namespace dolce {

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    void add(std::string code, std::string detail) {
        issues.push_back({std::move(code), std::move(detail)});
    }
};

/// Raised when a computation is requested on input that fails validation.
struct validation_error : std::runtime_error {
    explicit validation_error(const ValidationReport& report);
    ValidationReport report;
};

/// Structure constants of a real Lie algebra of even dimension 2m.
/// Only j < k is stored; antisymmetry is implicit.
struct LieAlgebraSpec {
    int dim = 0;
    std::string name;
    std::map<std::pair<int, int>, std::vector<Rational>> brackets;  // (j,k) -> C^*_{jk}, 0-based

    /// [e_j, e_k] as a coefficient vector, any j, k.
    std::vector<Rational> bracket(int j, int k) const;
    void set_bracket(int j, int k, std::vector<Rational> coeffs);
    int m() const { return dim / 2; }
};

/// Checks the Jacobi identity on all triples and cross-checks d^2 = 0 on
/// 1-forms; the report lists every offending triple.
ValidationReport validate_lie_algebra(const LieAlgebraSpec& spec);

/// The Chevalley-Eilenberg differential, one matrix per degree.
class CeDifferential {
  public:
    CeDifferential() = default;
    CeDifferential(const ExteriorAlgebra* alg, std::vector<Mat> per_degree)
        : alg_(alg), d_(std::move(per_degree)) {}

    const Mat& at(int k) const { return d_[k]; }
    int top_degree() const { return static_cast<int>(d_.size()) - 1; }
    const ExteriorAlgebra* algebra() const { return alg_; }

  private:
    const ExteriorAlgebra* alg_ = nullptr;
    std::vector<Mat> d_;  // d_[k] : A^k -> A^{k+1}
};

/// d phi^l = -1/2 sum C^l_{jk} phi^j ^ phi^k on 1-forms, extended as a
/// derivation; d^2 = 0 is asserted on every degree.
CeDifferential ce_differential(const ExteriorAlgebra& alg, const LieAlgebraSpec& spec);

struct UnimodularityReport {
    std::vector<Rational> traces;  // Tr(ad_{e_j}) per generator
    bool unimodular = false;
};

/// Traces of the adjoint representation; also cross-checks the equivalent
/// criterion d = 0 on (2m-1)-forms against the trace computation.
UnimodularityReport unimodularity(const LieAlgebraSpec& spec);

struct CohomologyGroup {
    std::string piece;        // ambient graded piece, "A^k" or "A^{p,q}"
    int dim = 0;
    int numerator_dim = 0;    // dim of the kernel (cocycles)
    int denominator_dim = 0;  // dim of the image (coboundaries)
    std::string numerator, denominator;  // what was quotiented
    std::vector<FormVector> representatives;
};

struct DeRhamCohomology {
    std::vector<CohomologyGroup> groups;  // degree 0..2m
    std::vector<int> betti;
    int euler_characteristic = 0;
};

DeRhamCohomology de_rham(const ExteriorAlgebra& alg, const CeDifferential& d);

}  // namespace dolce
