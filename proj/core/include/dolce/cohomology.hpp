#pragma once

#include "dolce/model.hpp"

namespace dolce {

/// ker(mubar on (p,q)) / im(mubar from (p+1,q-2)); out-of-grid bidegrees
/// give the zero group.
CohomologyGroup mu_bar_cohomology(const Model& model, int p, int q);

/// The delbar-cohomology of the mubar-cohomology along the row p, with the
/// induced operator verified to square to zero.
class DolbeaultRow {
  public:
    DolbeaultRow(const Model& model, int p);

    int p() const { return p_; }
    /// Quotient model of H^{p,q}_mubar.
    const QuotientMap& mu_bar_classes(int q) const { return classes_[q]; }
    /// Induced delbar on mubar-classes, degree q -> q+1.
    const Mat& induced_delbar(int q) const { return induced_[q]; }
    CohomologyGroup cohomology(int q) const;

  private:
    const Model* model_;
    int p_;
    std::vector<QuotientMap> classes_;
    std::vector<Mat> induced_;
};

CohomologyGroup dolbeault(const Model& model, int p, int q);

/// All Dolbeault dimensions h^{p,q}, indexed [p][q].
std::vector<std::vector<int>> dolbeault_grid(const Model& model);

struct JInvariantReport {
    int h_plus = 0, h_minus = 0;
    std::vector<FormVector> plus_representatives, minus_representatives;  // real closed forms
    bool c_pure = false;  // images intersect trivially inside H^2
    bool c_full = false;  // images span H^2
    int b2 = 0;
};

/// de Rham 2-classes with closed J-invariant / J-anti-invariant
/// representatives, computed over the rationals in the real monomial basis.
JInvariantReport h_plus_minus(const Model& model);

struct InclusionReport {
    int e01_page1 = 0, e01_page2 = 0;
    int y11_page1 = 0, y11_page2 = 0;
    bool condition_star = false;     // E^{0,1}_1 == E^{0,1}_2
    bool y_spaces_equal = false;     // Y^{1,1}_1 == Y^{1,1}_2
    bool flags_agree = false;        // the two criteria coincide
    bool inclusion_injective = false;  // Y^{1,1}_1 & X^{1,1}_3 inside Y^{1,1}_3
};

/// Checks the inclusion criterion: the J-invariant classes embed into the
/// (1,1) Dolbeault group exactly when E^{0,1}_1 = E^{0,1}_2, equivalently
/// Y^{1,1}_1 = Y^{1,1}_2; both routes are computed and compared.
InclusionReport inclusion_condition(const Model& model);

}  // namespace dolce
