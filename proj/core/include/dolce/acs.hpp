#pragma once

#include <array>
#include <functional>
#include <optional>

#include "dolce/lie_algebra.hpp"

namespace dolce {

/// Validates J^2 = -Id (and, when a metric is given, <Jx,Jy> = <x,y>).
/// `j` acts on generators column-wise: J e_k = sum_i j(i,k) e_i.
ValidationReport validate_acs(const Mat& j, int dim, const std::optional<Mat>& metric);

/// A (1,0)-coframe phi^1..phi^m for J, each row a +i eigenvector of the
/// transpose action of J on 1-forms, picked greedily so the corner cases
/// J e_1 = e_2 style structures reproduce the textbook frames verbatim.
struct ComplexFrame {
    Mat frame;                      // 2m x 2m; rows 0..m-1 = phi^i, rows m..2m-1 = conj(phi^i), e-coordinates
    Mat frame_inverse;              // e-coordinates back to frame coordinates
    std::vector<Mat> cplx_to_real;  // per degree k: complex monomial coords -> real monomial coords
    std::vector<Mat> real_to_cplx;  // inverses
};

ComplexFrame complex_frame(const ExteriorAlgebra& real_alg, const ExteriorAlgebra& cplx_alg, const Mat& j);

enum class OpKind { mu, del, delbar, mubar };
constexpr std::array<OpKind, 4> all_op_kinds{OpKind::mu, OpKind::del, OpKind::delbar, OpKind::mubar};
/// Bidegree shift of each component of d.
std::pair<int, int> op_bidegree(OpKind kind);
const char* op_name(OpKind kind);

/// The four bidegree components of the exterior differential, stored as one
/// exact matrix per component and source bidegree, plus the assembled d per
/// total degree of the complexified algebra.
class BigradedComplex {
  public:
    BigradedComplex() = default;

    /// Builds d from the coframe differentials (entry i = d phi^i, entries
    /// m..2m-1 their conjugates) by derivation extension; asserts d^2 = 0
    /// and that every component lands in its declared bidegree only.
    static BigradedComplex build(const ExteriorAlgebra& cplx_alg, const std::vector<FormVector>& d_generators);

    const ExteriorAlgebra& algebra() const { return *alg_; }
    int m() const { return alg_->m(); }

    /// Component matrix on source (p,q); a dim-0 x dim-0 shaped zero matrix
    /// when the source or target bidegree leaves the grid.
    const Mat& component(OpKind kind, int p, int q) const;
    /// Full differential on total degree k.
    const Mat& d_total(int k) const;

    const std::vector<FormVector>& d_generators() const { return d_gen_; }

    bool mubar_vanishes() const;

    /// Applies one component to a pure (p,q) form.
    FormVector apply(OpKind kind, const FormVector& f) const;

  private:
    const ExteriorAlgebra* alg_ = nullptr;
    std::vector<FormVector> d_gen_;
    std::vector<Mat> d_total_;                         // per degree
    std::map<std::tuple<int, int, int>, Mat> blocks_;  // (kind, p, q) -> matrix
};

/// Exact operator identities forced by d^2 = 0 on the four components.
struct SquareZeroReport {
    std::vector<std::string> violations;  // empty iff all seven identities hold
    bool ok() const { return violations.empty(); }
};
SquareZeroReport verify_square_zero_relations(const BigradedComplex& q);

/// Variant used by tests: evaluate the relations on externally supplied
/// component blocks (so a deliberately mutilated quadruple can be probed).
SquareZeroReport verify_square_zero_relations(
    const ExteriorAlgebra& alg,
    const std::function<Mat(OpKind, int, int)>& component);

/// N_J(e_j, e_k) = [Je_j, Je_k] - [e_j, e_k] - J[Je_j, e_k] - J[e_j, Je_k].
/// Returns one coefficient vector per generator pair j < k.
std::map<std::pair<int, int>, std::vector<Rational>> nijenhuis(const LieAlgebraSpec& spec, const Mat& j);

/// mubar == 0 (asserted to agree with the vanishing of the Nijenhuis tensor).
bool is_integrable(const LieAlgebraSpec& spec, const Mat& j, const BigradedComplex& quad);

/// Projectors 1/2 (1 +- J) on real 2-forms; A+ consists of the real forms of
/// complex bidegree (1,1), A- of those in (2,0) + (0,2).
struct TwoFormSplit {
    Mat plus, minus;  // projector matrices on the degree-2 coordinate space
    Subspace invariant, anti_invariant;
};
TwoFormSplit two_form_split(const ExteriorAlgebra& real_alg, const Mat& j);

/// Conjugation deformation J' = (Id+L) J (Id+L)^{-1} for L anticommuting
/// with J. Also reports psi = 1/2 (L - i J L) in the frame of J.
struct Deformation {
    Mat deformed_j;
    Mat psi;  // m x m, psi^i_j
};
Deformation deform(const ExteriorAlgebra& real_alg, const ExteriorAlgebra& cplx_alg, const Mat& j,
                   const Mat& l);

}  // namespace dolce
