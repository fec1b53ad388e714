#pragma once

#include <memory>

#include "dolce/acs.hpp"
#include "dolce/input.hpp"

namespace dolce {

/// Fully validated computation context shared by every cohomology routine.
///
/// Real-mode documents supply structure constants and J; complex-mode
/// documents supply the coframe differentials, from which an underlying real
/// Lie algebra (with the standard J pairing e_{2i-1}, e_{2i}) is
/// reconstructed. Either way the model ends up with both pictures and the
/// two routes to d are asserted to agree through the change of basis.
class Model {
  public:
    static std::unique_ptr<Model> build(const InputDocument& doc);

    const std::string& name() const { return name_; }
    int m() const { return m_; }
    int real_dim() const { return 2 * m_; }
    bool has_acs() const { return has_acs_; }
    bool from_complex_mode() const { return from_complex_mode_; }

    const LieAlgebraSpec& spec() const { return spec_; }
    const ExteriorAlgebra& real_algebra() const { return *real_alg_; }
    const ExteriorAlgebra& cplx_algebra() const { return *cplx_alg_; }
    const CeDifferential& d_real() const { return d_real_; }

    const Mat& j() const;
    const ComplexFrame& frame() const;
    const BigradedComplex& quad() const;

    const std::optional<Mat>& metric() const { return metric_; }
    const UnimodularityReport& unimodularity() const { return unimodular_; }

    /// Betti numbers of the underlying real algebra (cached).
    const DeRhamCohomology& de_rham() const;

  private:
    Model() = default;

    std::string name_;
    int m_ = 0;
    bool has_acs_ = false;
    bool from_complex_mode_ = false;
    LieAlgebraSpec spec_;
    std::unique_ptr<ExteriorAlgebra> real_alg_, cplx_alg_;
    CeDifferential d_real_;
    Mat j_;
    ComplexFrame frame_;
    BigradedComplex quad_;
    std::optional<Mat> metric_;
    UnimodularityReport unimodular_;
    mutable std::optional<DeRhamCohomology> de_rham_;
};

}  // namespace dolce
