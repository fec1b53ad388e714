#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dolce/matrix.hpp"
#include "dolce/rational.hpp"

namespace dolce {

/// A monomial is a bitmask over the generators; bit i set means generator i
/// is a factor. The canonical written order is strictly increasing index,
/// which for the bigraded algebra puts holomorphic generators (indices
/// 0..m-1) before antiholomorphic ones (indices m..2m-1). Every sign in the
/// engine derives from this single convention.
using Mono = unsigned;

/// Sign of e_a ^ e_b relative to the canonical order; 0 if masks overlap.
int wedge_sign(Mono a, Mono b);

/// Exterior algebra on n generators with canonical per-degree bases.
/// `bigraded(m)` builds the complexified algebra on m holomorphic and m
/// antiholomorphic generators and additionally indexes bases per bidegree.
class ExteriorAlgebra {
  public:
    explicit ExteriorAlgebra(int n_generators);
    static ExteriorAlgebra bigraded(int m);

    int generators() const { return n_; }
    int m() const { return m_; }
    bool is_bigraded() const { return m_ > 0; }
    int top_degree() const { return n_; }

    int degree(Mono mono) const;
    /// (holomorphic count, antiholomorphic count); bigraded algebras only.
    std::pair<int, int> bidegree(Mono mono) const;

    /// Monomials of degree k, lexicographic in their index sequences.
    const std::vector<Mono>& basis(int k) const;
    /// Monomials of bidegree (p,q), in the order inherited from basis(p+q).
    const std::vector<Mono>& basis(int p, int q) const;

    int index_in_degree(Mono mono) const;
    int index_in_bidegree(Mono mono) const;

    bool valid_bidegree(int p, int q) const { return p >= 0 && q >= 0 && p <= m_ && q <= m_; }
    int dim(int p, int q) const { return valid_bidegree(p, q) ? static_cast<int>(basis(p, q).size()) : 0; }

    /// Conjugate monomial (holomorphic and antiholomorphic blocks swapped)
    /// together with the reordering sign.
    std::pair<Mono, int> conj_mono(Mono mono) const;

    std::string mono_name(Mono mono) const;

  private:
    int n_ = 0;
    int m_ = 0;  // 0 for plain graded algebras
    std::vector<std::vector<Mono>> degree_basis_;
    std::vector<std::unordered_map<Mono, int>> degree_index_;
    std::map<std::pair<int, int>, std::vector<Mono>> bidegree_basis_;
    std::map<std::pair<int, int>, std::unordered_map<Mono, int>> bidegree_index_;
};

/// Sparse form supported on one total degree; zero coefficients are never
/// stored. Coefficients live in the Gaussian rationals for both the real
/// and the complexified algebra.
class FormVector {
  public:
    FormVector() = default;
    explicit FormVector(const ExteriorAlgebra& alg) : alg_(&alg) {}

    static FormVector monomial(const ExteriorAlgebra& alg, Mono mono, Scalar coeff = Scalar(1));

    const ExteriorAlgebra* algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero form

    const std::map<Mono, Scalar>& terms() const { return terms_; }
    Scalar coeff(Mono mono) const;
    void add_term(Mono mono, const Scalar& c);

    FormVector operator+(const FormVector& o) const;
    FormVector operator-(const FormVector& o) const;
    FormVector operator*(const Scalar& s) const;
    FormVector operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const FormVector& a, const FormVector& b) { return a.terms_ == b.terms_; }

    /// Component of exact bidegree (p,q); bigraded algebras only.
    FormVector bidegree_component(int p, int q) const;

    /// Coordinates in the canonical basis of degree k (must be pure degree).
    std::vector<Scalar> degree_coords(int k) const;
    /// Coordinates in the canonical basis of bidegree (p,q).
    std::vector<Scalar> bidegree_coords(int p, int q) const;

    static FormVector from_degree_coords(const ExteriorAlgebra& alg, int k, const std::vector<Scalar>& v);
    static FormVector from_bidegree_coords(const ExteriorAlgebra& alg, int p, int q,
                                           const std::vector<Scalar>& v);

    std::string to_string() const;

  private:
    const ExteriorAlgebra* alg_ = nullptr;
    std::map<Mono, Scalar> terms_;
};

/// Exterior product; bilinear, associative, graded-commutative.
FormVector wedge(const FormVector& a, const FormVector& b);

/// Coefficient-wise and monomial-wise conjugation; maps (p,q) to (q,p).
FormVector conj(const FormVector& a);

/// Matrix of the degree-k to degree-(k+1) extension of a derivation given by
/// its values on the generators (value i = image of generator i).
Mat derivation_matrix(const ExteriorAlgebra& alg, int k, const std::vector<FormVector>& generator_images);

/// Matrix of the degree-k multiplicative extension of a linear substitution
/// on generators (value i = 1-form image of generator i).
Mat algebra_map_matrix(const ExteriorAlgebra& alg, int k, const std::vector<FormVector>& generator_images);

}  // namespace dolce
