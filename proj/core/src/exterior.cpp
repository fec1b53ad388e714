#include "dolce/exterior.hpp"

#include <algorithm>
#include <bit>

namespace dolce {

int wedge_sign(Mono a, Mono b) {
    if (a & b) return 0;
    // count pairs (i in a, j in b) with i > j
    int inversions = 0;
    for (Mono rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

namespace {

// all index sequences of length k from {0..n-1}, lexicographic
std::vector<Mono> combinations(int n, int k) {
    std::vector<Mono> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mono m = 0;
        for (int i : idx) m |= (Mono(1) << i);
        out.push_back(m);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
    if (k == 0) out = {Mono(0)};
    return out;
}

}  // namespace

ExteriorAlgebra::ExteriorAlgebra(int n_generators) : n_(n_generators) {
    degree_basis_.resize(n_ + 1);
    degree_index_.resize(n_ + 1);
    for (int k = 0; k <= n_; ++k) {
        degree_basis_[k] = combinations(n_, k);
        for (std::size_t i = 0; i < degree_basis_[k].size(); ++i)
            degree_index_[k][degree_basis_[k][i]] = static_cast<int>(i);
    }
}

ExteriorAlgebra ExteriorAlgebra::bigraded(int m) {
    ExteriorAlgebra alg(2 * m);
    alg.m_ = m;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) {
            std::vector<Mono> monos;
            for (Mono mo : alg.basis(p + q))
                if (alg.bidegree(mo) == std::pair<int, int>(p, q)) monos.push_back(mo);
            for (std::size_t i = 0; i < monos.size(); ++i)
                alg.bidegree_index_[{p, q}][monos[i]] = static_cast<int>(i);
            alg.bidegree_basis_[{p, q}] = std::move(monos);
        }
    return alg;
}

int ExteriorAlgebra::degree(Mono mono) const { return std::popcount(mono); }

std::pair<int, int> ExteriorAlgebra::bidegree(Mono mono) const {
    if (!is_bigraded()) throw internal_error("bidegree on a plain graded algebra");
    Mono lo = mono & ((Mono(1) << m_) - 1);
    return {std::popcount(lo), std::popcount(mono >> m_)};
}

const std::vector<Mono>& ExteriorAlgebra::basis(int k) const {
    if (k < 0 || k > n_) throw internal_error("degree out of range");
    return degree_basis_[k];
}

const std::vector<Mono>& ExteriorAlgebra::basis(int p, int q) const {
    auto it = bidegree_basis_.find({p, q});
    if (it == bidegree_basis_.end()) throw internal_error("bidegree out of range");
    return it->second;
}

int ExteriorAlgebra::index_in_degree(Mono mono) const {
    return degree_index_[degree(mono)].at(mono);
}

int ExteriorAlgebra::index_in_bidegree(Mono mono) const {
    return bidegree_index_.at(bidegree(mono)).at(mono);
}

std::pair<Mono, int> ExteriorAlgebra::conj_mono(Mono mono) const {
    if (!is_bigraded()) throw internal_error("conjugation on a plain graded algebra");
    const Mono lo_mask = (Mono(1) << m_) - 1;
    Mono lo = mono & lo_mask;
    Mono hi = mono >> m_;
    Mono image = (lo << m_) | hi;
    // sign of sorting the image of the ascending index sequence
    std::vector<int> seq;
    for (Mono rest = mono; rest; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        seq.push_back(i < m_ ? i + m_ : i - m_);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inversions;
    return {image, inversions % 2 == 0 ? 1 : -1};
}

std::string ExteriorAlgebra::mono_name(Mono mono) const {
    if (mono == 0) return "1";
    std::string hol, anti;
    for (Mono rest = mono; rest; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        if (is_bigraded()) {
            if (i < m_) {
                if (!hol.empty()) hol += ",";
                hol += std::to_string(i + 1);
            } else {
                if (!anti.empty()) anti += ",";
                anti += std::to_string(i - m_ + 1);
            }
        } else {
            if (!hol.empty()) hol += ",";
            hol += std::to_string(i + 1);
        }
    }
    if (!is_bigraded()) return "e(" + hol + ")";
    return "phi(" + hol + "|" + anti + ")";
}

FormVector FormVector::monomial(const ExteriorAlgebra& alg, Mono mono, Scalar coeff) {
    FormVector f(alg);
    f.add_term(mono, coeff);
    return f;
}

int FormVector::degree() const {
    if (terms_.empty()) return -1;
    return alg_->degree(terms_.begin()->first);
}

Scalar FormVector::coeff(Mono mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void FormVector::add_term(Mono mono, const Scalar& c) {
    if (c.is_zero()) return;
    if (!terms_.empty() && alg_->degree(mono) != degree())
        throw internal_error("form supported on mixed degrees");
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FormVector FormVector::operator+(const FormVector& o) const {
    FormVector out = *this;
    if (!out.alg_) out.alg_ = o.alg_;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
    return out;
}

FormVector FormVector::operator-(const FormVector& o) const {
    FormVector out = *this;
    if (!out.alg_) out.alg_ = o.alg_;
    for (const auto& [mono, c] : o.terms_) out.add_term(mono, -c);
    return out;
}

FormVector FormVector::operator*(const Scalar& s) const {
    FormVector out(*alg_);
    if (s.is_zero()) return out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = c * s;
    return out;
}

FormVector FormVector::bidegree_component(int p, int q) const {
    FormVector out(*alg_);
    for (const auto& [mono, c] : terms_)
        if (alg_->bidegree(mono) == std::pair<int, int>(p, q)) out.terms_[mono] = c;
    return out;
}

std::vector<Scalar> FormVector::degree_coords(int k) const {
    const auto& b = alg_->basis(k);
    std::vector<Scalar> v(b.size());
    for (const auto& [mono, c] : terms_) v[alg_->index_in_degree(mono)] = c;
    return v;
}

std::vector<Scalar> FormVector::bidegree_coords(int p, int q) const {
    const auto& b = alg_->basis(p, q);
    std::vector<Scalar> v(b.size());
    for (const auto& [mono, c] : terms_) {
        if (alg_->bidegree(mono) != std::pair<int, int>(p, q))
            throw internal_error("bidegree_coords on a mixed form");
        v[alg_->index_in_bidegree(mono)] = c;
    }
    return v;
}

FormVector FormVector::from_degree_coords(const ExteriorAlgebra& alg, int k, const std::vector<Scalar>& v) {
    const auto& b = alg.basis(k);
    if (v.size() != b.size()) throw internal_error("from_degree_coords: size mismatch");
    FormVector f(alg);
    for (std::size_t i = 0; i < b.size(); ++i) f.add_term(b[i], v[i]);
    return f;
}

FormVector FormVector::from_bidegree_coords(const ExteriorAlgebra& alg, int p, int q,
                                            const std::vector<Scalar>& v) {
    const auto& b = alg.basis(p, q);
    if (v.size() != b.size()) throw internal_error("from_bidegree_coords: size mismatch");
    FormVector f(alg);
    for (std::size_t i = 0; i < b.size(); ++i) f.add_term(b[i], v[i]);
    return f;
}

std::string FormVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        std::string cs = dolce::to_string(c);
        if (!out.empty()) out += " + ";
        if (cs == "1")
            out += alg_->mono_name(mono);
        else
            out += "(" + cs + ")*" + alg_->mono_name(mono);
    }
    return out;
}

FormVector wedge(const FormVector& a, const FormVector& b) {
    if (a.algebra() && b.algebra() && a.algebra() != b.algebra())
        throw internal_error("wedge of forms over different algebras");
    const ExteriorAlgebra* alg = a.algebra() ? a.algebra() : b.algebra();
    FormVector out(*alg);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            out.add_term(ma | mb, ca * cb * Scalar(s));
        }
    return out;
}

FormVector conj(const FormVector& a) {
    if (!a.algebra()) return a;
    FormVector out(*a.algebra());
    if (!a.algebra()->is_bigraded()) {
        // real generators are fixed by conjugation
        for (const auto& [mono, c] : a.terms()) out.add_term(mono, c.conj());
        return out;
    }
    for (const auto& [mono, c] : a.terms()) {
        auto [image, s] = a.algebra()->conj_mono(mono);
        out.add_term(image, c.conj() * Scalar(s));
    }
    return out;
}

Mat derivation_matrix(const ExteriorAlgebra& alg, int k, const std::vector<FormVector>& generator_images) {
    if (static_cast<int>(generator_images.size()) != alg.generators())
        throw internal_error("derivation_matrix: one image per generator required");
    const auto& src = alg.basis(k);
    if (k + 1 > alg.top_degree()) return Mat(0, static_cast<int>(src.size()));
    const auto& dst = alg.basis(k + 1);
    Mat d(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t col = 0; col < src.size(); ++col) {
        Mono mono = src[col];
        // d(g_{i1}^...^g_{ik}) = sum_t (-1)^(t-1) d(g_{it}) ^ (monomial without g_{it})
        int t = 0;
        for (Mono rest = mono; rest; rest &= rest - 1, ++t) {
            int i = std::countr_zero(rest);
            FormVector term = wedge(generator_images[i],
                                    FormVector::monomial(alg, mono & ~(Mono(1) << i)));
            Scalar sgn(t % 2 == 0 ? 1 : -1);
            for (const auto& [mo, c] : term.terms())
                d.at(alg.index_in_degree(mo), static_cast<int>(col)) += c * sgn;
        }
    }
    return d;
}

Mat algebra_map_matrix(const ExteriorAlgebra& alg, int k, const std::vector<FormVector>& generator_images) {
    if (static_cast<int>(generator_images.size()) != alg.generators())
        throw internal_error("algebra_map_matrix: one image per generator required");
    const auto& src = alg.basis(k);
    Mat a(static_cast<int>(src.size()), static_cast<int>(src.size()));
    for (std::size_t col = 0; col < src.size(); ++col) {
        FormVector image = FormVector::monomial(alg, 0);
        for (Mono rest = src[col]; rest; rest &= rest - 1)
            image = wedge(image, generator_images[std::countr_zero(rest)]);
        for (const auto& [mo, c] : image.terms())
            a.at(alg.index_in_degree(mo), static_cast<int>(col)) = c;
    }
    return a;
}

}  // namespace dolce
