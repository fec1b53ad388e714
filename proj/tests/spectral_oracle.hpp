// Brute-force witness-space dimensions, written independently of the
// production solver: own form representation (sorted index vectors), own
// Leibniz extension, own staircase assembly straight from the total
// differential with bidegree projections, own plain-fraction rank.
// Only the scalar type is shared. Standard pairing J over four real
// generators: phi^1 = e^1 + i e^2, phi^2 = e^3 + i e^4.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "dolce/lie_algebra.hpp"

namespace oracle {

using dolce::Rational;
using dolce::Scalar;

// generators 0,1 holomorphic (phi^1, phi^2); 2,3 antiholomorphic
using Word = std::vector<int>;  // strictly increasing generator indices
using Form = std::map<Word, Scalar>;

inline void add_term(Form& f, Word w, Scalar c) {
    // sort with sign, drop repeats
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                ++swaps;
            }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return;
    if (swaps % 2) c = -c;
    auto it = f.find(w);
    if (it == f.end()) {
        if (!c.is_zero()) f.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline Form wedge(const Form& a, const Form& b) {
    Form out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_term(out, std::move(w), ca * cb);
        }
    return out;
}

inline std::pair<int, int> bidegree(const Word& w) {
    int p = 0, q = 0;
    for (int i : w) (i < 2 ? p : q)++;
    return {p, q};
}

struct Complex {
    std::vector<Form> d_gen;  // d phi^a for a = 0..3

    // d phi from 4-dimensional structure constants under the standard pairing
    static Complex from_spec(const dolce::LieAlgebraSpec& spec) {
        // de^l as a complex form via e^1 = (phi^1 + phi^1bar)/2, etc.
        std::vector<Form> e(4);
        const Scalar half(Rational(1, 2));
        const Scalar mhalf_i(Rational(0), Rational(-1, 2));  // 1/(2i)
        for (int pair = 0; pair < 2; ++pair) {
            Form re, im;
            add_term(re, {pair}, half);
            add_term(re, {pair + 2}, half);
            add_term(im, {pair}, mhalf_i);
            add_term(im, {pair + 2}, -mhalf_i);
            e[2 * pair] = re;
            e[2 * pair + 1] = im;
        }
        std::vector<Form> de(4);
        for (int l = 0; l < 4; ++l)
            for (int j = 0; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    Rational c = spec.bracket(j, k)[l];
                    if (c == 0) continue;
                    Form w = wedge(e[j], e[k]);
                    for (const auto& [word, coeff] : w) add_term(de[l], word, coeff * Scalar(-c));
                }
        Complex out;
        out.d_gen.resize(4);
        // d phi^1 = d e^1 + i d e^2, d phi^2 = d e^3 + i d e^4, conjugates
        for (int pair = 0; pair < 2; ++pair) {
            Form dphi;
            for (const auto& [w, c] : de[2 * pair]) add_term(dphi, w, c);
            for (const auto& [w, c] : de[2 * pair + 1]) add_term(dphi, w, c * Scalar::i());
            out.d_gen[pair] = dphi;
            Form dbar;
            for (const auto& [w, c] : dphi) {
                Word cw = w;
                for (int& i : cw) i = (i + 2) % 4;
                add_term(dbar, cw, c.conj());
            }
            out.d_gen[pair + 2] = dbar;
        }
        return out;
    }

    Form d(const Form& f) const {
        Form out;
        for (const auto& [w, c] : f)
            for (std::size_t t = 0; t < w.size(); ++t) {
                Word rest;
                for (std::size_t s = 0; s < w.size(); ++s)
                    if (s != t) rest.push_back(w[s]);
                Form rest_form;
                add_term(rest_form, rest, Scalar(t % 2 == 0 ? 1 : -1) * c);
                for (const auto& [dw, dc] : wedge(d_gen[w[t]], rest_form)) add_term(out, dw, dc);
            }
        return out;
    }
};

inline std::vector<Word> piece_basis(int p, int q) {
    std::vector<Word> out;
    if (p < 0 || q < 0 || p > 2 || q > 2) return out;
    std::vector<std::vector<int>> hol, anti;
    auto combos = [](int from, int to, int k) {
        std::vector<std::vector<int>> res;
        std::vector<int> idx;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(idx.size()) == k) {
                res.push_back(idx);
                return;
            }
            for (int i = start; i < to; ++i) {
                idx.push_back(i);
                self(self, i + 1);
                idx.pop_back();
            }
        };
        rec(rec, from);
        return res;
    };
    for (const auto& h : combos(0, 2, p))
        for (const auto& a : combos(2, 4, q)) {
            Word w = h;
            w.insert(w.end(), a.begin(), a.end());
            out.push_back(w);
        }
    return out;
}

inline int plain_rank(std::vector<std::vector<Scalar>> m) {
    int rank = 0;
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Scalar f = m[r][c] / m[rank][c];
            for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// dimension of { x : M x = 0 } projected to the first `lead` coordinates:
// rank of the kernel basis restricted to the leading block
inline int kernel_projection_dim(const std::vector<std::vector<Scalar>>& eqs, int total, int lead) {
    // kernel by elimination: reuse plain Gauss on the equation matrix and read
    // off the free-variable basis
    std::vector<std::vector<Scalar>> m = eqs;
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < total && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        Scalar inv = Scalar(1) / m[rank][c];
        for (int j = 0; j < total; ++j) m[rank][j] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Scalar f = m[r][c];
            for (int j = 0; j < total; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(total, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> heads;
    for (int f = 0; f < total; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(total);
        v[f] = Scalar(1);
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][f];
        heads.push_back(std::vector<Scalar>(v.begin(), v.begin() + lead));
    }
    return plain_rank(heads);
}

struct StairLayout {
    std::vector<std::pair<int, int>> pieces;
    std::vector<std::vector<Word>> bases;
    std::vector<int> offsets;
    int total = 0;
};

inline StairLayout layout(const std::vector<std::pair<int, int>>& pieces) {
    StairLayout l;
    l.pieces = pieces;
    for (const auto& [p, q] : pieces) {
        l.bases.push_back(piece_basis(p, q));
        l.offsets.push_back(l.total);
        l.total += static_cast<int>(l.bases.back().size());
    }
    return l;
}

// rows of "projection of d(sum of variables) to the listed bidegrees = 0"
inline std::vector<std::vector<Scalar>> staircase_rows(
    const Complex& cx, const StairLayout& vars, const std::vector<std::pair<int, int>>& eq_pieces) {
    StairLayout eqs = layout(eq_pieces);
    std::vector<std::vector<Scalar>> rows(eqs.total, std::vector<Scalar>(vars.total));
    for (std::size_t vp = 0; vp < vars.pieces.size(); ++vp)
        for (std::size_t col = 0; col < vars.bases[vp].size(); ++col) {
            Form df = cx.d(Form{{vars.bases[vp][col], Scalar(1)}});
            for (const auto& [w, c] : df) {
                auto bd = bidegree(w);
                for (std::size_t ep = 0; ep < eqs.pieces.size(); ++ep) {
                    if (eqs.pieces[ep] != bd) continue;
                    auto it = std::find(eqs.bases[ep].begin(), eqs.bases[ep].end(), w);
                    int row = eqs.offsets[ep] + static_cast<int>(it - eqs.bases[ep].begin());
                    rows[row][vars.offsets[vp] + col] += c;
                }
            }
        }
    return rows;
}

inline int x_dim(const Complex& cx, int p, int q, int r) {
    std::vector<std::pair<int, int>> var_pieces, eq_pieces;
    for (int j = 0; j <= r; ++j)
        if (!piece_basis(p + j, q - j).empty()) var_pieces.push_back({p + j, q - j});
    for (int s = 0; s <= r; ++s)
        if (!piece_basis(p + s - 1, q - s + 2).empty()) eq_pieces.push_back({p + s - 1, q - s + 2});
    StairLayout vars = layout(var_pieces);
    auto rows = staircase_rows(cx, vars, eq_pieces);
    int lead = static_cast<int>(piece_basis(p, q).size());
    if (rows.empty()) return lead;
    return kernel_projection_dim(rows, vars.total, lead);
}

inline int y_dim(const Complex& cx, int p, int q, int r) {
    std::vector<std::pair<int, int>> var_pieces, eq_pieces;
    for (int j = -1; j <= r - 1; ++j)
        if (!piece_basis(p - j, q + j - 1).empty()) var_pieces.push_back({p - j, q + j - 1});
    for (int k = 3; k <= r + 2; ++k)
        if (!piece_basis(p - k + 2, q + k - 2).empty()) eq_pieces.push_back({p - k + 2, q + k - 2});
    StairLayout vars = layout(var_pieces);
    if (vars.total == 0) return 0;
    auto side = staircase_rows(cx, vars, eq_pieces);

    // solution space of the side conditions, then rank of its image under
    // the (p,q)-projection of d
    std::vector<std::vector<Scalar>> m = side;
    int rows_n = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < vars.total && rank < rows_n; ++c) {
        int pivot = -1;
        for (int r2 = rank; r2 < rows_n; ++r2)
            if (!m[r2][c].is_zero()) {
                pivot = r2;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[rank]);
        Scalar inv = Scalar(1) / m[rank][c];
        for (int j = 0; j < vars.total; ++j) m[rank][j] *= inv;
        for (int r2 = 0; r2 < rows_n; ++r2) {
            if (r2 == rank || m[r2][c].is_zero()) continue;
            Scalar f = m[r2][c];
            for (int j = 0; j < vars.total; ++j) m[r2][j] -= f * m[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(vars.total, false);
    for (int c : pivot_col) is_pivot[c] = true;

    auto out_rows = staircase_rows(cx, vars, {{p, q}});  // (p,q)-projection of d
    std::vector<std::vector<Scalar>> images;
    for (int f = 0; f < vars.total; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(vars.total);
        v[f] = Scalar(1);
        for (int r2 = 0; r2 < rank; ++r2) v[pivot_col[r2]] = -m[r2][f];
        std::vector<Scalar> img(out_rows.size());
        for (std::size_t a = 0; a < out_rows.size(); ++a)
            for (int b = 0; b < vars.total; ++b)
                if (!out_rows[a][b].is_zero() && !v[b].is_zero()) img[a] += out_rows[a][b] * v[b];
        images.push_back(std::move(img));
    }
    return plain_rank(images);
}

}  // namespace oracle
