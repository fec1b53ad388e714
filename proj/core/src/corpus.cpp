#include "dolce/corpus.hpp"

#include "dolce/acs.hpp"
#include "dolce/model.hpp"

namespace dolce {

Grid grid_rows(int m, const std::vector<std::vector<int>>& rows_top_down) {
    Grid g(m);
    for (int q = m; q >= 0; --q)
        for (int p = 0; p <= m; ++p) g.at(p, q) = rows_top_down[m - q][p];
    return g;
}

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

BracketEntry bracket(int j, int k, std::map<int, Rational> coeffs) {
    BracketEntry b;
    b.j = j;
    b.k = k;
    b.coefficients = std::move(coeffs);
    return b;
}

// J given by columns-are-images over generator pairs: pairs[t] = (a, b)
// means J e_a = e_b (and J e_b = -e_a).
Mat pairing_j(int dim, const std::vector<std::pair<int, int>>& pairs) {
    Mat j(dim, dim);
    for (auto [a, b] : pairs) {
        j.at(b - 1, a - 1) = Scalar(1);
        j.at(a - 1, b - 1) = Scalar(-1);
    }
    return j;
}

InputDocument sol3_doc(const std::string& name, const std::vector<std::pair<int, int>>& j_pairs) {
    InputDocument doc;
    doc.mode = InputMode::real;
    doc.name = name;
    doc.dimension = 4;
    // [e1, e2] = e2, [e1, e3] = -e3
    doc.brackets = {bracket(1, 2, {{2, rat(1)}}), bracket(1, 3, {{3, rat(-1)}})};
    doc.j = pairing_j(4, j_pairs);
    return doc;
}

InputDocument g_alpha_doc(const std::string& name, long a2, long a3, long a4,
                          const std::vector<std::pair<int, int>>& j_pairs) {
    InputDocument doc;
    doc.mode = InputMode::real;
    doc.name = name;
    doc.dimension = 4;
    // [e1, e_j] = alpha_j e_j
    doc.brackets = {bracket(1, 2, {{2, rat(a2)}}), bracket(1, 3, {{3, rat(a3)}}),
                    bracket(1, 4, {{4, rat(a4)}})};
    doc.j = pairing_j(4, j_pairs);
    return doc;
}

// d phi^3 = c20 phi^{12} + c12 phi^{1 2bar} + c21 phi^{2 1bar}; d phi^2 = phi^{1 1bar}
InputDocument cu_doc(const std::string& name, Rational c20, Rational c12, Rational c21) {
    InputDocument doc;
    doc.mode = InputMode::complex_coframe;
    doc.name = name;
    doc.dimension = 3;
    doc.d_phi.resize(3);
    doc.d_phi[1].push_back({TermKind::mixed, 1, 1, Scalar(rat(1))});
    if (c20 != 0) doc.d_phi[2].push_back({TermKind::holomorphic, 1, 2, Scalar(c20)});
    if (c12 != 0) doc.d_phi[2].push_back({TermKind::mixed, 1, 2, Scalar(c12)});
    if (c21 != 0) doc.d_phi[2].push_back({TermKind::mixed, 2, 1, Scalar(c21)});
    return doc;
}

// deformation matrix L = [[A, B], [PBP, -PAP]] against the block form of
// structure (C); anticommutation with J is rechecked downstream.
Mat deformation_l(const Mat& a, const Mat& b) {
    Mat p(2, 2);
    p.at(0, 1) = Scalar(1);
    p.at(1, 0) = Scalar(1);
    Mat l(4, 4);
    l.paste(0, 0, a);
    l.paste(0, 2, b);
    l.paste(2, 0, p * b * p);
    l.paste(2, 2, -(p * a * p));
    return l;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;

    // ----- abelian R^4, standard J: the trivial baseline -----
    {
        CorpusEntry e;
        e.key = "abelian-R4-stdJ";
        e.document.mode = InputMode::real;
        e.document.name = e.key;
        e.document.dimension = 4;
        e.document.j = pairing_j(4, {{1, 2}, {3, 4}});
        e.expected.betti = {1, 4, 6, 4, 1};  // binomials, d = 0
        e.expected.euler = 0;
        e.expected.euler_pinned = true;
        // h^{p,q} = C(2,p) C(2,q)
        e.expected.pages[1] = grid_rows(2, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}});
        e.expected.degeneration_stage = 1;
        e.expected.h_plus = 4;
        e.expected.h_minus = 2;
        e.expected.c_pure = true;
        e.expected.c_full = true;
        e.expected.condition_star = true;
        e.expected.unimodular = true;
        e.expected.integrable = true;
        out.push_back(std::move(e));
    }

    // ----- sol3 x R, structures (A), (B), (C) -----
    {
        CorpusEntry e;
        e.key = "sol3-A";
        e.document = sol3_doc(e.key, {{1, 2}, {3, 4}});
        e.expected.betti = {1, 2, 2, 2, 1};
        e.expected.euler = 0;
        e.expected.euler_pinned = true;
        e.expected.pages[1] = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        e.expected.degeneration_stage = 1;
        e.expected.h_plus = 1;
        e.expected.h_minus = 1;
        e.expected.c_pure = true;
        e.expected.c_full = true;
        e.expected.condition_star = true;
        e.expected.unimodular = true;
        e.expected.integrable = false;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.key = "sol3-B";
        e.document = sol3_doc(e.key, {{1, 3}, {2, 4}});
        e.expected.betti = {1, 2, 2, 2, 1};
        e.expected.euler = 0;
        e.expected.euler_pinned = true;
        // same spectral sequence as structure (A)
        e.expected.pages[1] = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        e.expected.degeneration_stage = 1;
        e.expected.unimodular = true;
        e.expected.integrable = false;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.key = "sol3-C";
        e.document = sol3_doc(e.key, {{1, 4}, {2, 3}});
        e.expected.betti = {1, 2, 2, 2, 1};
        e.expected.euler = 0;
        e.expected.euler_pinned = true;
        e.expected.pages[1] = grid_rows(2, {{0, 1, 1}, {2, 4, 2}, {1, 1, 0}});
        e.expected.pages[2] = grid_rows(2, {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}});
        e.expected.degeneration_stage = 2;
        e.expected.h_plus = 2;
        e.expected.h_minus = 0;
        e.expected.c_pure = true;
        e.expected.c_full = true;
        e.expected.condition_star = false;
        e.expected.unimodular = true;
        e.expected.integrable = false;
        out.push_back(std::move(e));
    }

    // ----- invariant deformations of structure (C) -----
    {
        // class (i): A_21 + A_12 = 0, B_11 = 0. Sample A = diag(1/10, 0),
        // B = 0, i.e. psi = (1/10) phi^{1bar} (x) Z_1; the stage-2 behaviour
        // persists exactly along this direction.
        Mat a(2, 2);
        a.at(0, 0) = Scalar(rat(1, 10));
        Mat b(2, 2);
        Mat l = deformation_l(a, b);
        ExteriorAlgebra real_alg(4);
        ExteriorAlgebra cplx_alg = ExteriorAlgebra::bigraded(2);
        Deformation d = deform(real_alg, cplx_alg, pairing_j(4, {{1, 4}, {2, 3}}), l);

        CorpusEntry e;
        e.key = "sol3-C-deform-i";
        e.document = sol3_doc(e.key, {});
        e.document.j = d.deformed_j;
        e.expected.betti = {1, 2, 2, 2, 1};
        // the spectral behaviour of the undeformed structure persists
        e.expected.pages[1] = grid_rows(2, {{0, 1, 1}, {2, 4, 2}, {1, 1, 0}});
        e.expected.pages[2] = grid_rows(2, {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}});
        e.expected.degeneration_stage = 2;  // class (i) keeps second-stage degeneracy
        e.expected.unimodular = true;
        out.push_back(std::move(e));
    }
    {
        // class (ii) sample: B_11 = 1/10, everything else 0
        Mat a(2, 2);
        Mat b(2, 2);
        b.at(0, 0) = Scalar(rat(1, 10));
        Mat l = deformation_l(a, b);
        ExteriorAlgebra real_alg(4);
        ExteriorAlgebra cplx_alg = ExteriorAlgebra::bigraded(2);
        Deformation d = deform(real_alg, cplx_alg, pairing_j(4, {{1, 4}, {2, 3}}), l);

        CorpusEntry e;
        e.key = "sol3-C-deform-ii";
        e.document = sol3_doc(e.key, {});
        e.document.j = d.deformed_j;
        e.expected.betti = {1, 2, 2, 2, 1};
        // class (ii) degenerates at the first stage with structure (A)'s grid
        e.expected.pages[1] = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        e.expected.degeneration_stage = 1;
        e.expected.unimodular = true;
        out.push_back(std::move(e));
    }

    // ----- G(alpha), alpha = (1, 1, -2), structures (A), (B), (C) -----
    {
        CorpusEntry e;
        e.key = "G-alpha-112-A";
        e.document = g_alpha_doc(e.key, 1, 1, -2, {{1, 2}, {3, 4}});
        e.expected.betti = {1, 1, 0, 1, 1};
        e.expected.euler = 0;
        e.expected.euler_pinned = true;
        e.expected.pages[1] = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        e.expected.pages[2] = grid_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
        e.expected.degeneration_stage = 2;
        e.expected.unimodular = true;
        e.expected.integrable = false;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.key = "G-alpha-112-B";
        e.document = g_alpha_doc(e.key, 1, 1, -2, {{1, 3}, {2, 4}});
        e.expected.betti = {1, 1, 0, 1, 1};
        // the pairing swaps alpha_2 and alpha_3 = 1, 1: same grids as (A)
        e.expected.pages[1] = grid_rows(2, {{0, 0, 1}, {2, 2, 2}, {1, 0, 0}});
        e.expected.pages[2] = grid_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
        e.expected.degeneration_stage = 2;
        e.expected.unimodular = true;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.key = "G-alpha-112-C";
        e.document = g_alpha_doc(e.key, 1, 1, -2, {{1, 4}, {2, 3}});
        e.expected.betti = {1, 1, 0, 1, 1};
        // pairing weight alpha_4 = -2 against e_1; the remaining weights are
        // equal, the (0,2) component cancels and the structure is integrable
        e.expected.pages[1] = grid_rows(2, {{0, 0, 1}, {1, 0, 1}, {1, 0, 0}});
        e.expected.degeneration_stage = 1;
        e.expected.unimodular = true;
        e.expected.integrable = true;
        out.push_back(std::move(e));
    }

    // ----- 6-dimensional nilpotent coframe family, samples s = 0 and s = 1 -----
    {
        CorpusEntry e;
        e.key = "cu-nilpotent-s0";
        // d phi^3 = 1/2 phi^{12} + 2 phi^{1 2bar} + 1/4 phi^{2 1bar}
        e.document = cu_doc(e.key, rat(1, 2), rat(2), rat(1, 4));
        e.expected.condition_star = true;
        e.expected.e01_dims = {{2, 2}};
        e.expected.unimodular = true;
        e.expected.integrable = true;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.key = "cu-nilpotent-s1";
        // d phi^3 = phi^{1 2bar} + 1/2 phi^{2 1bar}
        e.document = cu_doc(e.key, rat(0), rat(1), rat(1, 2));
        e.expected.condition_star = false;
        e.expected.e01_dims = {{3, 2}};
        e.expected.unimodular = true;
        e.expected.integrable = true;
        out.push_back(std::move(e));
    }

    return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry* corpus_find(const std::string& key) {
    std::string lookup = key == "G-alpha-112" ? "G-alpha-112-A" : key;
    for (const CorpusEntry& entry : corpus())
        if (entry.key == lookup) return &entry;
    return nullptr;
}

}  // namespace dolce
