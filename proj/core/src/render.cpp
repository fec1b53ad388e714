#include "dolce/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace dolce {

namespace {

using nlohmann::ordered_json;

ordered_json form_json(const FormVector& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, c] : f.terms())
        terms.push_back({{"monomial", f.algebra()->mono_name(mono)},
                         {"re", to_string(c.re())},
                         {"im", to_string(c.im())}});
    return terms;
}

ordered_json grid_json(const Grid& grid) {
    ordered_json rows = ordered_json::array();
    for (int q = grid.m; q >= 0; --q) {
        ordered_json row = ordered_json::array();
        for (int p = 0; p <= grid.m; ++p) row.push_back(grid.at(p, q));
        rows.push_back(row);
    }
    return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_grid_text(const Grid& grid) {
    int width = 1;
    for (int d : grid.dims) width = std::max(width, static_cast<int>(std::to_string(d).size()));
    std::ostringstream os;
    for (int q = grid.m; q >= 0; --q) {
        os << "q=" << q << " |";
        for (int p = 0; p <= grid.m; ++p) {
            std::string cell = std::to_string(grid.at(p, q));
            os << " " << std::string(width - cell.size(), ' ') << cell;
        }
        os << "\n";
    }
    os << "     ";
    for (int p = 0; p <= grid.m; ++p) {
        std::string label = "p=" + std::to_string(p);
        os << " " << std::string(width > static_cast<int>(label.size()) ? width - label.size() : 0, ' ')
           << label;
    }
    os << "\n";
    return os.str();
}

std::string render_grid_csv(const Grid& grid) {
    std::ostringstream os;
    for (int q = grid.m; q >= 0; --q) {
        for (int p = 0; p <= grid.m; ++p) os << (p ? "," : "") << grid.at(p, q);
        os << "\n";
    }
    return os.str();
}

std::string render_derham(const Model& model, OutputFormat format) {
    const DeRhamCohomology& dr = model.de_rham();
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        for (std::size_t k = 0; k < dr.betti.size(); ++k) os << (k ? "," : "") << dr.betti[k];
        os << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        ordered_json j;
        j["name"] = model.name();
        j["betti"] = dr.betti;
        j["euler_characteristic"] = dr.euler_characteristic;
        ordered_json groups = ordered_json::array();
        for (std::size_t k = 0; k < dr.groups.size(); ++k) {
            ordered_json g;
            g["degree"] = k;
            g["dim"] = dr.groups[k].dim;
            ordered_json reps = ordered_json::array();
            for (const FormVector& f : dr.groups[k].representatives) reps.push_back(form_json(f));
            g["representatives"] = reps;
            groups.push_back(g);
        }
        j["groups"] = groups;
        // left-invariant cohomology of a compact quotient matches these
        // numbers for completely solvable groups; reported, never assumed
        j["note"] = "Betti numbers of the Lie algebra (left-invariant cohomology)";
        return dump(j);
    }
    std::ostringstream os;
    os << "betti = (";
    for (std::size_t k = 0; k < dr.betti.size(); ++k) os << (k ? "," : "") << dr.betti[k];
    os << "), chi = " << dr.euler_characteristic << "\n";
    for (std::size_t k = 0; k < dr.groups.size(); ++k) {
        os << "H^" << k << " (dim " << dr.groups[k].dim << ")";
        if (dr.groups[k].dim) {
            os << ": ";
            bool first = true;
            for (const FormVector& f : dr.groups[k].representatives) {
                os << (first ? "" : ", ") << f.to_string();
                first = false;
            }
        }
        os << "\n";
    }
    os << "note: Lie-algebra (left-invariant) cohomology\n";
    return os.str();
}

std::string render_dolbeault(const Model& model, OutputFormat format,
                             std::optional<std::pair<int, int>> bidegree) {
    const int m = model.m();
    auto dims = dolbeault_grid(model);
    Grid grid(m);
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q) grid.at(p, q) = dims[p][q];

    if (bidegree) {
        auto [p, q] = *bidegree;
        CohomologyGroup g = dolbeault(model, p, q);
        if (format == OutputFormat::csv) return std::to_string(g.dim) + "\n";
        if (format == OutputFormat::json) {
            ordered_json j;
            j["p"] = p;
            j["q"] = q;
            j["dim"] = g.dim;
            ordered_json reps = ordered_json::array();
            for (const FormVector& f : g.representatives) reps.push_back(form_json(f));
            j["representatives"] = reps;
            return dump(j);
        }
        std::ostringstream os;
        os << "h^{" << p << "," << q << "} = " << g.dim << "\n";
        for (const FormVector& f : g.representatives) os << "  " << f.to_string() << "\n";
        return os.str();
    }

    if (format == OutputFormat::csv) return render_grid_csv(grid);
    if (format == OutputFormat::json) {
        ordered_json j;
        j["name"] = model.name();
        j["grid"] = grid_json(grid);
        ordered_json reps = ordered_json::object();
        for (int p = 0; p <= m; ++p)
            for (int q = 0; q <= m; ++q) {
                CohomologyGroup g = dolbeault(model, p, q);
                ordered_json list = ordered_json::array();
                for (const FormVector& f : g.representatives) list.push_back(form_json(f));
                reps["(" + std::to_string(p) + "," + std::to_string(q) + ")"] = list;
            }
        j["representatives"] = reps;
        return dump(j);
    }
    std::ostringstream os;
    os << "Dolbeault dimensions h^{p,q}\n" << render_grid_text(grid);
    return os.str();
}

std::string render_spectral(const Model& model, OutputFormat format, int page) {
    SpectralSequence ss(model);
    const int m = model.m();

    if (page > 0) {
        SpectralPage pg = ss.page(page);
        if (format == OutputFormat::csv) return render_grid_csv(pg.dims);
        if (format == OutputFormat::json) {
            ordered_json j;
            j["page"] = page;
            j["grid"] = grid_json(pg.dims);
            ordered_json reps = ordered_json::object();
            for (const auto& [pq, forms] : pg.representatives) {
                ordered_json list = ordered_json::array();
                for (const FormVector& f : forms) list.push_back(form_json(f));
                reps["(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")"] = list;
            }
            j["representatives"] = reps;
            return dump(j);
        }
        std::ostringstream os;
        os << "page " << page << "\n" << render_grid_text(pg.dims);
        return os.str();
    }

    auto [limit, stage] = ss.e_infinity();
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "page,p,q,dim\n";
        for (int r = 1; r <= m + 1; ++r) {
            SpectralPage pg = ss.page(r);
            for (int p = 0; p <= m; ++p)
                for (int q = 0; q <= m; ++q)
                    os << r << "," << p << "," << q << "," << pg.dims.at(p, q) << "\n";
        }
        return os.str();
    }
    if (format == OutputFormat::json) {
        ordered_json j;
        j["name"] = model.name();
        ordered_json pages = ordered_json::object();
        for (int r = 1; r <= m + 1; ++r) pages[std::to_string(r)] = grid_json(ss.page(r).dims);
        j["pages"] = pages;
        j["degeneration_stage"] = stage;
        j["e_infinity"] = grid_json(limit.dims);
        return dump(j);
    }
    std::ostringstream os;
    for (int r = 1; r <= m + 1; ++r) os << "page " << r << "\n" << render_grid_text(ss.page(r).dims);
    os << "degenerates at stage " << stage << "\n";
    return os.str();
}

std::string render_jinv(const Model& model, OutputFormat format) {
    JInvariantReport report = h_plus_minus(model);
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << report.h_plus << "," << report.h_minus << "," << (report.c_pure ? "yes" : "no") << ","
           << (report.c_full ? "yes" : "no") << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        ordered_json j;
        j["h_plus"] = report.h_plus;
        j["h_minus"] = report.h_minus;
        j["pure"] = report.c_pure;
        j["full"] = report.c_full;
        j["b2"] = report.b2;
        ordered_json plus = ordered_json::array(), minus = ordered_json::array();
        for (const FormVector& f : report.plus_representatives) plus.push_back(form_json(f));
        for (const FormVector& f : report.minus_representatives) minus.push_back(form_json(f));
        j["plus_representatives"] = plus;
        j["minus_representatives"] = minus;
        return dump(j);
    }
    std::ostringstream os;
    os << "H+ dim " << report.h_plus << ", H- dim " << report.h_minus << ", pure "
       << (report.c_pure ? "yes" : "no") << ", full " << (report.c_full ? "yes" : "no") << "\n";
    for (const FormVector& f : report.plus_representatives) os << "  H+ rep: " << f.to_string() << "\n";
    for (const FormVector& f : report.minus_representatives) os << "  H- rep: " << f.to_string() << "\n";
    return os.str();
}

std::string render_harmonic(const Model& model, OutputFormat format,
                            std::optional<std::pair<int, int>> bidegree) {
    HarmonicContext ctx(model);
    const int m = model.m();
    auto dims = dolbeault_grid(model);

    struct Row {
        int p, q, mubar_harm, delbar_mubar_harm, dolbeault;
    };
    std::vector<Row> rows;
    for (int p = 0; p <= m; ++p) {
        DelbarMubar op(ctx, p);
        for (int q = 0; q <= m; ++q) {
            if (bidegree && !(bidegree->first == p && bidegree->second == q)) continue;
            rows.push_back({p, q, ctx.laplacian_harmonics(OpKind::mubar, p, q).dim(),
                            op.harmonics(q).dim(), dims[p][q]});
        }
    }

    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "p,q,mubar_harmonic,delbar_mubar_harmonic,dolbeault\n";
        for (const Row& r : rows)
            os << r.p << "," << r.q << "," << r.mubar_harm << "," << r.delbar_mubar_harm << ","
               << r.dolbeault << "\n";
        return os.str();
    }
    if (format == OutputFormat::json) {
        ordered_json j;
        j["name"] = model.name();
        j["unimodular"] = model.unimodularity().unimodular;
        ordered_json list = ordered_json::array();
        for (const Row& r : rows)
            list.push_back({{"p", r.p},
                            {"q", r.q},
                            {"mubar_harmonic", r.mubar_harm},
                            {"delbar_mubar_harmonic", r.delbar_mubar_harm},
                            {"dolbeault", r.dolbeault}});
        j["spaces"] = list;
        return dump(j);
    }
    std::ostringstream os;
    os << "(p,q)  mubar-harmonic  delbar_mubar-harmonic  dolbeault\n";
    for (const Row& r : rows)
        os << "(" << r.p << "," << r.q << ")  " << r.mubar_harm << "  " << r.delbar_mubar_harm << "  "
           << r.dolbeault << "\n";
    if (!model.unimodularity().unimodular)
        os << "warning: not unimodular; harmonic spaces may differ from cohomology\n";
    return os.str();
}

std::string render_checks(const CheckRun& run, const std::string& suite, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["suite"] = suite;
        ordered_json list = ordered_json::array();
        for (const CheckLine& line : run.lines)
            list.push_back({{"pass", line.pass}, {"label", line.label}, {"detail", line.detail}});
        j["checks"] = list;
        j["pass"] = run.all_pass();
        return dump(j);
    }
    std::ostringstream os;
    for (const CheckLine& line : run.lines) {
        os << (line.pass ? "PASS " : "FAIL ") << line.label;
        if (!line.detail.empty()) os << " (" << line.detail << ")";
        os << "\n";
    }
    if (suite == "serre")
        os << (run.all_pass() ? "PASS all pages" : "FAIL") << "\n";
    else
        os << (run.all_pass() ? "PASS" : "FAIL") << " " << suite << "\n";
    return os.str();
}

std::string render_validation(const ValidationReport& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json j;
        j["valid"] = report.ok();
        ordered_json list = ordered_json::array();
        for (const ValidationIssue& issue : report.issues)
            list.push_back({{"code", issue.code}, {"detail", issue.detail}});
        j["issues"] = list;
        return dump(j);
    }
    std::ostringstream os;
    if (report.ok()) {
        os << "valid\n";
    } else {
        for (const ValidationIssue& issue : report.issues)
            os << "invalid [" << issue.code << "] " << issue.detail << "\n";
    }
    return os.str();
}

}  // namespace dolce
