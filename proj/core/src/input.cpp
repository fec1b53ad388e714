#include "dolce/input.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace dolce {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error("parse error at " + where + ": " + what);
}

void require_keys(const ordered_json& obj, const std::string& where,
                  const std::set<std::string>& required, const std::set<std::string>& optional) {
    for (const auto& [key, value] : obj.items())
        if (!required.count(key) && !optional.count(key)) fail(where, "unknown field \"" + key + "\"");
    for (const auto& key : required)
        if (!obj.contains(key)) fail(where, "missing field \"" + key + "\"");
}

Rational rational_field(const ordered_json& v, const std::string& where) {
    if (!v.is_string())
        fail(where, "coefficients must be exact rational strings like \"3\" or \"-1/2\"");
    auto parsed = parse_rational(v.get<std::string>());
    if (!parsed) fail(where, "\"" + v.get<std::string>() + "\" is not an exact rational");
    return *parsed;
}

Mat rational_matrix(const ordered_json& v, int dim, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim) fail(where, "expected " + std::to_string(dim) + " rows");
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = v[i];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            fail(where, "expected " + std::to_string(dim) + " entries per row");
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = Scalar(rational_field(row[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    return m;
}

int int_field(const ordered_json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    return v.get<int>();
}

}  // namespace

InputDocument parse_spec(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document", "top level must be an object");

    InputDocument out;
    if (!doc.contains("mode") || !doc["mode"].is_string()) fail("mode", "expected \"real\" or \"complex\"");
    std::string mode = doc["mode"].get<std::string>();
    if (mode == "real")
        out.mode = InputMode::real;
    else if (mode == "complex")
        out.mode = InputMode::complex_coframe;
    else
        fail("mode", "expected \"real\" or \"complex\", got \"" + mode + "\"");

    if (out.mode == InputMode::real)
        require_keys(doc, "document", {"mode", "name", "dimension", "brackets"}, {"J", "metric"});
    else
        require_keys(doc, "document", {"mode", "name", "dimension", "d_phi"}, {"metric"});

    if (!doc["name"].is_string()) fail("name", "expected a string");
    out.name = doc["name"].get<std::string>();
    out.dimension = int_field(doc["dimension"], "dimension");

    if (out.mode == InputMode::real) {
        if (out.dimension <= 0 || out.dimension % 2 != 0)
            fail("dimension", "real mode needs a positive even generator count");
        const auto& brackets = doc["brackets"];
        if (!brackets.is_array()) fail("brackets", "expected an array");
        std::set<std::pair<int, int>> seen;
        for (std::size_t t = 0; t < brackets.size(); ++t) {
            const std::string where = "brackets[" + std::to_string(t) + "]";
            const auto& entry = brackets[t];
            if (!entry.is_object()) fail(where, "expected an object");
            require_keys(entry, where, {"pair", "coeffs"}, {});
            const auto& pair = entry["pair"];
            if (!pair.is_array() || pair.size() != 2) fail(where + ".pair", "expected [j, k]");
            BracketEntry be;
            be.j = int_field(pair[0], where + ".pair[0]");
            be.k = int_field(pair[1], where + ".pair[1]");
            if (be.j < 1 || be.k > out.dimension || be.j >= be.k)
                fail(where + ".pair", "indices must satisfy 1 <= j < k <= dimension");
            if (!seen.insert({be.j, be.k}).second) fail(where + ".pair", "duplicate bracket pair");
            const auto& coeffs = entry["coeffs"];
            if (!coeffs.is_object()) fail(where + ".coeffs", "expected an object");
            for (const auto& [lkey, cval] : coeffs.items()) {
                int l = 0;
                try {
                    std::size_t used = 0;
                    l = std::stoi(lkey, &used);
                    if (used != lkey.size()) throw std::invalid_argument(lkey);
                } catch (...) {
                    fail(where + ".coeffs", "key \"" + lkey + "\" is not a generator index");
                }
                if (l < 1 || l > out.dimension) fail(where + ".coeffs", "generator index out of range");
                Rational c = rational_field(cval, where + ".coeffs[" + lkey + "]");
                if (c != 0) be.coefficients[l] = c;
            }
            out.brackets.push_back(std::move(be));
        }
        if (doc.contains("J")) out.j = rational_matrix(doc["J"], out.dimension, "J");
    } else {
        if (out.dimension <= 0) fail("dimension", "complex mode needs a positive coframe count");
        const auto& dphi = doc["d_phi"];
        if (!dphi.is_array() || static_cast<int>(dphi.size()) != out.dimension)
            fail("d_phi", "expected one term list per coframe element (" + std::to_string(out.dimension) + ")");
        for (int i = 0; i < out.dimension; ++i) {
            const std::string iwhere = "d_phi[" + std::to_string(i) + "]";
            if (!dphi[i].is_array()) fail(iwhere, "expected an array of terms");
            std::vector<CoframeTerm> terms;
            for (std::size_t t = 0; t < dphi[i].size(); ++t) {
                const std::string where = iwhere + "[" + std::to_string(t) + "]";
                const auto& term = dphi[i][t];
                if (!term.is_object()) fail(where, "expected an object");
                require_keys(term, where, {"kind", "indices", "coeff"}, {});
                CoframeTerm ct;
                if (!term["kind"].is_string()) fail(where + ".kind", "expected \"(2,0)\", \"(1,1)\" or \"(0,2)\"");
                std::string kind = term["kind"].get<std::string>();
                if (kind == "(2,0)")
                    ct.kind = TermKind::holomorphic;
                else if (kind == "(1,1)")
                    ct.kind = TermKind::mixed;
                else if (kind == "(0,2)")
                    ct.kind = TermKind::antiholomorphic;
                else
                    fail(where + ".kind", "expected \"(2,0)\", \"(1,1)\" or \"(0,2)\"");
                const auto& idx = term["indices"];
                if (!idx.is_array() || idx.size() != 2) fail(where + ".indices", "expected [a, b]");
                ct.a = int_field(idx[0], where + ".indices[0]");
                ct.b = int_field(idx[1], where + ".indices[1]");
                if (ct.a < 1 || ct.a > out.dimension || ct.b < 1 || ct.b > out.dimension)
                    fail(where + ".indices", "coframe index out of range");
                if (ct.kind != TermKind::mixed && ct.a >= ct.b)
                    fail(where + ".indices", "pure-type terms need a < b");
                const auto& coeff = term["coeff"];
                if (!coeff.is_object()) fail(where + ".coeff", "expected { \"re\": ..., \"im\": ... }");
                require_keys(coeff, where + ".coeff", {"re", "im"}, {});
                ct.coeff = Scalar(rational_field(coeff["re"], where + ".coeff.re"),
                                  rational_field(coeff["im"], where + ".coeff.im"));
                if (!ct.coeff.is_zero()) terms.push_back(ct);
            }
            out.d_phi.push_back(std::move(terms));
        }
    }

    if (doc.contains("metric"))
        out.metric = rational_matrix(doc["metric"], out.real_dimension(), "metric");
    return out;
}

std::string serialize(const InputDocument& doc) {
    ordered_json j;
    j["mode"] = doc.mode == InputMode::real ? "real" : "complex";
    j["name"] = doc.name;
    j["dimension"] = doc.dimension;
    if (doc.mode == InputMode::real) {
        ordered_json brackets = ordered_json::array();
        for (const BracketEntry& entry : doc.brackets) {
            ordered_json coeffs = ordered_json::object();
            for (const auto& [l, c] : entry.coefficients) coeffs[std::to_string(l)] = to_string(c);
            brackets.push_back({{"pair", {entry.j, entry.k}}, {"coeffs", coeffs}});
        }
        j["brackets"] = brackets;
        if (doc.j) {
            ordered_json rows = ordered_json::array();
            for (int a = 0; a < doc.j->rows(); ++a) {
                ordered_json row = ordered_json::array();
                for (int b = 0; b < doc.j->cols(); ++b) row.push_back(to_string(doc.j->at(a, b).re()));
                rows.push_back(row);
            }
            j["J"] = rows;
        }
    } else {
        ordered_json dphi = ordered_json::array();
        for (const auto& terms : doc.d_phi) {
            ordered_json list = ordered_json::array();
            for (const CoframeTerm& ct : terms) {
                const char* kind = ct.kind == TermKind::holomorphic  ? "(2,0)"
                                   : ct.kind == TermKind::mixed      ? "(1,1)"
                                                                     : "(0,2)";
                list.push_back({{"kind", kind},
                                {"indices", {ct.a, ct.b}},
                                {"coeff", {{"re", to_string(ct.coeff.re())}, {"im", to_string(ct.coeff.im())}}}});
            }
            dphi.push_back(list);
        }
        j["d_phi"] = dphi;
    }
    if (doc.metric) {
        ordered_json rows = ordered_json::array();
        for (int a = 0; a < doc.metric->rows(); ++a) {
            ordered_json row = ordered_json::array();
            for (int b = 0; b < doc.metric->cols(); ++b) row.push_back(to_string(doc.metric->at(a, b).re()));
            rows.push_back(row);
        }
        j["metric"] = rows;
    }
    return j.dump(2) + "\n";
}

bool operator==(const InputDocument& a, const InputDocument& b) {
    auto term_eq = [](const CoframeTerm& x, const CoframeTerm& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b && x.coeff == y.coeff;
    };
    if (a.mode != b.mode || a.name != b.name || a.dimension != b.dimension) return false;
    if (a.brackets.size() != b.brackets.size()) return false;
    for (std::size_t i = 0; i < a.brackets.size(); ++i) {
        if (a.brackets[i].j != b.brackets[i].j || a.brackets[i].k != b.brackets[i].k ||
            a.brackets[i].coefficients != b.brackets[i].coefficients)
            return false;
    }
    if (a.d_phi.size() != b.d_phi.size()) return false;
    for (std::size_t i = 0; i < a.d_phi.size(); ++i) {
        if (a.d_phi[i].size() != b.d_phi[i].size()) return false;
        for (std::size_t t = 0; t < a.d_phi[i].size(); ++t)
            if (!term_eq(a.d_phi[i][t], b.d_phi[i][t])) return false;
    }
    if (a.j.has_value() != b.j.has_value() || a.metric.has_value() != b.metric.has_value()) return false;
    if (a.j && !(*a.j == *b.j)) return false;
    if (a.metric && !(*a.metric == *b.metric)) return false;
    return true;
}

}  // namespace dolce
