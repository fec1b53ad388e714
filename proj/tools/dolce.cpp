// Command line front end: exact cohomology of Lie algebras with almost
// complex structures. Exit codes: 0 success, 1 validation or computation
// failure, 2 document parse error, 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dolce/checks.hpp"
#include "dolce/corpus.hpp"
#include "dolce/model.hpp"
#include "dolce/render.hpp"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string input_file;
    std::string corpus_key;
    std::string metric_file;
    std::string format = "text";
    int page = 0;
    std::string bidegree;
    std::string suite = "all";
};

dolce::OutputFormat parse_format(const std::string& f) {
    if (f == "text") return dolce::OutputFormat::text;
    if (f == "json") return dolce::OutputFormat::json;
    if (f == "csv") return dolce::OutputFormat::csv;
    throw CLI::ValidationError("--format must be text, json or csv");
}

std::optional<std::pair<int, int>> parse_bidegree(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::istringstream is(s);
    int p = 0, q = 0;
    char comma = 0;
    if (!(is >> p >> comma >> q) || comma != ',' || !is.eof())
        throw CLI::ValidationError("--bidegree expects p,q");
    return std::make_pair(p, q);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dolce::parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

dolce::InputDocument load_document(const Options& opt) {
    dolce::InputDocument doc;
    if (!opt.corpus_key.empty()) {
        const dolce::CorpusEntry* entry = dolce::corpus_find(opt.corpus_key);
        if (!entry) {
            std::string keys;
            for (const auto& e : dolce::corpus()) keys += " " + e.key;
            throw dolce::parse_error("unknown corpus key \"" + opt.corpus_key + "\"; available:" + keys);
        }
        doc = entry->document;
    } else if (!opt.input_file.empty()) {
        doc = dolce::parse_spec(read_file(opt.input_file));
    } else {
        throw CLI::ValidationError("provide an input file or --corpus key");
    }
    if (!opt.metric_file.empty()) {
        // a metric file holds one JSON matrix of rational strings
        std::string text = read_file(opt.metric_file);
        dolce::InputDocument wrapper = dolce::parse_spec(
            std::string("{\"mode\":\"real\",\"name\":\"metric\",\"dimension\":") +
            std::to_string(doc.real_dimension()) + ",\"brackets\":[],\"metric\":" + text + "}");
        doc.metric = wrapper.metric;
    }
    return doc;
}

void add_common(CLI::App* cmd, Options& opt, bool with_format = true) {
    cmd->add_option("input", opt.input_file, "input document (JSON)");
    cmd->add_option("--corpus", opt.corpus_key, "built-in corpus key");
    cmd->add_option("--metric", opt.metric_file, "metric file (JSON matrix of rationals)");
    if (with_format) cmd->add_option("--format", opt.format, "text, json or csv")->default_str("text");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact de Rham, Dolbeault and spectral-sequence cohomology of Lie algebras "
                 "with almost complex structures"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* validate = app.add_subcommand("validate", "validate a document");
    add_common(validate, opt);
    CLI::App* derham = app.add_subcommand("derham", "de Rham cohomology and Betti numbers");
    add_common(derham, opt);
    CLI::App* dolbeault = app.add_subcommand("dolbeault", "Dolbeault cohomology h^{p,q}");
    add_common(dolbeault, opt);
    dolbeault->add_option("--bidegree", opt.bidegree, "restrict to one bidegree p,q");
    CLI::App* spectral = app.add_subcommand("spectral", "spectral sequence pages");
    add_common(spectral, opt);
    spectral->add_option("--page", opt.page, "single page index r >= 1");
    CLI::App* jinv = app.add_subcommand("jinv", "J-invariant and anti-invariant cohomology");
    add_common(jinv, opt);
    CLI::App* harmonic = app.add_subcommand("harmonic", "harmonic spaces per bidegree");
    add_common(harmonic, opt);
    harmonic->add_option("--bidegree", opt.bidegree, "restrict to one bidegree p,q");
    CLI::App* check = app.add_subcommand("check", "verify structural properties");
    check->add_option("suite", opt.suite, "square, nijenhuis, frolicher, serre, hodge, theorem41, suffcond, einf, all")
        ->default_str("all");
    add_common(check, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        dolce::OutputFormat format = parse_format(opt.format);
        auto bidegree = parse_bidegree(opt.bidegree);
        dolce::InputDocument doc = load_document(opt);

        if (validate->parsed()) {
            try {
                dolce::Model::build(doc);
            } catch (const dolce::validation_error& e) {
                std::cout << dolce::render_validation(e.report, format);
                return kExitComputation;
            }
            dolce::ValidationReport ok;
            std::cout << dolce::render_validation(ok, format);
            return 0;
        }

        auto model = dolce::Model::build(doc);
        if (derham->parsed()) {
            std::cout << dolce::render_derham(*model, format);
        } else if (dolbeault->parsed()) {
            std::cout << dolce::render_dolbeault(*model, format, bidegree);
        } else if (spectral->parsed()) {
            if (opt.page < 0 || opt.page > model->m() + 1)
                throw CLI::ValidationError("--page must lie in 1.." + std::to_string(model->m() + 1));
            std::cout << dolce::render_spectral(*model, format, opt.page);
        } else if (jinv->parsed()) {
            std::cout << dolce::render_jinv(*model, format);
        } else if (harmonic->parsed()) {
            std::cout << dolce::render_harmonic(*model, format, bidegree);
        } else if (check->parsed()) {
            auto suites = dolce::known_check_suites();
            bool known = false;
            for (const auto& s : suites) known = known || s == opt.suite;
            if (!known) throw CLI::ValidationError("unknown check suite \"" + opt.suite + "\"");
            dolce::CheckRun run = dolce::run_checks(*model, opt.suite);
            std::cout << dolce::render_checks(run, opt.suite, format);
            if (!run.all_pass()) return kExitComputation;
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const dolce::parse_error& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const dolce::validation_error& e) {
        std::cerr << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
