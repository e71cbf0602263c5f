// coxgrow: growth functions and growth rates of Coxeter systems, with exact
// arithmetic end to end.  Subcommands compose the pipeline
//   parse -> validate -> Steinberg -> H extraction -> root certification
// and emit machine-first JSON or human-readable text.
//
// Exit codes: 0 success, 1 input error, 2 validation/identity failure,
// 3 certification failure or sampler exhaustion.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxgrow/oracle.hpp"
#include "coxgrow/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCertification = 3;

struct LoadedDocument {
    nlohmann::json doc;
    std::string raw;
};

LoadedDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw coxgrow::document_error("(file)", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedDocument loaded{nlohmann::json(), buf.str()};
    try {
        loaded.doc = nlohmann::json::parse(loaded.raw);
    } catch (const nlohmann::json::parse_error& err) {
        throw coxgrow::document_error("(json)", err.what());
    }
    return loaded;
}

bool looks_like_matrix(const nlohmann::json& doc) {
    return doc.is_object() && doc.contains("orders") && !doc.contains("facets");
}

struct CommonFlags {
    std::size_t series = 20;
    unsigned precision = 128;
    std::string format = "text";
    bool matrix = false;
    bool noncompact = false;  // force the cusp-existence inequality on
};

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

int emit_report(const coxgrow::GrowthReport& report, const std::string& format,
                std::ostream& out) {
    if (format == "json")
        out << coxgrow::render_json(report).dump(2) << "\n";
    else
        out << coxgrow::render_text(report);
    if (report.lemma2 && !report.lemma2->all_pass()) return kExitValidation;
    if (report.verdict.status == coxgrow::PerronStatus::NotCertified) return kExitCertification;
    return kExitOk;
}

int run_growth_one(const std::string& path, const CommonFlags& flags, std::ostream& out) {
    LoadedDocument loaded = load_document(path);
    bool as_matrix = flags.matrix || looks_like_matrix(loaded.doc);
    std::optional<bool> noncompact;
    if (flags.noncompact) noncompact = true;
    coxgrow::GrowthReport report = coxgrow::build_growth_report(
        loaded.doc, loaded.raw, as_matrix, flags.series, flags.precision, noncompact);
    return emit_report(report, flags.format, out);
}

int run_growth(const std::string& input, const std::string& input_dir, const CommonFlags& flags) {
    if (input_dir.empty()) return run_growth_one(input, flags, std::cout);

    // batch mode: each file reported next to its input, independently
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(input_dir))
        if (entry.path().extension() == ".json" &&
            entry.path().string().find(".report.") == std::string::npos)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    int worst = kExitOk;
    for (const auto& file : files) {
        std::filesystem::path out_path = file;
        out_path.replace_extension(flags.format == "json" ? ".report.json" : ".report.txt");
        std::ofstream out(out_path);
        int code;
        try {
            code = run_growth_one(file.string(), flags, out);
        } catch (const coxgrow::document_error& err) {
            out << "error: " << err.what() << "\n";
            code = kExitInput;
        }
        std::cout << file.filename().string() << ": exit " << code << " -> "
                  << out_path.filename().string() << "\n";
        worst = std::max(worst, code);
    }
    return worst;
}

int run_check(const std::string& path, bool noncompact_flag) {
    LoadedDocument loaded = load_document(path);
    coxgrow::PolyhedronScheme scheme = coxgrow::parse_polyhedron(loaded.doc);
    bool noncompact = noncompact_flag || scheme.noncompact();
    try {
        coxgrow::CountVector counts = coxgrow::count_vector(scheme);
        coxgrow::Lemma2Report report = coxgrow::check_lemma2(counts, noncompact);
        std::cout << coxgrow::render_text(report);
        return report.all_pass() ? kExitOk : kExitValidation;
    } catch (const std::domain_error& err) {
        // vertex angle-sum violations (the dihedral-angle corollary)
        std::cout << "vertex classification failed: " << err.what() << "\n";
        return kExitValidation;
    }
}

int run_hverify(const std::string& path, const std::string& format) {
    LoadedDocument loaded = load_document(path);
    coxgrow::PolyhedronScheme scheme = coxgrow::parse_polyhedron(loaded.doc);
    coxgrow::CountVector counts = coxgrow::count_vector(scheme);
    coxgrow::HFamily family;
    try {
        family = coxgrow::detect_family(counts);
    } catch (const std::domain_error& err) {
        std::cout << "family detection failed: " << err.what() << "\n";
        return kExitValidation;
    }
    coxgrow::RationalFunction growth =
        coxgrow::steinberg_growth(coxgrow::to_coxeter_matrix(scheme));
    coxgrow::IntPolynomial h = coxgrow::extract_h(growth, family);

    if (family.tag == coxgrow::HFamilyTag::H23456) {
        coxgrow::DifferenceReport diff = coxgrow::difference_identity(counts);
        if (format == "json")
            std::cout << coxgrow::render_json(diff).dump(2) << "\n";
        else
            std::cout << coxgrow::render_text(diff);
        bool structural = diff.nonnegative && diff.vanishes == diff.pi4_free;
        return structural ? kExitOk : kExitValidation;
    }

    coxgrow::IntPolynomial closed = coxgrow::h_closed_form(family, counts);
    bool equal = h == closed;
    if (format == "json") {
        nlohmann::ordered_json out{{"family", coxgrow::to_string(family.tag)},
                                   {"extracted", coxgrow::to_string(h)},
                                   {"closed_form", coxgrow::to_string(closed)},
                                   {"equal", equal}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "family:      " << coxgrow::to_string(family.tag) << "\n"
                  << "extracted:   " << coxgrow::to_string(h) << "\n"
                  << "closed form: " << coxgrow::to_string(closed) << "\n"
                  << (equal ? "EQUAL\n" : "MISMATCH\n");
    }
    return equal ? kExitOk : kExitValidation;
}

int run_sample(const std::string& family_text, std::uint64_t seed, std::size_t n,
               const std::string& out_path) {
    coxgrow::HFamilyTag tag = coxgrow::parse_family(family_text);
    std::vector<coxgrow::CountVector> vectors;
    try {
        vectors = coxgrow::sample_admissible_counts(tag, seed, n);
    } catch (const coxgrow::sampler_exhausted& err) {
        std::cout << err.what() << "\n";
        return kExitCertification;
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    std::size_t passed = 0;
    for (const auto& counts : vectors) {
        coxgrow::NonnegativityReport report =
            coxgrow::nonnegativity_check(coxgrow::make_family(tag), counts);
        if (report.pass) ++passed;
        nlohmann::ordered_json entry = coxgrow::render_json(counts);
        entry["nonnegativity_pass"] = report.pass;
        out.push_back(entry);
    }
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        file << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    std::cout << coxgrow::to_string(tag) << ": " << passed << "/" << vectors.size()
              << " nonnegativity pass\n";
    return passed == vectors.size() ? kExitOk : kExitValidation;
}

int run_roots(const std::string& path, const CommonFlags& flags) {
    LoadedDocument loaded = load_document(path);
    bool as_matrix = flags.matrix || looks_like_matrix(loaded.doc);
    coxgrow::RationalFunction growth;
    if (as_matrix) {
        growth = coxgrow::steinberg_growth(coxgrow::parse_coxeter_matrix(loaded.doc));
    } else {
        coxgrow::PolyhedronScheme scheme = coxgrow::parse_polyhedron(loaded.doc);
        growth = coxgrow::steinberg_growth(coxgrow::to_coxeter_matrix(scheme));
    }
    const coxgrow::IntPolynomial& den = growth.denominator();
    std::cout << "denominator: " << coxgrow::to_string(den) << "\n";
    if (den.degree() <= 0) {
        std::cout << "no roots (finite growth)\n";
        return kExitOk;
    }
    for (const auto& enc : coxgrow::sturm_isolate(den)) {
        if (enc.exact)
            std::cout << "root " << coxgrow::to_string(enc.lo) << " (exact, multiplicity "
                      << enc.multiplicity << ")\n";
        else
            std::cout << "root in (" << coxgrow::to_string(enc.lo) << ", "
                      << coxgrow::to_string(enc.hi) << "), multiplicity " << enc.multiplicity
                      << "\n";
    }
    coxgrow::IntPolynomial core = coxgrow::strip_cyclotomic_content(den);
    std::cout << "cyclotomic-stripped core: " << coxgrow::to_string(core) << "\n";
    if (core.degree() >= 1 && core.coeff(0) != 0) {
        auto smallest = coxgrow::smallest_modulus_root(core, flags.precision);
        if (!smallest.certified) {
            std::cout << "smallest-modulus root: not certified (" << smallest.note << ")\n";
            return kExitCertification;
        }
        std::cout << "smallest-modulus root (" << smallest.method << "): ["
                  << coxgrow::to_string(smallest.root.lo) << ", "
                  << coxgrow::to_string(smallest.root.hi) << "]"
                  << (smallest.root.is_real ? "" : " (complex pair, x-range)") << "\n";
    }
    return kExitOk;
}

int run_perron(const std::string& path, const CommonFlags& flags) {
    LoadedDocument loaded = load_document(path);
    bool as_matrix = flags.matrix || looks_like_matrix(loaded.doc);
    coxgrow::RationalFunction growth;
    std::optional<coxgrow::IntPolynomial> hint;
    if (as_matrix) {
        growth = coxgrow::steinberg_growth(coxgrow::parse_coxeter_matrix(loaded.doc));
    } else {
        coxgrow::PolyhedronScheme scheme = coxgrow::parse_polyhedron(loaded.doc);
        coxgrow::CountVector counts = coxgrow::count_vector(scheme);
        growth = coxgrow::steinberg_growth(coxgrow::to_coxeter_matrix(scheme));
        try {
            hint = coxgrow::extract_h(growth, coxgrow::detect_family(counts));
        } catch (const std::domain_error&) {
            // outside the m <= 6 families: fall back to the general path
        }
    }
    coxgrow::PerronVerdict verdict = coxgrow::perron_check(growth, flags.precision, hint);
    if (flags.format == "json") {
        nlohmann::ordered_json out{{"status", coxgrow::to_string(verdict.status)},
                                   {"method", verdict.method},
                                   {"note", verdict.note}};
        if (verdict.tau)
            out["tau"] = {{"lo", coxgrow::to_string(verdict.tau->lo)},
                          {"hi", coxgrow::to_string(verdict.tau->hi)},
                          {"exact", verdict.tau->exact}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << coxgrow::to_string(verdict.status)
                  << (verdict.method.empty() ? "" : " via " + verdict.method)
                  << (verdict.note.empty() ? "" : " (" + verdict.note + ")") << "\n";
        if (verdict.tau) {
            if (verdict.tau->exact)
                std::cout << "tau = " << coxgrow::to_string(verdict.tau->lo) << " (exact)\n";
            else
                std::cout << "tau in [" << coxgrow::to_string(verdict.tau->lo) << ", "
                          << coxgrow::to_string(verdict.tau->hi) << "]\n";
        }
    }
    return verdict.status == coxgrow::PerronStatus::NotCertified ? kExitCertification : kExitOk;
}

int run_solomon(const std::string& label_text) {
    coxgrow::FiniteTypeLabel label = coxgrow::parse_label(label_text);
    coxgrow::IntPolynomial series = coxgrow::solomon_series({label});
    std::cout << coxgrow::to_string(label) << ": " << coxgrow::to_string(series) << "\n"
              << "order: " << coxgrow::group_order(label).get_str() << "\n";
    return kExitOk;
}

int run_oracle(const std::string& label_text) {
    coxgrow::FiniteTypeLabel label = coxgrow::parse_label(label_text);
    coxgrow::ConcreteGroupModel model = coxgrow::build_model(label);
    coxgrow::IntPolynomial bfs = coxgrow::bfs_growth(model);
    coxgrow::IntPolynomial solomon = coxgrow::solomon_series({label});
    bool equal = bfs == solomon;
    std::cout << "bfs:     " << coxgrow::to_string(bfs) << "\n"
              << "solomon: " << coxgrow::to_string(solomon) << "\n"
              << (equal ? "EQUAL\n" : "MISMATCH\n");
    return equal ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth functions and growth rates of Coxeter systems"};
    app.require_subcommand(1);
    CommonFlags flags;

    std::string input, input_dir, family, out_path, label;
    std::uint64_t seed = 1;
    std::size_t n = 100;

    auto* growth = app.add_subcommand("growth", "full pipeline report for one input");
    growth->add_option("input", input, "polyhedron or Coxeter matrix document");
    growth->add_option("--input-dir", input_dir, "process every .json in a directory");
    growth->add_flag("--matrix", flags.matrix, "force Coxeter-matrix interpretation");
    growth->add_flag("--noncompact", flags.noncompact, "force the cusp-existence check");
    growth->add_option("--series", flags.series, "series prefix length")->capture_default_str();
    growth->add_option("--precision", flags.precision, "enclosure precision in bits")
        ->capture_default_str();
    add_format_flag(growth, flags.format);

    auto* check = app.add_subcommand("check", "combinatorial identity report");
    check->add_option("input", input, "polyhedron document")->required();
    check->add_flag("--noncompact", flags.noncompact, "force the cusp-existence check");

    auto* hverify = app.add_subcommand("h-verify", "closed form vs extracted H");
    hverify->add_option("input", input, "polyhedron document")->required();
    add_format_flag(hverify, flags.format);

    auto* sample = app.add_subcommand("sample", "admissible count vectors + nonnegativity");
    sample->add_option("family", family, "H2|H23|H236|H25|H2356|H23456")->required();
    sample->add_option("--seed", seed, "sampler seed")->capture_default_str();
    sample->add_option("-n", n, "number of vectors")->capture_default_str();
    sample->add_option("--out", out_path, "write vectors to this file");

    auto* roots = app.add_subcommand("roots", "denominator root isolation");
    roots->add_option("input", input, "polyhedron or matrix document")->required();
    roots->add_flag("--matrix", flags.matrix, "force Coxeter-matrix interpretation");
    roots->add_option("--precision", flags.precision, "enclosure precision in bits")
        ->capture_default_str();

    auto* perron = app.add_subcommand("perron", "Perron certification only");
    perron->add_option("input", input, "polyhedron or matrix document")->required();
    perron->add_flag("--matrix", flags.matrix, "force Coxeter-matrix interpretation");
    perron->add_option("--precision", flags.precision, "enclosure precision in bits")
        ->capture_default_str();
    add_format_flag(perron, flags.format);

    auto* solomon = app.add_subcommand("solomon", "Poincare polynomial of a finite type");
    solomon->add_option("--type", label, "type label, e.g. A3, B3, I2(7)")->required();

    auto* oracle = app.add_subcommand("oracle", "BFS word-growth oracle vs the formula");
    oracle->add_option("--type", label, "type label with a concrete model")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (growth->parsed()) {
            if (input.empty() && input_dir.empty())
                throw coxgrow::document_error("(input)", "provide an input file or --input-dir");
            return run_growth(input, input_dir, flags);
        }
        if (check->parsed()) return run_check(input, flags.noncompact);
        if (hverify->parsed()) return run_hverify(input, flags.format);
        if (sample->parsed()) return run_sample(family, seed, n, out_path);
        if (roots->parsed()) return run_roots(input, flags);
        if (perron->parsed()) return run_perron(input, flags);
        if (solomon->parsed()) return run_solomon(label);
        if (oracle->parsed()) return run_oracle(label);
    } catch (const coxgrow::document_error& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }
    return kExitInput;
}
