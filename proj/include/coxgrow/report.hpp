#ifndef COXGROW_REPORT_HPP
#define COXGROW_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxeter.hpp"
#include "documents.hpp"
#include "poly_text.hpp"
#include "hfamily.hpp"
#include "polyhedron.hpp"
#include "rational_function.hpp"
#include "roots.hpp"

namespace coxgrow {

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const IntPolynomial& p) { return to_text(p); }

/// FNV-1a over the raw input bytes; enough to tie a report to its input.
inline std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

/// Everything the growth pipeline produced for one input.  Optional stages
/// that do not apply carry an entry in `skipped` naming the reason, so a
/// rendered report always accounts for every field.
struct GrowthReport {
    std::string input_digest;
    std::string input_kind;  // "polyhedron" | "matrix"

    std::optional<CountVector> counts;
    std::optional<Lemma2Report> lemma2;
    RationalFunction growth;
    std::vector<Integer> series;
    std::optional<HFamilyTag> family;
    std::optional<IntPolynomial> h;
    std::optional<NonnegativityReport> nonneg;
    std::optional<RateInterval> tau;
    PerronVerdict verdict;

    std::map<std::string, std::string> skipped;  // field -> reason
};

/// Runs parse -> validate -> Steinberg -> H extraction -> certification on a
/// parsed JSON document.  Structural problems throw document_error; failed
/// Lemma 2 identities do not throw (the report carries them).
inline GrowthReport build_growth_report(const nlohmann::json& doc, const std::string& raw_bytes,
                                        bool as_matrix, std::size_t series_n,
                                        unsigned precision_bits,
                                        std::optional<bool> noncompact_override = std::nullopt) {
    GrowthReport report;
    report.input_digest = digest_bytes(raw_bytes);

    std::optional<IntPolynomial> h_hint;
    if (as_matrix) {
        report.input_kind = "matrix";
        CoxeterMatrix matrix = parse_coxeter_matrix(doc);
        report.growth = steinberg_growth(matrix);
        const char* why = "matrix input carries no polyhedral combinatorics";
        for (const char* field : {"counts", "lemma2", "family", "h", "nonnegativity"})
            report.skipped[field] = why;
    } else {
        report.input_kind = "polyhedron";
        PolyhedronScheme scheme = parse_polyhedron(doc);
        bool noncompact = noncompact_override.value_or(scheme.noncompact());
        report.counts = count_vector(scheme);
        report.lemma2 = check_lemma2(*report.counts, noncompact);
        report.growth = steinberg_growth(to_coxeter_matrix(scheme));
        try {
            HFamily family = detect_family(*report.counts);
            report.family = family.tag;
            report.h = extract_h(report.growth, family);
            h_hint = report.h;
            report.nonneg = nonnegativity_check(family, *report.counts);
        } catch (const std::domain_error& err) {
            for (const char* field : {"family", "h", "nonnegativity"})
                report.skipped[field] = err.what();
        }
    }

    report.series = taylor_coefficients(report.growth, series_n);
    report.verdict = perron_check(report.growth, precision_bits, h_hint);
    report.tau = report.verdict.tau;
    if (!report.tau) report.skipped["rate"] = "finite growth: no denominator root in (0,1]";
    return report;
}

// --- JSON rendering (nlohmann::ordered_json keeps insertion order, so the
// --- output is byte-stable for a fixed input and flag set) ---

inline nlohmann::ordered_json render_json(const Lemma2Report& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"relation", c.inequality ? ">=" : "=="},
                          {"pass", c.pass}});
    return {{"pass", report.all_pass()}, {"checks", checks}};
}

inline nlohmann::ordered_json render_json(const CountVector& c) {
    nlohmann::ordered_json em = nlohmann::ordered_json::object();
    for (const auto& [m, n] : c.e_m) em[std::to_string(m)] = n;
    nlohmann::ordered_json vabc = nlohmann::ordered_json::object();
    for (const auto& [triple, n] : c.v_abc)
        vabc[std::to_string(triple[0]) + "," + std::to_string(triple[1]) + "," +
             std::to_string(triple[2])] = n;
    return {{"f", c.f}, {"e", c.e}, {"v", c.v},
            {"e_m", em}, {"v_2222", c.v2222}, {"v_abc", vabc}};
}

inline nlohmann::ordered_json render_json(const NonnegativityReport& r) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : r.coefficients)
        coeffs.push_back({{"index", c.index},
                          {"origin", c.origin},
                          {"value", to_string(c.value)},
                          {"required", std::string(1, c.required)},
                          {"pass", c.pass}});
    return {{"family", to_string(r.family)},
            {"preconditions_ok", r.preconditions_ok},
            {"precondition_failures", r.precondition_failures},
            {"h", to_string(r.h)},
            {"coefficients", coeffs},
            {"support_gcd_ok", r.support_gcd_ok},
            {"two_positive", r.two_positive},
            {"degree1_special", r.degree1_special},
            {"pass", r.pass}};
}

inline nlohmann::ordered_json render_json(const DifferenceReport& r) {
    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (const auto& line : r.lines)
        lines.push_back({{"power", line.power},
                         {"derived_doubled", to_string(line.derived_doubled)},
                         {"printed_doubled", to_string(line.printed_doubled)},
                         {"suspect", line.suspect},
                         {"agrees", line.agrees}});
    return {{"h_full", to_string(r.h_full)},
            {"reduced_doubled", to_string(r.reduced_doubled)},
            {"difference_doubled", to_string(r.difference_doubled)},
            {"nonnegative", r.nonnegative},
            {"vanishes", r.vanishes},
            {"pi4_free", r.pi4_free},
            {"consistent_lines_agree", r.consistent_lines_agree()},
            {"lines", lines}};
}

inline nlohmann::ordered_json render_json(const GrowthReport& report) {
    nlohmann::ordered_json out;
    out["input"] = {{"digest", report.input_digest}, {"kind", report.input_kind}};

    auto field = [&](const char* name, auto&& fill) {
        auto it = report.skipped.find(name);
        if (it != report.skipped.end())
            out[name] = {{"skipped", it->second}};
        else
            out[name] = fill();
    };

    field("counts", [&] { return render_json(*report.counts); });
    field("lemma2", [&] { return render_json(*report.lemma2); });
    out["growth"] = {{"numerator", to_string(report.growth.numerator())},
                     {"denominator", to_string(report.growth.denominator())}};
    nlohmann::ordered_json series = nlohmann::ordered_json::array();
    for (const auto& a : report.series) series.push_back(to_string(a));
    out["series"] = series;
    field("family", [&] { return nlohmann::ordered_json(to_string(*report.family)); });
    field("h", [&] { return nlohmann::ordered_json(to_string(*report.h)); });
    field("nonnegativity", [&] { return render_json(*report.nonneg); });
    field("rate", [&] {
        return nlohmann::ordered_json{{"lo", to_string(report.tau->lo)},
                                      {"hi", to_string(report.tau->hi)},
                                      {"exact", report.tau->exact}};
    });
    out["perron"] = {{"status", to_string(report.verdict.status)},
                     {"method", report.verdict.method},
                     {"note", report.verdict.note}};
    return out;
}

// --- text rendering ---

inline std::string render_text(const Lemma2Report& report) {
    std::string out;
    for (const auto& c : report.checks)
        out += "  " + std::string(c.pass ? "pass" : "FAIL") + "  " + c.name + ": " +
               std::to_string(c.lhs) + (c.inequality ? " >= " : " == ") + std::to_string(c.rhs) +
               "\n";
    out += report.all_pass() ? "all identities hold\n" : "IDENTITY FAILURE\n";
    return out;
}

inline std::string render_text(const NonnegativityReport& r) {
    std::string out = "nonnegativity (" + to_string(r.family) + ")\n";
    if (!r.preconditions_ok) {
        for (const auto& p : r.precondition_failures) out += "  precondition failed: " + p + "\n";
        return out;
    }
    out += "  H = " + to_string(r.h) + "\n";
    for (const auto& c : r.coefficients)
        out += "  " + std::string(c.pass ? "pass" : "FAIL") + "  " + c.origin + " = " +
               to_string(c.value) + " (required " + std::string(1, c.required) + ")\n";
    out += std::string("  support gcd 1: ") + (r.support_gcd_ok ? "yes" : "no") +
           ", >=2 positive: " + (r.two_positive ? "yes" : "no") +
           (r.degree1_special ? ", degree-1 special case" : "") + "\n";
    out += r.pass ? "  PASS\n" : "  FAIL\n";
    return out;
}

inline std::string render_text(const DifferenceReport& r) {
    std::string out = "difference identity (doubled coefficients)\n";
    out += "  H_full        = " + to_string(r.h_full) + "\n";
    out += "  2*H_reduced   = " + to_string(r.reduced_doubled) + "\n";
    out += "  2*difference  = " + to_string(r.difference_doubled) + "\n";
    out += std::string("  nonnegative: ") + (r.nonnegative ? "yes" : "NO") +
           ", vanishes: " + (r.vanishes ? "yes" : "no") +
           ", pi/4-free: " + (r.pi4_free ? "yes" : "no") + "\n";
    for (const auto& line : r.lines)
        out += "  t^" + std::to_string(line.power) + ": derived " +
               to_string(line.derived_doubled) + ", printed " + to_string(line.printed_doubled) +
               (line.suspect ? " [printed line inconsistent]" : "") +
               (line.agrees ? " (agrees)" : " (DISAGREES)") + "\n";
    return out;
}

inline std::string render_text(const GrowthReport& report) {
    std::string out;
    out += "input: " + report.input_kind + " (digest " + report.input_digest + ")\n";
    auto skipped = [&](const char* name) -> const std::string* {
        auto it = report.skipped.find(name);
        return it == report.skipped.end() ? nullptr : &it->second;
    };
    if (auto why = skipped("counts"))
        out += "counts: skipped (" + *why + ")\n";
    else {
        const CountVector& c = *report.counts;
        out += "counts: f=" + std::to_string(c.f) + " e=" + std::to_string(c.e) +
               " v=" + std::to_string(c.v) + " v2222=" + std::to_string(c.v2222) + "\n";
    }
    if (auto why = skipped("lemma2"))
        out += "lemma2: skipped (" + *why + ")\n";
    else
        out += "lemma2:\n" + render_text(*report.lemma2);
    out += "growth: (" + to_string(report.growth.numerator()) + ") / (" +
           to_string(report.growth.denominator()) + ")\n";
    out += "series:";
    for (const auto& a : report.series) out += " " + to_string(a);
    out += "\n";
    if (auto why = skipped("family"))
        out += "family: skipped (" + *why + ")\n";
    else
        out += "family: " + to_string(*report.family) + "\n";
    if (auto why = skipped("h"))
        out += "h: skipped (" + *why + ")\n";
    else
        out += "h: " + to_string(*report.h) + "\n";
    if (auto why = skipped("nonnegativity"))
        out += "nonnegativity: skipped (" + *why + ")\n";
    else
        out += render_text(*report.nonneg);
    if (auto why = skipped("rate"))
        out += "rate: skipped (" + *why + ")\n";
    else if (report.tau->exact)
        out += "rate: tau = " + to_string(report.tau->lo) + " (exact)\n";
    else
        out += "rate: tau in [" + to_string(report.tau->lo) + ", " + to_string(report.tau->hi) +
               "]\n";
    out += "perron: " + to_string(report.verdict.status) +
           (report.verdict.method.empty() ? "" : " via " + report.verdict.method) +
           (report.verdict.note.empty() ? "" : " (" + report.verdict.note + ")") + "\n";
    return out;
}

}  // namespace coxgrow

#endif
