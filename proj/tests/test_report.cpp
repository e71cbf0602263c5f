#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxgrow/report.hpp"

using namespace coxgrow;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fixture_path(const std::string& name) {
    return std::string(COXGROW_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI named by COXGROW_BIN; returns exit code and captured stdout.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("COXGROW_BIN");
    REQUIRE(bin != nullptr);
    RunResult result;
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char chunk[4096];
    std::size_t got;
    while ((got = fread(chunk, 1, sizeof(chunk), pipe)) > 0) result.out.append(chunk, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

// tetrahedron-like scheme with a (2,3,7) vertex: parses, but the angle sum
// at vertex {a,b,c} is below pi
const char* kBadVertexDoc = R"({
  "facets": ["a", "b", "c", "d"],
  "edges": [
    {"facets": ["a", "b"], "m": 2},
    {"facets": ["b", "c"], "m": 3},
    {"facets": ["a", "c"], "m": 7},
    {"facets": ["a", "d"], "m": 2},
    {"facets": ["b", "d"], "m": 2},
    {"facets": ["c", "d"], "m": 2}
  ],
  "vertices": [
    ["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]
  ],
  "noncompact": false
})";

// direct product of two (2,3,7) triangle groups: the dominant denominator
// root is a double root, so Perron certification must refuse
const char* kProductMatrixDoc = R"({
  "rank": 6,
  "orders": [
    [1, 2, 7, 2, 2, 2],
    [2, 1, 3, 2, 2, 2],
    [7, 3, 1, 2, 2, 2],
    [2, 2, 2, 1, 2, 7],
    [2, 2, 2, 2, 1, 3],
    [2, 2, 2, 7, 3, 1]
  ]
})";

}  // namespace

TEST_CASE("digest_bytes is the 64-bit FNV-1a in hex") {
    CHECK(digest_bytes("") == "cbf29ce484222325");
    CHECK(digest_bytes("a") != digest_bytes("b"));
    CHECK(digest_bytes("coxgrow") == digest_bytes("coxgrow"));
}

TEST_CASE("octahedron report carries the full pipeline") {
    std::string bytes = slurp(fixture_path("octahedron.json"));
    auto doc = nlohmann::json::parse(bytes);
    GrowthReport report = build_growth_report(doc, bytes, false, 12, 128);

    CHECK(report.input_kind == "polyhedron");
    CHECK(report.input_digest == digest_bytes(bytes));
    REQUIRE(report.counts.has_value());
    CHECK(report.counts->f == 8);
    REQUIRE(report.lemma2.has_value());
    CHECK(report.lemma2->all_pass());
    REQUIRE(report.family.has_value());
    CHECK(*report.family == HFamilyTag::H2);
    REQUIRE(report.h.has_value());
    CHECK(to_text(*report.h) == "5t^2+4t-1");
    REQUIRE(report.nonneg.has_value());
    CHECK(report.nonneg->pass);
    REQUIRE(report.tau.has_value());
    CHECK(report.tau->exact);
    CHECK(report.tau->lo == 5);
    CHECK(report.verdict.status == PerronStatus::Perron);
    CHECK(report.verdict.method == "Prop1");
    CHECK(report.skipped.empty());

    REQUIRE(report.series.size() == 12);
    CHECK(report.series[0] == 1);
    CHECK(report.series[1] == 8);   // one word per generator
    CHECK(report.series[2] == 44);
}

TEST_CASE("matrix input skips the polyhedral stages with reasons") {
    std::string bytes = slurp(fixture_path("matrix-b3.json"));
    auto doc = nlohmann::json::parse(bytes);
    GrowthReport report = build_growth_report(doc, bytes, true, 50, 128);

    CHECK(report.input_kind == "matrix");
    CHECK(!report.counts.has_value());
    CHECK(!report.family.has_value());
    for (const char* field : {"counts", "lemma2", "family", "h", "nonnegativity", "rate"})
        CHECK(report.skipped.count(field) == 1);
    CHECK(report.verdict.status == PerronStatus::NotApplicable);
    CHECK(!report.tau.has_value());

    // finite group: the series is the Poincare polynomial padded with zeros
    Integer total = 0;
    for (const auto& a : report.series) total += a;
    CHECK(total == 48);
    CHECK(report.series[10] == 0);
}

TEST_CASE("rendering is deterministic for fixed bytes") {
    std::string bytes = slurp(fixture_path("pyramid-h2356.json"));
    auto doc = nlohmann::json::parse(bytes);
    GrowthReport a = build_growth_report(doc, bytes, false, 20, 128);
    GrowthReport b = build_growth_report(doc, bytes, false, 20, 128);
    CHECK(render_json(a).dump(2) == render_json(b).dump(2));
    CHECK(render_text(a) == render_text(b));
    CHECK(render_text(a).find(a.input_digest) != std::string::npos);
}

TEST_CASE("cli: growth report is byte-stable and exits 0") {
    std::string args = "growth " + fixture_path("octahedron.json") + " --format json";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    auto doc = nlohmann::json::parse(first.out);
    CHECK(doc.at("input").at("digest") == digest_bytes(slurp(fixture_path("octahedron.json"))));
    CHECK(doc.at("perron").at("status") == "Perron");
    CHECK(doc.at("rate").at("exact") == true);
}

TEST_CASE("cli: exit codes distinguish input, validation, and certification") {
    CHECK(run_cli("growth /nonexistent/nope.json").exit_code == 1);
    CHECK(run_cli("growth " + fixture_path("octahedron.json") + " --format yaml").exit_code == 1);

    auto bad = write_temp("coxgrow-bad-vertex.json", kBadVertexDoc);
    CHECK(run_cli("growth " + bad.string()).exit_code == 2);
    CHECK(run_cli("check " + bad.string()).exit_code == 2);

    auto product = write_temp("coxgrow-product-matrix.json", kProductMatrixDoc);
    RunResult perron = run_cli("perron " + product.string());
    CHECK(perron.exit_code == 3);
}

TEST_CASE("cli: subcommand smoke") {
    CHECK(run_cli("check " + fixture_path("prism-h236.json")).exit_code == 0);
    CHECK(run_cli("h-verify " + fixture_path("pyramid-h25.json")).exit_code == 0);
    CHECK(run_cli("roots " + fixture_path("octahedron.json")).exit_code == 0);
    CHECK(run_cli("perron " + fixture_path("matrix-b3.json")).exit_code == 0);

    RunResult solomon = run_cli("solomon --type A2");
    CHECK(solomon.exit_code == 0);
    CHECK(solomon.out.find("t^3+2t^2+2t+1") != std::string::npos);

    CHECK(run_cli("oracle --type B3").exit_code == 0);
    CHECK(run_cli("sample H23 --seed 5 -n 3").exit_code == 0);
}

TEST_CASE("cli: batch mode writes a report next to each input") {
    auto dir = std::filesystem::temp_directory_path() / "coxgrow-batch";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(fixture_path("octahedron.json"), dir / "octahedron.json");

    RunResult batch = run_cli("growth --input-dir " + dir.string() + " --format json");
    CHECK(batch.exit_code == 0);
    REQUIRE(std::filesystem::exists(dir / "octahedron.report.json"));
    auto doc = nlohmann::json::parse(slurp((dir / "octahedron.report.json").string()));
    CHECK(doc.at("perron").at("status") == "Perron");
}
