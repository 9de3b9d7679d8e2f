#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dragonbound/catalog.hpp"
#include "dragonbound/cli.hpp"
#include "dragonbound/derive.hpp"
#include "dragonbound/svg.hpp"
#include "dragonbound/verify.hpp"

using namespace dragonbound;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bundled catalog entries are consistent") {
    const auto& records = bundled_catalog();
    REQUIRE(records.size() == 6);
    for (const SystemRecord& rec : records) {
        REQUIRE(rec.expected.has_value());
        CHECK(derive_boundary_system(rec.system) == *rec.expected);
    }
}

TEST_CASE("catalog file round trip") {
    std::string text;
    for (const SystemRecord& rec : bundled_catalog()) text += catalog_line(rec) + "\n";
    text += "# comment line\n\nnoexp\tA-B\n";

    std::istringstream in(text);
    const auto records = parse_catalog(in);
    REQUIRE(records.size() == 7);
    CHECK(records[0].name == "heighway");
    CHECK(records[0].system.production_a().str() == "A-B");
    CHECK(records[6].name == "noexp");
    CHECK(!records[6].expected.has_value());
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(records[i].system == bundled_catalog()[i].system);
        CHECK(records[i].expected == bundled_catalog()[i].expected);
    }

    std::istringstream bad("x\tA-B\textra\tfield");
    CHECK_THROWS_AS(parse_catalog(bad), word_error);
}

TEST_CASE("svg output is deterministic and carries the polylines") {
    const FoldingSystem sys = FoldingSystem::parse("A-B");
    const SvgOptions opts{10, true};
    const std::string a = render_svg(sys, 5, opts);
    const std::string b = render_svg(sys, 5, opts);
    CHECK(a == b);

    CHECK(a.find("stroke=\"black\"") != std::string::npos);
    CHECK(a.find("stroke=\"red\"") != std::string::npos);
    CHECK(a.find("stroke=\"blue\"") != std::string::npos);

    const std::string plain = render_svg(sys, 0, SvgOptions{10, false});
    CHECK(plain.find("stroke=\"black\"") != std::string::npos);
    CHECK(plain.find("stroke=\"red\"") == std::string::npos);

    // fold polyline at level 5 has 32 edges = 33 points
    const std::size_t start = a.find("points=\"");
    REQUIRE(start != std::string::npos);
    const std::size_t end = a.find('"', start + 8);
    const std::string pts = a.substr(start + 8, end - start - 8);
    CHECK(std::count(pts.begin(), pts.end(), ',') == 33);
}

TEST_CASE("cli derive") {
    const CliRun ok = run_cli({"derive", "--sigma", "A-B"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "L=Ll\nR=S\nl=S\nr=Rr\nS=Lr\ns=Rl\n");

    const CliRun t6 = run_cli({"derive", "--sigma", "B+A+B-A-B-A+B+A+B-A"});
    CHECK(t6.code == 0);
    CHECK(t6.out == "L=rLs\nR=rSRs\nl=slSL\nr=srL\nS=rSSL\ns=slRs\n");

    const CliRun parse = run_cli({"derive", "--sigma", "AB"});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("turn letter expected at position 2") != std::string::npos);

    const CliRun crossing = run_cli({"derive", "--sigma", "A+B+A+B+A"});
    CHECK(crossing.code == 3);

    const CliRun usage = run_cli({"derive"});
    CHECK(usage.code == 2);
}

TEST_CASE("cli render and caps") {
    const CliRun svg = run_cli({"render", "--sigma", "A-B", "--level", "3"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);

    const CliRun capped =
        run_cli({"render", "--sigma", "A-B", "--level", "12", "--cap", "100"});
    CHECK(capped.code == 4);
}

TEST_CASE("cli verify json round trips") {
    const CliRun run =
        run_cli({"verify", "--sigma", "A-B", "--max-level", "4", "--json"});
    CHECK(run.code == 0);

    const nlohmann::json doc = nlohmann::json::parse(run.out);
    CHECK(doc["system"] == "A-B");
    CHECK(doc["pass"] == true);
    REQUIRE(doc["levels"].size() == 5);
    for (unsigned n = 0; n < 5; ++n) {
        CHECK(doc["levels"][n]["system"] == "A-B");
        CHECK(doc["levels"][n]["level"] == n);
        CHECK(doc["levels"][n]["pass"] == true);
    }

    // the matrix survives a round trip through the text form
    const nlohmann::json again = nlohmann::json::parse(doc.dump());
    CHECK(again == doc);

    // and agrees with the in-process sweep
    const FoldingSystem sys = FoldingSystem::parse("A-B");
    const SweepResult sweep = verify_sweep(sys, derive_boundary_system(sys), 4);
    for (unsigned n = 0; n < 5; ++n) {
        CHECK(doc["levels"][n]["pass"] == sweep.levels[n].pass);
        CHECK(doc["levels"][n]["segments"] == sweep.levels[n].segments);
    }
}

TEST_CASE("cli catalog") {
    const CliRun bundled = run_cli({"catalog", "--max-level", "2"});
    CHECK(bundled.code == 0);
    CHECK(bundled.out.find("6 systems, all passed") != std::string::npos);

    // empty catalog: zero systems, clean exit
    const std::string empty_path = "/tmp/dragonbound_empty_catalog.txt";
    { std::ofstream(empty_path).flush(); }
    const CliRun empty = run_cli({"catalog", "--file", empty_path, "--max-level", "2"});
    CHECK(empty.code == 0);
    CHECK(empty.out.find("0 systems") != std::string::npos);

    // a wrong expected system is reported as a mismatch
    const std::string bad_path = "/tmp/dragonbound_bad_catalog.txt";
    {
        std::ofstream f(bad_path);
        f << "wrong\tA-B\tL=Ll,R=S,l=S,r=Rr,S=Lr,s=Lr\n";
    }
    const CliRun bad = run_cli({"catalog", "--file", bad_path, "--max-level", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);
}
