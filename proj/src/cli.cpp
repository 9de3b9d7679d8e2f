#include "dragonbound/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dragonbound/catalog.hpp"
#include "dragonbound/derive.hpp"
#include "dragonbound/svg.hpp"
#include "dragonbound/verify.hpp"

namespace dragonbound {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidCurve = 3;
constexpr int kExitCap = 4;

void print_productions(std::ostream& out, const BoundarySystem& tau) {
    for (std::size_t i = 0; i < BoundarySystem::kProductions; ++i)
        out << BoundarySystem::key_char(i) << '=' << tau.production(i).str() << '\n';
}

ordered_json level_json(const std::string& system, const VerifyReport& rep) {
    ordered_json j;
    j["system"] = system;
    j["level"] = rep.level;
    j["pass"] = rep.pass;
    j["segments"] = rep.segments;
    if (!rep.pass) {
        j["detail"] = rep.failure;
        if (rep.mismatch) {
            j["mismatch"] = {{"x1", rep.mismatch->a.x},
                             {"y1", rep.mismatch->a.y},
                             {"x2", rep.mismatch->b.x},
                             {"y2", rep.mismatch->b.y}};
        }
    }
    return j;
}

void print_sweep_text(std::ostream& out, const SweepResult& sweep) {
    for (const VerifyReport& rep : sweep.levels) {
        out << "level " << rep.level << ": ";
        if (rep.pass)
            out << "PASS (cells=" << rep.cells << ", segments=" << rep.segments << ")\n";
        else
            out << "FAIL (" << rep.failure << ")\n";
    }
    if (sweep.capped)
        out << "stopped at level " << sweep.last_level << " (letter cap)\n";
}

int run_derive(std::ostream& out, const std::string& sigma) {
    const BoundarySystem tau = derive_boundary_system(FoldingSystem::parse(sigma));
    print_productions(out, tau);
    return kExitOk;
}

int run_render(std::ostream& out, const std::string& sigma, unsigned level,
               const SvgOptions& opts, const std::string& out_path, std::uint64_t cap) {
    const std::string doc = render_svg(FoldingSystem::parse(sigma), level, opts, cap);
    if (out_path.empty()) {
        out << doc;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << doc;
    }
    return kExitOk;
}

int run_verify(std::ostream& out, const std::string& sigma, unsigned max_level, bool json,
               std::uint64_t cap) {
    const FoldingSystem sys = FoldingSystem::parse(sigma);
    const BoundarySystem tau = derive_boundary_system(sys);
    const SweepResult sweep = verify_sweep(sys, tau, max_level, cap);
    if (json) {
        ordered_json doc;
        doc["system"] = sigma;
        doc["levels"] = ordered_json::array();
        for (const VerifyReport& rep : sweep.levels)
            doc["levels"].push_back(level_json(sigma, rep));
        doc["pass"] = sweep.all_pass;
        doc["capped"] = sweep.capped;
        out << doc.dump(2) << '\n';
    } else {
        print_sweep_text(out, sweep);
        out << (sweep.all_pass ? "all levels passed\n" : "verification FAILED\n");
    }
    return sweep.all_pass ? kExitOk : kExitCheckFailed;
}

int run_catalog(std::ostream& out, const std::string& file, unsigned max_level, bool json,
                std::uint64_t cap) {
    std::vector<SystemRecord> records;
    if (file.empty()) {
        records = bundled_catalog();
    } else {
        std::ifstream f(file);
        if (!f) throw std::runtime_error("cannot open catalog file: " + file);
        records = parse_catalog(f);
    }

    bool all_ok = true;
    ordered_json doc = ordered_json::array();
    for (const SystemRecord& rec : records) {
        std::string tau_status = "derived";
        bool ok = true;
        SweepResult sweep;
        std::string error;
        try {
            const BoundarySystem tau = derive_boundary_system(rec.system);
            if (rec.expected) {
                if (tau == *rec.expected) {
                    tau_status = "matches expected";
                } else {
                    tau_status = "MISMATCH: derived " + tau.str() + " but expected " +
                                 rec.expected->str();
                    ok = false;
                }
            }
            sweep = verify_sweep(rec.system, tau, max_level, cap);
            if (!sweep.all_pass) ok = false;
        } catch (const std::exception& e) {
            error = e.what();
            ok = false;
        }
        all_ok = all_ok && ok;

        if (json) {
            ordered_json entry;
            entry["system"] = rec.system.production_a().str();
            entry["name"] = rec.name;
            entry["tau"] = tau_status;
            entry["pass"] = ok;
            if (!error.empty()) entry["error"] = error;
            entry["levels"] = ordered_json::array();
            for (const VerifyReport& rep : sweep.levels)
                entry["levels"].push_back(level_json(rec.system.production_a().str(), rep));
            doc.push_back(entry);
        } else {
            out << rec.name << " (" << rec.system.production_a().str() << "): ";
            if (!error.empty()) {
                out << "ERROR " << error << '\n';
            } else {
                out << "tau " << tau_status << "; verify 0.." << sweep.last_level << ' '
                    << (sweep.all_pass ? "PASS" : "FAIL") << '\n';
                if (!sweep.all_pass) print_sweep_text(out, sweep);
            }
        }
    }
    if (json)
        out << doc.dump(2) << '\n';
    else
        out << records.size() << " systems, " << (all_ok ? "all passed" : "FAILURES above")
            << '\n';
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundary L-systems for square-grid plane-filling folding curves"};
    app.require_subcommand(1);

    std::string sigma;
    std::string out_path;
    std::string catalog_file;
    unsigned level = 0;
    unsigned max_level = 8;
    std::uint64_t cap = kDefaultCap;
    bool with_boundary = false;
    bool json = false;
    int scale = 10;

    auto* derive = app.add_subcommand("derive", "Derive the boundary L-system of sigma(A)");
    derive->add_option("--sigma", sigma, "sigma(A) over A,B,+,-")->required();

    auto* render = app.add_subcommand("render", "Render the level-n curve as SVG");
    render->add_option("--sigma", sigma, "sigma(A) over A,B,+,-")->required();
    render->add_option("--level", level, "expansion level")->required();
    render->add_flag("--with-boundary", with_boundary, "draw both boundary curves");
    render->add_option("--scale", scale, "pixels per half unit (default 10)");
    render->add_option("--out", out_path, "output file (default stdout)");
    render->add_option("--cap", cap, "letter cap (default 1000000)");

    auto* verify = app.add_subcommand(
        "verify", "Check derived boundary words against the region boundary");
    verify->add_option("--sigma", sigma, "sigma(A) over A,B,+,-")->required();
    verify->add_option("--max-level", max_level, "highest level to check (default 8)");
    verify->add_flag("--json", json, "machine-readable summary");
    verify->add_option("--cap", cap, "letter cap (default 1000000)");

    auto* catalog =
        app.add_subcommand("catalog", "Derive and verify a catalog of folding systems");
    catalog->add_option("--file", catalog_file,
                        "catalog file (name<TAB>sigma[<TAB>productions]); "
                        "defaults to the bundled curves");
    catalog->add_option("--max-level", max_level, "highest level to check (default 8)");
    catalog->add_flag("--json", json, "machine-readable summary");
    catalog->add_option("--cap", cap, "letter cap (default 1000000)");

    std::vector<const char*> argv;
    argv.push_back("dragonbound");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (app.got_subcommand(derive)) return run_derive(out, sigma);
        if (app.got_subcommand(render))
            return run_render(out, sigma, level, SvgOptions{scale, with_boundary}, out_path,
                              cap);
        if (app.got_subcommand(verify)) return run_verify(out, sigma, max_level, json, cap);
        return run_catalog(out, catalog_file, max_level, json, cap);
    } catch (const cap_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const curve_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidCurve;
    } catch (const word_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
}

}  // namespace dragonbound
