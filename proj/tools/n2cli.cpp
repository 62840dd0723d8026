#include "n2alg/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using namespace n2alg;

std::optional<Sector> sector_from_name(const std::string& s) {
    if (s == "n2-ramond") return Sector::N2Ramond;
    if (s == "n2-ns") return Sector::N2NeveuSchwarz;
    if (s == "n1-ramond") return Sector::N1Ramond;
    if (s == "n1-ns") return Sector::N1NeveuSchwarz;
    return std::nullopt;
}

std::vector<Sector> all_sectors() {
    return {Sector::N2Ramond, Sector::N2NeveuSchwarz, Sector::N1Ramond,
            Sector::N1NeveuSchwarz};
}

struct Options {
    std::string sector;
    std::string family;
    std::string a = "0", b = "0", c = "0";
    std::string window = "-8:8";
    int maxidx = 3;
    int depth = 6;
    bool json = false;
    unsigned seed = 12345;
};

bool parse_window(const std::string& s, int& lo, int& hi) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stoi(s.substr(0, colon));
        hi = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::optional<ModuleSpec> build_spec(const Options& opt) {
    auto fam = family_from_name(opt.family);
    if (!fam) return std::nullopt;
    auto a = parse_rational(opt.a);
    auto b = parse_rational(opt.b);
    auto c = parse_rational(opt.c);
    if (!a || !b || !c) return std::nullopt;
    return ModuleSpec::concrete(*fam, *a, *b, *c);
}

int emit(const std::vector<CheckResult>& results, bool json) {
    if (json) std::cout << to_json(results) << "\n";
    else std::cout << to_text(results);
    for (const auto& r : results)
        if (!r.ok()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification tool for the two-supercurrent superconformal "
                 "algebras and their weight modules"};
    app.require_subcommand(1);
    Options opt;

    std::string target;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("target", target, "algebra | modules | lemmas | embedding")
        ->required();
    verify->add_option("--sector", opt.sector, "restrict to one sector");
    verify->add_option("--max-index", opt.maxidx, "index sweep bound");
    verify->add_flag("--json", opt.json, "machine-readable output");
    verify->add_option("--seed", opt.seed, "seed for randomized sweeps");

    auto add_module_flags = [&opt](CLI::App* cmd) {
        cmd->add_option("--family", opt.family, "a | at | rab | rabc")->required();
        cmd->add_option("--a", opt.a, "parameter a, exact rational string");
        cmd->add_option("--b", opt.b, "parameter b, exact rational string");
        cmd->add_option("--c", opt.c, "parameter c, exact rational string");
        cmd->add_option("--window", opt.window, "label window LO:HI");
        cmd->add_option("--max-index", opt.maxidx, "generator index bound");
        cmd->add_flag("--json", opt.json, "machine-readable output");
        cmd->add_option("--seed", opt.seed, "seed for subspace search");
    };
    auto* classify = app.add_subcommand("classify", "simplicity verdict with witnesses");
    add_module_flags(classify);
    auto* submodules =
        app.add_subcommand("submodules", "invariant subspace search on a window");
    add_module_flags(submodules);
    auto* intertwine =
        app.add_subcommand("intertwine", "shift, parity and sub-quotient intertwiners");
    add_module_flags(intertwine);

    auto* character = app.add_subcommand("character", "weight-space dimensions vs series");
    character->add_option("--sector", opt.sector, "sector name");
    character->add_option("--depth", opt.depth, "maximum level (capped at 12)");
    character->add_flag("--json", opt.json, "machine-readable output");

    auto* report = app.add_subcommand("report", "run every suite and emit one report");
    report->add_option("--max-index", opt.maxidx, "index sweep bound");
    report->add_option("--depth", opt.depth, "character depth");
    report->add_flag("--json", opt.json, "machine-readable output");
    report->add_option("--seed", opt.seed, "seed for subspace search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::vector<Sector> sectors;
    if (!opt.sector.empty()) {
        auto s = sector_from_name(opt.sector);
        if (!s) return usage_error("unknown sector: " + opt.sector);
        sectors = {*s};
    } else {
        sectors = all_sectors();
    }
    int lo, hi;
    if (!parse_window(opt.window, lo, hi)) return usage_error("bad window: " + opt.window);

    std::vector<CheckResult> results;
    try {
        if (verify->parsed()) {
            if (target == "algebra") {
                for (Sector s : sectors) {
                    auto rs = suite_algebra(s, opt.maxidx);
                    results.insert(results.end(), rs.begin(), rs.end());
                }
            } else if (target == "modules") {
                results = suite_modules();
            } else if (target == "lemmas") {
                results = suite_identities();
            } else if (target == "embedding") {
                for (Sector s : sectors) {
                    if (!is_n2(s)) continue;  // the embedding lives inside N=2
                    auto rs = suite_embedding(s, opt.maxidx);
                    results.insert(results.end(), rs.begin(), rs.end());
                }
                if (results.empty())
                    return usage_error("embedding requires an N=2 sector");
            } else {
                return usage_error("unknown verify target: " + target);
            }
        } else if (classify->parsed() || submodules->parsed() || intertwine->parsed()) {
            auto spec = build_spec(opt);
            if (!spec) return usage_error("bad family or malformed rational parameter");
            if (classify->parsed())
                results = {run_classify(*spec, lo, hi, opt.maxidx, opt.seed)};
            else if (submodules->parsed())
                results = {run_submodules(*spec, lo, hi, opt.maxidx, opt.seed)};
            else
                results = run_intertwine(*spec, lo, hi, opt.maxidx, opt.seed);
        } else if (character->parsed()) {
            if (opt.depth < 0 || opt.depth > 12)
                return usage_error("depth must be between 0 and 12");
            for (Sector s : sectors) results.push_back(run_character(s, opt.depth));
        } else if (report->parsed()) {
            for (Sector s : all_sectors()) {
                auto rs = suite_algebra(s, opt.maxidx);
                results.insert(results.end(), rs.begin(), rs.end());
            }
            auto ms = suite_modules();
            results.insert(results.end(), ms.begin(), ms.end());
            auto is = suite_identities();
            results.insert(results.end(), is.begin(), is.end());
            for (Sector s : {Sector::N2Ramond, Sector::N2NeveuSchwarz}) {
                auto es = suite_embedding(s, opt.maxidx);
                results.insert(results.end(), es.begin(), es.end());
            }
            for (Sector s : all_sectors())
                results.push_back(run_character(s, opt.depth));
        }
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return emit(results, opt.json);
}
