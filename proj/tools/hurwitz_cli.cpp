// hurwitz verify [suite...] [--seed N] [--precision D] [--skip-heavy] [--report PATH] [--format text|structured]
// hurwitz dump NAME [--out PATH]
//
// Exit codes: 0 all checks pass (or are documented discrepancies), 1 a check failed,
// 2 usage or configuration error.

#include "hurwitz/dump.hpp"
#include "hurwitz/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_usage = 2;

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the PSL(2,13) invariant-theory identities"};
    app.require_subcommand(1);

    hurwitz::RunConfig cfg;
    std::vector<std::string> suites;
    std::string report_path, format = "text";
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suites", suites, "suites to run (default: all)");
    verify->add_option("--seed", cfg.seed, "seed for randomized point checks");
    verify->add_option("--precision", cfg.precision, "decimal digits for numeric embeddings");
    verify->add_flag("--skip-heavy", cfg.skip_heavy, "skip the 1092-element closure and the degree-12 expansions");
    verify->add_option("--report", report_path, "write the structured report to PATH");
    verify->add_option("--format", format, "stdout format")->check(CLI::IsMember({"text", "structured"}));
    verify->add_flag("--no-timing", no_timing, "omit elapsed times from structured output");

    std::string name, out_path;
    auto* dump = app.add_subcommand("dump", "print a catalogued matrix, form or constant exactly");
    dump->add_option("name", name, "object name (use 'list' for all names)")->required();
    dump->add_option("--out", out_path, "write to PATH instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    if (*dump) {
        hurwitz::set_working_precision(hurwitz::default_digits);
        std::string text;
        try {
            if (name == "list") {
                for (const auto& n : hurwitz::dump_names()) text += n + "\n";
            } else {
                text = hurwitz::dump_object(name);
            }
        } catch (const hurwitz::Error& e) {
            std::cerr << "dump: " << e.what() << "\n";
            return exit_usage;
        }
        if (out_path.empty()) {
            std::cout << text;
        } else if (!write_file(out_path, text)) {
            std::cerr << "dump: cannot write " << out_path << "\n";
            return exit_usage;
        }
        return exit_ok;
    }

    if (!suites.empty()) cfg.suites = suites;
    hurwitz::RunResult rr;
    try {
        rr = hurwitz::run(cfg);
    } catch (const hurwitz::ConfigError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return exit_usage;
    }

    if (format == "structured")
        std::cout << hurwitz::emit_structured(rr, !no_timing);
    else
        std::cout << hurwitz::emit_text(rr);
    if (!report_path.empty() && !write_file(report_path, hurwitz::emit_structured(rr, !no_timing))) {
        std::cerr << "verify: cannot write " << report_path << "\n";
        return exit_usage;
    }
    return rr.ok() ? exit_ok : exit_check_failure;
}
