#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hyp3/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hyp3verify - verification suites for the hyp3 hyperbolic-geometry library"};

    std::string suite;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 42;
    int trials = 0;
    double tol = 0.0;
    bool serial = false;
    std::vector<std::string> kv;

    std::string names;
    for (const auto& n : hyp3::suite_names()) names += (names.empty() ? "" : ", ") + n;

    app.add_option("--suite", suite, "suite to run (" + names + ")")->required();
    app.add_option("--seed", seed, "random seed (default 42)");
    app.add_option("--trials", trials, "trial count override (0 = suite default)");
    app.add_option("--tol", tol, "tolerance override, forwarded as param 'tol'");
    app.add_option("--out", out_path, "write the report to this path instead of stdout");
    app.add_option("--format", format, "output format: json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--serial", serial, "run the serial reference path instead of OpenMP");
    app.add_option("--param", kv, "suite parameter override as key=value (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    hyp3::SuiteOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    opt.parallel = !serial;
    if (tol > 0.0) opt.params["tol"] = tol;
    for (const auto& item : kv) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            std::cerr << "bad --param (expected key=value): " << item << "\n";
            return 2;
        }
        try {
            opt.params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (...) {
            std::cerr << "bad --param value: " << item << "\n";
            return 2;
        }
    }

    hyp3::Report rep;
    try {
        rep = hyp3::run_suite(suite, opt);
    } catch (const hyp3::GeomError& e) {
        if (e.kind == hyp3::GeomError::Kind::UnknownSuite ||
            e.kind == hyp3::GeomError::Kind::BadParams) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }

    std::string payload = format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        os << payload;
    }
    return rep.fail_count() == 0 ? 0 : 1;
}
