#include "kummer/suites.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

namespace {

bool parse_range(const std::string& text, long long& lo, long long& hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
        return false;
    }
    try {
        lo = std::stoll(text.substr(0, colon));
        hi = std::stoll(text.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic verification suites for the Kummer-type ring"};

    std::string suite = "all";
    int n = 0;
    std::string e_range;
    std::uint64_t seed = 20260801;
    std::string format = "text";
    std::string cases;
    std::string out_path;

    app.add_option("--suite", suite, "Suite to run")
        ->check(CLI::IsMember(kummer::suite_names()));
    app.add_option("--n", n, "Restrict sweeps to one dimension parameter");
    app.add_option("--e-range", e_range, "Degree range lo:hi for the divisor tables");
    app.add_option("--seed", seed, "Seed for the randomized cases");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cases", cases, "Run only cases whose identifier contains this text");
    app.add_option("--out", out_path, "Also write the report to this file");

    CLI11_PARSE(app, argc, argv);

    kummer::SuiteOptions opts;
    opts.seed = seed;
    opts.n = n;
    opts.case_filter = cases;
    if (!e_range.empty() && !parse_range(e_range, opts.e_lo, opts.e_hi)) {
        std::cerr << "invalid --e-range, expected lo:hi with 1 <= lo <= hi\n";
        return 2;
    }

    kummer::SuiteReport report;
    try {
        report = kummer::run_suite(suite, opts);
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    }

    std::string rendered = (format == "json") ? kummer::report_json(report)
                                              : kummer::report_text(report);
    std::cout << rendered;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return report.failures() == 0 ? 0 : 1;
}
