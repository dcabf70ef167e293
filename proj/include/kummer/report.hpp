#pragma once

#include "kummer/scalar.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

inline std::string bool_str(bool v) { return v ? "true" : "false"; }

struct CaseRecord {
    std::string identifier;
    std::string anchor;  // what identity or table the case checks
    std::string expected;
    std::string actual;
    std::string status;  // pass, fail, skipped
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<CaseRecord> cases;

    int count(const std::string& status) const {
        int k = 0;
        for (const auto& c : cases) {
            if (c.status == status) {
                ++k;
            }
        }
        return k;
    }
    int failures() const { return count("fail"); }

    void sort_cases() {
        std::sort(cases.begin(), cases.end(),
                  [](const CaseRecord& x, const CaseRecord& y) {
                      return x.identifier < y.identifier;
                  });
    }
};

// Outcome of one case body: the case passes when the two strings agree.
struct CaseOutcome {
    std::string expected;
    std::string actual;
};

inline CaseOutcome outcome_bool(bool got) { return {"true", bool_str(got)}; }

// Collects case records for a suite, applying the identifier filter before
// a case body runs; exceptions become failures carrying the message.
struct CaseSink {
    std::string filter;
    std::vector<CaseRecord> cases;

    bool selected(const std::string& identifier) const {
        return filter.empty() || identifier.find(filter) != std::string::npos;
    }

    template <class F>
    void run(std::string identifier, std::string anchor, F&& body) {
        if (!selected(identifier)) {
            return;
        }
        CaseRecord c{std::move(identifier), std::move(anchor), "", "", "fail"};
        try {
            CaseOutcome o = body();
            c.expected = std::move(o.expected);
            c.actual = std::move(o.actual);
            c.status = (c.expected == c.actual) ? "pass" : "fail";
        } catch (const std::exception& e) {
            c.expected = "completed check";
            c.actual = std::string("exception: ") + e.what();
        }
        cases.push_back(std::move(c));
    }

    void skip(std::string identifier, std::string anchor, std::string reason) {
        if (!selected(identifier)) {
            return;
        }
        cases.push_back(
            {std::move(identifier), std::move(anchor), std::move(reason), "", "skipped"});
    }
};

// Machine report.  The elapsed-ms field is pinned to zero so that reports
// for the same suite and seed are byte-identical across runs; wall time is
// carried on the text rendering instead.
inline std::string report_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["elapsed-ms"] = 0;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json jc;
        jc["identifier"] = c.identifier;
        jc["anchor"] = c.anchor;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["status"] = c.status;
        j["cases"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

inline std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite: " << r.suite << "\n";
    os << "seed: " << r.seed << "\n";
    os << "elapsed: " << r.elapsed_ms << " ms\n";
    os << "cases: " << r.cases.size() << " (" << r.count("pass") << " pass, "
       << r.failures() << " fail, " << r.count("skipped") << " skipped)\n";
    for (const auto& c : r.cases) {
        os << "  [" << c.status << "] " << c.identifier << " -- " << c.anchor << "\n";
        if (c.status == "fail") {
            os << "      expected: " << c.expected << "\n";
            os << "      actual:   " << c.actual << "\n";
        }
    }
    return os.str();
}

}  // namespace kummer
