#pragma once
// Verification records and their text / JSON serializations.

#include "error.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hurwitz {

enum class Status { pass, fail, discrepancy, skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::discrepancy: return "discrepancy-documented";
        case Status::skipped: return "skipped";
    }
    return "?";
}

inline Status parse_status(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "discrepancy-documented") return Status::discrepancy;
    if (s == "skipped") return Status::skipped;
    throw ParseError("unknown status '" + s + "'");
}

struct Check {
    std::string id;
    std::string paper_ref;
    Status status = Status::pass;
    std::string witness;
    double elapsed_ms = 0;

    bool operator==(const Check&) const = default;
};

// Collects checks for one suite. `run` times a predicate and records its result;
// exceptions thrown by the predicate become failures with the message as witness.
class Report {
public:
    std::string suite;
    std::vector<Check> checks;

    Report() = default;
    explicit Report(std::string s) : suite(std::move(s)) {}

    Check& add(std::string id, std::string ref, Status st, std::string witness = {}, double ms = 0) {
        checks.push_back({std::move(id), std::move(ref), st, std::move(witness), ms});
        return checks.back();
    }
    Check& expect(std::string id, std::string ref, bool ok, std::string witness = {}) {
        return add(std::move(id), std::move(ref), ok ? Status::pass : Status::fail, std::move(witness));
    }

    // fn returns true on success and may fill the witness string
    Check& run(std::string id, std::string ref, const std::function<bool(std::string&)>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        std::string w;
        Status st;
        try {
            st = fn(w) ? Status::pass : Status::fail;
        } catch (const std::exception& e) {
            st = Status::fail;
            w = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return add(std::move(id), std::move(ref), st, std::move(w), ms);
    }

    // like run, but a false result is a documented discrepancy with a printed table
    Check& compare_printed(std::string id, std::string ref, const std::function<bool(std::string&)>& fn) {
        Check& c = run(std::move(id), std::move(ref), fn);
        if (c.status == Status::fail && c.witness.rfind("exception", 0) != 0) c.status = Status::discrepancy;
        return c;
    }

    void skip(std::string id, std::string ref, std::string why) {
        add(std::move(id), std::move(ref), Status::skipped, std::move(why));
    }

    void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

    void sort_by_id() {
        std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    }

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
    }
    bool ok() const { return count(Status::fail) == 0; }

    const Check* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }

    // duplicate ids, if any
    std::vector<std::string> duplicate_ids() const {
        std::set<std::string> seen;
        std::vector<std::string> dup;
        for (const auto& c : checks)
            if (!seen.insert(c.id).second) dup.push_back(c.id);
        return dup;
    }

    bool operator==(const Report&) const = default;
};

// A full run: one report per suite, in a fixed order.
struct RunResult {
    std::vector<Report> suites;
    std::map<std::string, std::string> config;

    bool ok() const {
        for (const auto& r : suites)
            if (!r.ok()) return false;
        return true;
    }
    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& r : suites) n += r.checks.size();
        return n;
    }
    std::size_t count(Status s) const {
        std::size_t n = 0;
        for (const auto& r : suites) n += r.count(s);
        return n;
    }
    bool operator==(const RunResult&) const = default;
};

inline constexpr int report_schema_version = 1;

inline nlohmann::ordered_json to_json(const Report& r, bool timing = true) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["paper_ref"] = c.paper_ref;
        cj["status"] = status_name(c.status);
        cj["witness"] = c.witness;
        if (timing) cj["elapsed_ms"] = c.elapsed_ms;
        j["checks"].push_back(std::move(cj));
    }
    return j;
}

inline nlohmann::ordered_json to_json(const RunResult& rr, bool timing = true) {
    nlohmann::ordered_json j;
    j["schema"] = report_schema_version;
    j["config"] = rr.config;
    j["ok"] = rr.ok();
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : rr.suites) j["suites"].push_back(to_json(r, timing));
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report r(j.at("suite").get<std::string>());
    for (const auto& cj : j.at("checks")) {
        Check c;
        c.id = cj.at("id").get<std::string>();
        c.paper_ref = cj.at("paper_ref").get<std::string>();
        c.status = parse_status(cj.at("status").get<std::string>());
        c.witness = cj.value("witness", std::string());
        c.elapsed_ms = cj.value("elapsed_ms", 0.0);
        r.checks.push_back(std::move(c));
    }
    return r;
}

inline RunResult run_from_json(const nlohmann::json& j) {
    if (j.value("schema", 0) != report_schema_version) throw ParseError("unsupported report schema");
    RunResult rr;
    if (j.contains("config")) rr.config = j.at("config").get<std::map<std::string, std::string>>();
    for (const auto& s : j.at("suites")) rr.suites.push_back(report_from_json(s));
    return rr;
}

inline std::string emit_structured(const RunResult& rr, bool timing = true) { return to_json(rr, timing).dump(2) + "\n"; }

inline RunResult parse_structured(const std::string& text) {
    try {
        return run_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad report: ") + e.what());
    }
}

inline std::string emit_text(const RunResult& rr) {
    std::ostringstream os;
    for (const auto& r : rr.suites) {
        os << "== " << r.suite << " (" << r.checks.size() << " checks)\n";
        for (const auto& c : r.checks) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%9.1f ms", c.elapsed_ms);
            os << "  " << std::string(status_name(c.status)) << std::string(24 - std::string(status_name(c.status)).size(), ' ')
               << c.id << "  [" << c.paper_ref << "]  " << buf << "\n";
            if (c.status != Status::pass && !c.witness.empty()) {
                std::istringstream ws(c.witness);
                std::string line;
                while (std::getline(ws, line)) os << "      " << line << "\n";
            }
        }
    }
    os << "total " << rr.total() << ": " << rr.count(Status::pass) << " pass, " << rr.count(Status::fail) << " fail, "
       << rr.count(Status::discrepancy) << " discrepancy-documented, " << rr.count(Status::skipped) << " skipped\n";
    return os.str();
}

}  // namespace hurwitz
