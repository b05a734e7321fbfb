#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fermat/checks.hpp"

namespace fermat {

using ordered_json = nlohmann::ordered_json;

inline ordered_json params_to_json(const CheckParams& p) {
    ordered_json j = ordered_json::object();
    j["n"] = p.n;
    if (p.k) j["k"] = *p.k;
    if (p.r) j["r"] = *p.r;
    if (p.m) j["m"] = *p.m;
    if (p.j) j["j"] = *p.j;
    if (p.t) j["t"] = *p.t;
    return j;
}

/// One JSON object per line: a header, the ordered check results, and a
/// final summary line.
inline void write_jsonl(const Report& report, std::ostream& os) {
    ordered_json header = ordered_json::object();
    header["tool"] = "fermat-verify";
    header["version"] = report.version;
    ordered_json fields = ordered_json::array();
    for (const auto& [n, primes] : report.fields) {
        ordered_json f = ordered_json::object();
        f["n"] = n;
        f["primes"] = {primes.first, primes.second};
        fields.push_back(f);
    }
    header["fields"] = fields;
    os << header.dump() << "\n";

    for (const CheckResult& r : report.results) {
        ordered_json line = ordered_json::object();
        line["check_id"] = r.check_id;
        ordered_json params = params_to_json(r.params);
        params["p"] = {r.prime1, r.prime2};
        line["params"] = params;
        line["status"] = to_string(r.status);
        line["details"] = r.details;
        line["wall_ms"] = r.wall_ms;
        os << line.dump() << "\n";
    }

    ordered_json summary = ordered_json::object();
    ordered_json counts = ordered_json::object();
    counts["pass"] = report.count(CheckStatus::pass);
    counts["fail"] = report.count(CheckStatus::fail);
    counts["skip"] = report.count(CheckStatus::skip);
    counts["paper_discrepancy"] = report.count(CheckStatus::paper_discrepancy);
    summary["summary"] = counts;
    os << summary.dump() << "\n";
}

inline void write_text(const Report& report, std::ostream& os) {
    os << "fermat-verify " << report.version << "\n";
    for (const auto& [n, primes] : report.fields)
        os << "  n=" << n << ": primes " << primes.first << ", " << primes.second << "\n";
    os << "\n";
    for (const CheckResult& r : report.results) {
        os << "[" << std::setw(17) << std::left << to_string(r.status) << "] " << r.check_id
           << " {" << r.params.key() << "}";
        if (r.wall_ms > 0) os << " (" << r.wall_ms << " ms)";
        os << "\n    " << r.details << "\n";
    }
    os << "\nsummary: pass=" << report.count(CheckStatus::pass)
       << " fail=" << report.count(CheckStatus::fail)
       << " skip=" << report.count(CheckStatus::skip)
       << " paper-discrepancy=" << report.count(CheckStatus::paper_discrepancy) << "\n";
}

inline std::string to_jsonl(const Report& report) {
    std::ostringstream os;
    write_jsonl(report, os);
    return os.str();
}

}  // namespace fermat
