#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fermat/report.hpp"

using namespace fermat;

namespace {

CheckParams P(unsigned n, std::optional<unsigned> k = {}, std::optional<unsigned> r = {},
              std::optional<unsigned> m = {}, std::optional<unsigned> t = {}) {
    CheckParams p;
    p.n = n;
    p.k = k;
    p.r = r;
    p.m = m;
    p.t = t;
    return p;
}

}  // namespace

TEST_CASE("registry has the fifteen named checks") {
    const auto& reg = check_registry();
    REQUIRE(reg.size() == 15);
    std::set<std::string> ids;
    for (const auto& e : reg) ids.insert(e.id);
    CHECK(ids.count("C1-detC") == 1);
    CHECK(ids.count("C15-hilbert-burch") == 1);
    CHECK(ids.size() == 15);
}

TEST_CASE("run_check on representative ids") {
    CheckResult c1 = run_check("C1-detC", P(3, {}, {}, {}, 3));
    CHECK(c1.status == CheckStatus::pass);
    CHECK(c1.prime1 == 10009);
    CHECK(c1.prime2 == 10039);

    CheckResult c9 = run_check("C9-veronese", P(3, 2));
    CHECK(c9.status == CheckStatus::pass);

    CheckResult c7 = run_check("C7-reg-ordinary", P(3, {}, 1));
    CHECK(c7.status == CheckStatus::paper_discrepancy);
    CHECK(c7.details.find("computed 5") != std::string::npos);
    CHECK(c7.details.find("6") != std::string::npos);

    CHECK_THROWS_AS(run_check("C99-unknown", P(3)), error);
}

TEST_CASE("by-id selection produces named witnesses") {
    SuiteConfig cfg;
    cfg.ns = {3, 4};
    cfg.ks = {1};
    cfg.selection = SuiteConfig::Selection::by_ids;
    cfg.ids = {"C10-noncontainment"};
    Report rep = run_suite(cfg);
    REQUIRE(rep.results.size() == 2);
    for (const CheckResult& r : rep.results) {
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.details.find("witness of degree") != std::string::npos);
    }
}

TEST_CASE("reports are deterministic and well formed") {
    SuiteConfig cfg;
    cfg.ns = {3};
    cfg.ks = {1};
    cfg.selection = SuiteConfig::Selection::quick;

    Report r1 = run_suite(cfg);
    Report r2 = run_suite(cfg);
    std::string s1 = to_jsonl(r1);
    CHECK(s1 == to_jsonl(r2));

    // parallel execution must not change a byte
    cfg.threads = 2;
    Report r3 = run_suite(cfg);
    CHECK(s1 == to_jsonl(r3));

    // every line is a JSON object; header first, summary last
    std::istringstream lines(s1);
    std::string line;
    std::vector<ordered_json> parsed;
    while (std::getline(lines, line)) parsed.push_back(ordered_json::parse(line));
    REQUIRE(parsed.size() == r1.results.size() + 2);
    CHECK(parsed.front().contains("tool"));
    CHECK(parsed.front()["version"] == tool_version);
    CHECK(parsed.back().contains("summary"));

    int pass = 0, fail = 0, skip = 0, disc = 0;
    for (std::size_t i = 1; i + 1 < parsed.size(); ++i) {
        const ordered_json& line_json = parsed[i];
        REQUIRE(line_json.contains("check_id"));
        REQUIRE(line_json.contains("params"));
        REQUIRE(line_json.contains("status"));
        REQUIRE(line_json.contains("details"));
        REQUIRE(line_json.contains("wall_ms"));
        CHECK(line_json["wall_ms"] == 0);  // timing off by default
        std::string status = line_json["status"];
        if (status == "pass") ++pass;
        else if (status == "fail") ++fail;
        else if (status == "skip") ++skip;
        else if (status == "paper-discrepancy") ++disc;
    }
    CHECK(parsed.back()["summary"]["pass"] == pass);
    CHECK(parsed.back()["summary"]["fail"] == fail);
    CHECK(parsed.back()["summary"]["skip"] == skip);
    CHECK(parsed.back()["summary"]["paper_discrepancy"] == disc);
    CHECK(fail == 0);
}

TEST_CASE("ordering is fixed by the registry, then parameters") {
    SuiteConfig cfg;
    cfg.ns = {3};
    cfg.ks = {1};
    cfg.selection = SuiteConfig::Selection::all;
    Report rep = run_suite(cfg);
    // registry index is non-decreasing along the report
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < check_registry().size(); ++i)
        index[check_registry()[i].id] = i;
    std::size_t last = 0;
    for (const CheckResult& r : rep.results) {
        std::size_t cur = index.at(r.check_id);
        CHECK(cur >= last);
        last = cur;
    }
}

TEST_CASE("explicit prime pair is honored") {
    CheckResult r = run_check("C1-detC", P(3, {}, {}, {}, 2),
                              std::make_pair<std::uint64_t, std::uint64_t>(13, 7));
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.prime1 == 13);
    CHECK(r.prime2 == 7);
}
