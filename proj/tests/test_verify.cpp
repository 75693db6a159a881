#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ratcomb/error.hpp"
#include "ratcomb/verify.hpp"

using namespace ratcomb;

namespace {

const VerifyReport& full_report() {
    static const VerifyReport report = run_verify(VerifySuite::All);
    return report;
}

const Check* find_check(const VerifyReport& report, const std::string& id) {
    for (const Check& c : report.checks)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("full suite passes with the pinned discrepancies") {
    const VerifyReport& report = full_report();
    CHECK(report.ok());
    CHECK(report.count(CheckStatus::Fail) == 0);
    CHECK(report.count(CheckStatus::KnownDiscrepancy) > 0);
    CHECK(report.checks.size() > 100);
}

TEST_CASE("expected rows are flagged as known discrepancies") {
    const VerifyReport& report = full_report();
    for (const char* id :
         {"tables/zsq/n=2", "tables/z3/n=1", "tables/s/n=0", "tables/s/n=3",
          "tables/c2/n=6", "tables/c1-poly/n=2", "tables/chain-sum/n=3",
          "tables/chain-sum/n=4", "oracles/recursion-sign",
          "oracles/xf-theorem", "oracles/pard-top"}) {
        const Check* c = find_check(report, id);
        REQUIRE_MESSAGE(c != nullptr, id);
        CHECK_MESSAGE(c->status == CheckStatus::KnownDiscrepancy, id);
        CHECK_MESSAGE(!c->registry_id.empty(), id);
        CHECK(find_pin(c->registry_id) != nullptr);
    }
    // and the rows around them pass
    for (const char* id :
         {"tables/classical/n=12", "tables/classical/n=14", "tables/b2/n=9",
          "tables/sin1/n=4", "tables/c2/n=7", "tables/z3/n=2", "tables/s/n=4"}) {
        const Check* c = find_check(report, id);
        REQUIRE_MESSAGE(c != nullptr, id);
        CHECK_MESSAGE(c->status == CheckStatus::Pass, id);
    }
}

TEST_CASE("suites partition the checks") {
    const VerifyReport tables = run_verify(VerifySuite::Tables);
    const VerifyReport oracles = run_verify(VerifySuite::Oracles);
    const VerifyReport properties = run_verify(VerifySuite::Properties);
    CHECK(tables.ok());
    CHECK(oracles.ok());
    CHECK(properties.ok());
    CHECK(tables.checks.size() + oracles.checks.size() +
              properties.checks.size() ==
          full_report().checks.size());
    for (const Check& c : tables.checks)
        CHECK(c.id.starts_with("tables/"));
    for (const Check& c : oracles.checks)
        CHECK(c.id.starts_with("oracles/"));
    for (const Check& c : properties.checks)
        CHECK(c.id.starts_with("properties/"));
}

TEST_CASE("max_n clamps the table ranges") {
    const VerifyReport clamped = run_verify(VerifySuite::Tables, 3u);
    CHECK(clamped.ok());
    CHECK(find_check(clamped, "tables/classical/n=3") != nullptr);
    CHECK(find_check(clamped, "tables/classical/n=4") == nullptr);
}

TEST_CASE("reports render deterministically") {
    const VerifyReport& report = full_report();
    CHECK(render_report_text(report) == render_report_text(report));
    const std::string json_text = render_report_json(report);
    CHECK(json_text == render_report_json(report));
    const nlohmann::json arr = nlohmann::json::parse(json_text);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == report.checks.size());
    for (const auto& item : arr) {
        CHECK(item.contains("id"));
        CHECK(item.contains("status"));
        CHECK(item.contains("expected"));
        CHECK(item.contains("actual"));
        CHECK(item.contains("source"));
        if (item["status"] == "KNOWN-DISCREPANCY") CHECK(item.contains("registry"));
    }
}

TEST_CASE("a failing check makes the report fail") {
    VerifyReport report = full_report();
    report.checks.push_back({"synthetic/broken", CheckStatus::Fail, "1", "2",
                             CheckSource::ClosedForm, {}});
    CHECK(!report.ok());
    CHECK(report.count(CheckStatus::Fail) == 1);
}

TEST_CASE("registry ids are unique and documented") {
    std::set<std::string> ids;
    for (const DiscrepancyPin& pin : discrepancy_registry()) {
        CHECK(ids.insert(pin.id).second);
        CHECK(!pin.printed.empty());
        CHECK(!pin.computed.empty());
        CHECK(pin.printed != pin.computed);
        CHECK(!pin.note.empty());
    }
    std::ifstream in(DISCREPANCIES_MD_PATH);
    REQUIRE_MESSAGE(in.good(), "DISCREPANCIES.md must exist");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string doc = buf.str();
    for (const DiscrepancyPin& pin : discrepancy_registry())
        CHECK_MESSAGE(doc.find(pin.id) != std::string::npos,
                      "undocumented registry id: " << pin.id);
}

TEST_CASE("every cited registry id resolves") {
    for (const Check& c : full_report().checks) {
        if (c.status == CheckStatus::KnownDiscrepancy) {
            const DiscrepancyPin* pin = find_pin(c.registry_id);
            REQUIRE(pin != nullptr);
        }
    }
    CHECK(find_pin("no-such-pin") == nullptr);
    CHECK_THROWS_AS(parse_suite("bogus"), ParseError);
}
