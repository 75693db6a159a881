#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ratcomb {

enum class CheckStatus { Pass, Fail, KnownDiscrepancy };
enum class CheckSource { PaperTable, ClosedForm, DualPath, OraclePin };

std::string to_string(CheckStatus s);
std::string to_string(CheckSource s);

struct Check {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string actual;
    CheckSource source = CheckSource::DualPath;
    std::string registry_id;  // cited by KNOWN-DISCREPANCY entries
};

struct VerifyReport {
    std::vector<Check> checks;

    std::size_t count(CheckStatus s) const;
    // True when no check failed; KNOWN-DISCREPANCY entries count as
    // reproduced pins, not failures.
    bool ok() const { return count(CheckStatus::Fail) == 0; }
};

enum class VerifySuite { Tables, Oracles, Properties, All };
VerifySuite parse_suite(std::string_view text);

// Runs the selected checks. max_n, when given, clamps the table/oracle index
// ranges.
VerifyReport run_verify(VerifySuite suite,
                        std::optional<unsigned> max_n = std::nullopt);

std::string render_report_text(const VerifyReport& report);
// JSON array of {id, status, expected, actual, source[, registry]}.
std::string render_report_json(const VerifyReport& report);

// One pinned value per source-table row or displayed formula whose printed
// value contradicts the definitions it accompanies. The computed value is the
// regression pin; every id is documented in DISCREPANCIES.md.
struct DiscrepancyPin {
    std::string id;
    std::string location;
    std::string printed;
    std::string computed;
    std::string note;
};

const std::vector<DiscrepancyPin>& discrepancy_registry();
const DiscrepancyPin* find_pin(std::string_view id);

} // namespace ratcomb
