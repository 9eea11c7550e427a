#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fib/curvature.hpp"

namespace fib {

// One checkable line of the curvature case analysis. Everything is exact;
// symbolic entries (d1/d2, x1+y1, ...) only ever contribute their declared
// group sum, so any split of a pair leaves the verdict unchanged.
struct LedgerEntry {
    enum class Kind { caze, sum, deficit, curvature, formula };

    std::string id;
    Kind kind = Kind::caze;
    std::string src;

    std::vector<std::string> degrees;   // "3", "5+", ... (caze, curvature)
    std::vector<std::string> cv;        // integers or symbol names (caze, sum)
    std::vector<std::string> kappa;     // deficit rows
    std::map<std::string, std::int64_t> pairs;  // extra/overriding group sums
    struct Adjust {
        std::int64_t thirtieths = 0;
        std::string note;
    };
    std::vector<Adjust> adjust;

    std::string claim;                  // "<0", "<=0", "=0", "=<rational>"
    std::optional<std::int64_t> stated; // bound in pi/30 the source prints

    // formula entries
    std::string formula;                // "type_a_bound", "dagger", "delta0"
    std::int64_t range_lo = 0, range_hi = 0;
    std::optional<std::int64_t> nonpositive_iff_ge;
    std::optional<std::string> equals_pi;
};

struct EntryVerdict {
    enum class Status { verified, refuted, malformed } status;
    std::string id;
    std::string detail;    // computed value next to the claim
    bool stated_mismatch = false;
};

struct LedgerReport {
    std::vector<EntryVerdict> verdicts;
    std::int64_t verified = 0, refuted = 0, malformed = 0;
    std::vector<std::string> findings;  // stated-bound mismatches, with values

    bool clean() const { return refuted == 0 && malformed == 0; }
};

EntryVerdict check_entry(const LedgerEntry& e);
LedgerReport check_entries(const std::vector<LedgerEntry>& entries);

// JSON-lines ledger file; blank lines and '#'-prefixed lines are skipped.
std::vector<LedgerEntry> parse_ledger(const std::string& text);
LedgerReport check_file(const std::string& path);

// default symbolic pair sums used throughout the case analysis
const std::map<std::string, std::int64_t>& default_pair_sums();

}  // namespace fib
