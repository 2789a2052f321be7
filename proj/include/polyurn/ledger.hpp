#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polyurn/serialize.hpp"

namespace polyurn {

// One reproduced constant: a value computed from scratch by the library
// pipeline, compared bit-exactly against an independently recorded fixture
// (or, for the two spectral-condition verdicts, against the known boundary).
struct LedgerEntry {
    std::string id;           // stable slug, e.g. "binary.covariance-integral"
    std::string description;  // what is computed and how
    std::string source;       // where the expected value is recorded
    bool passed = false;
    std::string detail;       // value summary on pass, first mismatch on failure
};

struct LedgerReport {
    std::vector<LedgerEntry> entries;

    std::size_t failed_count() const;
    bool ok() const { return failed_count() == 0; }
};

// Runs every ledger entry.  Individual failures (including exceptions inside
// an entry) are captured per entry; this function itself does not throw.
LedgerReport run_ledger();

Json json_of(const LedgerReport& report);
// One line per entry ("PASS id - description") plus a summary line.
std::string ledger_pretty(const LedgerReport& report);

}  // namespace polyurn
