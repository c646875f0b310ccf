#pragma once

#include <string>
#include <vector>

namespace qfq {

struct CheckEntry {
    std::string name;
    std::string status;  // pass | fail | skipped | paper_anomaly
    std::string detail;
};

struct CheckReport {
    int trunc = 0;
    int oracle_ceiling = 0;
    std::vector<CheckEntry> entries;

    // Anomalies and skips do not fail the run.
    bool ok() const;
};

// Runs every documented cross-check at the given truncation (0..10).
// Oracle-backed checks run only when trunc <= oracle_ceiling.
CheckReport run_check(int trunc, int oracle_ceiling, int threads);

}  // namespace qfq
