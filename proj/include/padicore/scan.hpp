#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "padicore/serialize.hpp"

namespace padicore {

struct ScanConfig {
    long long a_min = 0, a_max = 0, b_min = 0, b_max = 0;
    std::vector<int> primes = {2, 3};      // subset of {2,3,5}
    std::string csv_path, json_path, ledger_path;  // empty: keep in memory only
    int jobs = 1;
    uint64_t seed = 0;
    bool verbatim = false;

    void validate() const;  // throws std::invalid_argument
};

struct ScanSummary {
    long long pairs = 0, irreducible = 0, consistent = 0, inconsistent = 0,
              undetermined = 0;
    std::map<std::string, long long> condition_counts;
};

struct ScanResult {
    std::string csv;      // header + one row per irreducible pair
    OrderedJson json;     // schema padicore.scan/1, rows mirror the CSV
    std::string ledger;   // one annotated line per engine/closed-form mismatch
    ScanSummary summary;
};

/// Grid scan of x^5 + a x^2 + b over the configured rectangle, in
/// (a, b)-lexicographic order.  Output is byte-identical for a fixed
/// (config, seed) at any parallelism degree.
ScanResult run_scan(const ScanConfig& cfg);

}  // namespace padicore
