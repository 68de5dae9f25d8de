#pragma once

// Oracle suites behind `zeta-blocks selftest`. Each suite yields one item per
// check; the report is ordered by item key.

#include <cstdint>
#include <string>
#include <vector>

#include "zeta_blocks/eval.hpp"
#include "zeta_blocks/io.hpp"

namespace zb {

struct SelftestOptions {
    int max_word_length = 16;
    int max_partition_n = 8;
    int max_g_n = 9;
    int max_weight = 8;
    int proposition_max_n = 4;
    int proposition_random_cases = 100;
    int eval_random_cases = 50;
    std::uint64_t seed = 20180627;
    EvalContext ctx;
};

struct ReportItem {
    std::string key;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    std::vector<ReportItem> items;
    double wall_time_seconds = 0.0;

    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }
    void sort_items();
};

/// Wall time appears in the JSON only when include_timing is set, so that
/// identical runs produce identical bytes by default.
json report_to_json(const RunReport& r, bool include_timing);
std::string report_to_text(const RunReport& r);

inline const std::vector<std::string>& selftest_suites() {
    static const std::vector<std::string> names{"words", "partitions", "propositions", "zhao", "eval"};
    return names;
}

/// suite is one of selftest_suites() or "all".
RunReport run_selftest(const std::string& suite, const SelftestOptions& options);

// Test domains.

/// Convergent indices with entries in {1,2,3}, no two adjacent 1s, weight <= max_weight.
std::vector<Index> two_one_indices(int max_weight);
/// First entry 1..max_first, later entries in {1,2,3}, no adjacent (1,1), depth <= max_depth.
std::vector<Index> inductive_domain(int max_first, int max_depth);
/// All signed indices of the given length over {1,2,3,1',2',3'}.
std::vector<SignedIndex> small_signed_indices(int length);

/// Fewest alternating words w splits into, by dynamic programming.
int min_alternating_pieces(const BinaryWord& w);

}  // namespace zb
