#pragma once

#include "fcc/report.hpp"

namespace fcc {

struct BenchOptions {
    std::vector<Algo> algos{Algo::Oracle, Algo::Vc, Algo::TwXp, Algo::TwFpt2, Algo::Td};
    double timeout_s = 60.0;
    int jobs = 1;
    int oracle_cap = 12;
};

struct BenchCell {
    std::string instance;
    std::string algo;
    std::string status;  // ok | timeout | skip | error
    std::string detail;
    std::optional<int> cost;
    double seconds = 0;
};

struct BenchResult {
    std::vector<BenchCell> cells;
    bool all_agree = true;  // every instance's ok-costs coincide

    std::string to_tsv() const;
};

/// Runs every (instance, algo) cell; timeouts and precondition failures are
/// recorded in the table, not fatal. Cells are independent pure solves and may
/// run on a bounded worker pool.
BenchResult run_bench(const std::vector<std::string>& instance_paths,
                      const BenchOptions& options);

}  // namespace fcc
