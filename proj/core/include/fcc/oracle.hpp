#pragma once

#include <functional>
#include <optional>

#include "fcc/core.hpp"

namespace fcc {

struct SolveResult {
    int cost = 0;
    Clustering clustering;
};

struct OracleParams {
    int cap = 12;                             // refuse instances above this size
    std::optional<int> max_cluster_size;      // prune clusters above this size
    const Deadline* deadline = nullptr;
};

/// Enumerates every fair partition of 1..n exactly once, in canonical
/// restricted-growth-string order. The visitor returns false to stop early.
void enumerate_fair_clusterings(const ColoredInstance& instance, const OracleParams& params,
                                const std::function<bool(const Clustering&)>& visit);

/// Ground truth: minimum cost over all fair clusterings; the witness is the
/// lexicographically least restricted-growth string among the minima.
SolveResult brute_force_optimum(const ColoredInstance& instance, const OracleParams& params = {});

/// For fairlet size 2 only: an optimal fair clustering in which every cluster
/// of size > 2 induces a connected subgraph, or nullopt if no optimum has the
/// property. Throws ParamError when the fairlet size differs from 2.
std::optional<Clustering> find_nice_optimum(const ColoredInstance& instance,
                                            const OracleParams& params = {});

/// True iff `clustering` is a valid partition, fair, and costs at most budget.
bool verify_solution(const ColoredInstance& instance, const Clustering& clustering, int budget);

}  // namespace fcc
