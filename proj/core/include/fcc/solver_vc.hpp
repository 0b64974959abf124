#pragma once

#include <functional>

#include "fcc/matching.hpp"
#include "fcc/oracle.hpp"

namespace fcc {

/// A partition of the vertex cover with a guessed final size (a multiple of
/// the fairlet size) for each part.
struct PreClustering {
    std::vector<std::vector<int>> parts;  // partition of the cover, each sorted
    std::vector<int> multipliers;         // part i gets final size fairlet.size * multipliers[i]
};

/// Enumerates all partitions of the cover crossed with all feasible size
/// guesses: sizes are positive multiples of the fairlet size, each at most
/// min(n, max(24k, fairlet size)), color-feasible, and summing to at most n.
void enumerate_preclusterings(const std::vector<int>& cover, const ColoredInstance& instance,
                              const FairletVector& fairlet,
                              const std::function<bool(const PreClustering&)>& visit);

/// One spot per missing color slot of every part; the weight of (spot, v) is
/// the number of neighbors v has inside the spot's part.
SpotGraph build_spot_graph(const PreClustering& pre, const ColoredInstance& instance,
                           const FairletVector& fairlet);

/// Vertex-cover FPT solver: branch over pre-clusterings, fill the free spots
/// by maximum-weight matching, tile the leftovers into fairlet-sized clusters.
SolveResult solve_vc(const ColoredInstance& instance, const Deadline* deadline = nullptr);

}  // namespace fcc
