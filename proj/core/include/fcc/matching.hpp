#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcc/instance.hpp"

namespace fcc {

/// Bipartite spot-assignment graph: left side are the unfilled color slots of
/// pre-clusters, right side are candidate vertices. Weights are defined only
/// between equal-colored pairs.
struct SpotGraph {
    struct Spot {
        int color = 0;
        int part = 0;  // owning pre-cluster id
    };
    std::vector<Spot> spots;
    std::vector<int> right_vertex;  // original vertex ids
    std::vector<int> right_color;
    // weight[s][r], -1 where the colors differ (edge absent)
    std::vector<std::vector<int>> weight;
};

struct MatchingResult {
    long long total_weight = 0;
    std::vector<int> spot_to_right;  // right index per spot
};

/// Among matchings that match every spot to a distinct right vertex of the
/// same color, returns one of maximum total weight; nullopt when no such
/// matching exists. Weight ties prefer lower vertex indices.
std::optional<MatchingResult> max_weight_saturating_matching(const SpotGraph& sg);

}  // namespace fcc
