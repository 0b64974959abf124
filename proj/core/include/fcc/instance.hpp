#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcc/util.hpp"

namespace fcc {

/// A colored graph instance. Vertices are 1..n, colors are 1..kappa; both
/// assignments are fixed at construction and every color must occur.
/// Immutable after create(); all operations on it are pure.
class ColoredInstance {
  public:
    /// Validates and normalizes; throws ValidationError on any violated
    /// invariant (self-loop, duplicate edge, out-of-range endpoint or color,
    /// unused color, n < 1).
    static ColoredInstance create(int n, std::vector<std::pair<int, int>> edges,
                                  std::vector<int> colors, int kappa,
                                  std::optional<int> budget = std::nullopt);

    int n() const { return n_; }
    int kappa() const { return kappa_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::optional<int>& budget() const { return budget_; }

    int color(int v) const { return color_[v]; }
    const std::vector<int>& colors() const { return color_; }  // index 1..n, [0] unused

    bool has_edge(int u, int v) const { return adj_[u][v]; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    /// Number of vertices per color, indexed color-1.
    const std::vector<int>& color_counts() const { return color_counts_; }

    ColoredInstance with_budget(std::optional<int> b) const;
    /// Same graph and kappa with a different coloring (used by tests and the
    /// monochrome reductions).
    ColoredInstance recolored(std::vector<int> colors, int kappa) const;
    /// Subgraph on the same vertex set with some edges deleted.
    ColoredInstance without_edges(const std::vector<std::pair<int, int>>& removed) const;

  private:
    int n_ = 0;
    int kappa_ = 0;
    std::vector<std::pair<int, int>> edges_;   // u < v, sorted, unique
    std::vector<int> color_;                   // 1..n
    std::optional<int> budget_;
    std::vector<int> color_counts_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<int>> nbrs_;
};

/// Minimal per-color multiset (c_1,...,c_kappa) that tiles the instance's
/// color counts; counts are indexed color-1 and have gcd 1.
struct FairletVector {
    std::vector<int> counts;
    int size = 0;  // c~ = sum of counts

    int count_for(int color) const { return counts[color - 1]; }
};

FairletVector compute_fairlet(const ColoredInstance& instance);

/// A partition of 1..n into nonempty clusters. Kept in canonical form:
/// each cluster sorted ascending, clusters ordered by smallest element.
struct Clustering {
    std::vector<std::vector<int>> clusters;

    static Clustering of(std::vector<std::vector<int>> parts);
    void canonicalize();
    bool operator==(const Clustering& o) const { return clusters == o.clusters; }
};

/// Throws ValidationError unless `c` is a partition of 1..n.
void validate_partition(const ColoredInstance& instance, const Clustering& c);

std::string to_string(const Clustering& c);

}  // namespace fcc
