#pragma once

#include <vector>

#include "fcc/instance.hpp"

namespace fcc {

enum class DecompMode { Exact, Heuristic };

struct VertexCoverResult {
    std::vector<int> cover;  // sorted ascending
    int k = 0;
};

/// Minimum vertex cover by branching on a maximum-degree vertex (take it, or
/// take its whole neighborhood) with degree-0/1 kernelization.
VertexCoverResult min_vertex_cover(const ColoredInstance& graph);

/// A tree decomposition in raw form: bags plus tree edges between bag indices.
struct RawTreeDecomposition {
    std::vector<std::vector<int>> bags;          // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges; // 0-based bag indices

    int width() const;
};

/// Exact mode runs an elimination-ordering DP over vertex subsets and is
/// limited to exact_cap vertices; heuristic mode uses min-fill ordering.
RawTreeDecomposition tree_decomposition(const ColoredInstance& graph, DecompMode mode,
                                        int exact_cap = 25);

/// Throws ValidationError naming the violated property (edge not covered,
/// occurrence subtree disconnected, not a tree, ...).
void validate_tree_decomposition(const ColoredInstance& graph,
                                 const RawTreeDecomposition& td);

enum class NiceNodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceNodeKind kind;
    int vertex = 0;              // introduced/forgotten vertex, or the leaf vertex
    std::vector<int> bag;        // sorted ascending
    std::vector<int> children;   // node indices; empty for Leaf
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;  // topologically ordered: children precede parents
    int root = -1;
    int width = 0;
};

/// Converts a valid raw decomposition into an equivalent nice one of the same
/// width: singleton leaf bags, empty root bag, introduce/forget chains between
/// adjacent bags, binary joins. Vertices are introduced/forgotten in ascending
/// order, so the output is deterministic.
NiceTreeDecomposition to_nice(const RawTreeDecomposition& raw, const ColoredInstance& graph);

void validate_nice(const ColoredInstance& graph, const NiceTreeDecomposition& nice);

struct TreedepthForest {
    std::vector<int> parent;  // index 1..n; 0 means the vertex is a root
    int height = 0;           // max vertices on a root-to-vertex path
};

/// Exact mode memoizes td(S) = 1 + min_v td(S - v) over vertex subsets
/// (per connected component) and is limited to exact_cap vertices; heuristic
/// mode returns a DFS forest.
TreedepthForest treedepth_forest(const ColoredInstance& graph, DecompMode mode,
                                 int exact_cap = 20);

/// Throws ValidationError unless the forest is acyclic and every graph edge
/// joins an ancestor-descendant pair.
void validate_treedepth_forest(const ColoredInstance& graph, const TreedepthForest& forest);

/// Depth of every vertex in the forest (root depth 1), index 1..n.
std::vector<int> forest_depths(const TreedepthForest& forest);

}  // namespace fcc
