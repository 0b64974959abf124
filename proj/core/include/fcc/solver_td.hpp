#pragma once

#include <string>

#include "fcc/bip.hpp"
#include "fcc/decomp.hpp"
#include "fcc/oracle.hpp"

namespace fcc {

/// Canonical recursive code per vertex: color, set of depths of ancestors the
/// vertex is adjacent to, and the sorted multiset of child codes. Codes are
/// index-free, so relabeling an instance permutes but never changes them.
std::vector<std::string> vertex_types(const ColoredInstance& instance,
                                      const TreedepthForest& forest);

struct ReducedInstance {
    ColoredInstance graph;              // input graph minus the removed edges
    std::optional<int> budget_after;    // input budget minus #removed (if a budget was given)
    std::vector<std::pair<int, int>> removed;
    bool rejected = false;              // budget dropped below zero
};

/// Layer-wise type reduction over the treedepth forest: per layer, keep gamma
/// vertices of every (parent, type) group and cut all edges from the rest to
/// their ancestors, paying one budget unit per removed graph edge.
ReducedInstance reduce_by_types(const ColoredInstance& instance, const TreedepthForest& forest,
                                int gamma, std::optional<int> budget);

/// Isomorphism class (respecting colors) of connected components.
struct ComponentClass {
    std::string code;                        // canonical encoding
    std::vector<int> rep_colors;             // colors by canonical position
    std::vector<std::vector<char>> rep_adj;  // adjacency by canonical position
    // each member lists original vertices by canonical position
    std::vector<std::vector<int>> members;
};

/// Groups the components of `graph` by canonical form. Throws ParamError when
/// a component exceeds zeta_cap vertices.
std::vector<ComponentClass> component_classes(const ColoredInstance& graph, int zeta_cap);

/// The Cuts/Comp/Clusters integer program for bounded-component instances,
/// with bookkeeping to realize a clustering from a solved assignment.
struct TdProgram {
    bip::Program program;

    struct CutVar {
        int class_idx;
        std::vector<std::vector<int>> parts;  // canonical positions
        long long cost;
    };
    std::vector<CutVar> cuts;  // variable indices 0..cuts.size()-1

    std::vector<std::vector<int>> type_list;  // color-count vectors, indexed by type id
    int comp_offset = 0;                      // comp variable for type j at comp_offset + j

    struct ShapeVar {
        std::vector<std::pair<int, int>> counts;  // (type id, multiplicity)
        long long cost;                           // cross-component pair count
    };
    std::vector<ShapeVar> shapes;
    int shape_offset = 0;
};

TdProgram build_program(const std::vector<ComponentClass>& classes, const FairletVector& fairlet,
                        int gamma, std::optional<int> budget);

/// Optimal fair clustering with clusters of size at most gamma on a graph
/// whose components are bounded by zeta; nullopt when no such clustering
/// exists (gamma below the fairlet size).
std::optional<SolveResult> solve_bounded_components(const ColoredInstance& graph, int gamma,
                                                    std::optional<int> budget, int zeta,
                                                    const Deadline* deadline = nullptr);

struct TdParams {
    std::optional<int> gamma;    // override of the max(24*height, fairlet) default
    int zeta = 10;               // component cap for the integer program
    int exact_td_cap = 20;       // exact treedepth limit; heuristic above
    const TreedepthForest* forest = nullptr;  // precomputed/imported forest
    const Deadline* deadline = nullptr;
};

/// Treedepth FPT solver: type reduction, component classification, integer
/// program; optimization wraps the decision pipeline in a binary search on
/// the budget.
SolveResult solve_td(const ColoredInstance& instance, const TdParams& params = {});

}  // namespace fcc
