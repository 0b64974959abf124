#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcc/util.hpp"

namespace fcc {
namespace bip {

enum class Rel { Eq, Le, Ge };

/// Sparse linear constraint sum(coeff * x) REL rhs.
struct Constraint {
    std::vector<std::pair<int, long long>> terms;  // (variable index, coefficient)
    Rel rel = Rel::Eq;
    long long rhs = 0;
};

/// Minimize objective . x subject to the constraints, x integer,
/// 0 <= x[i] <= upper[i].
struct Program {
    std::vector<int> upper;
    std::vector<Constraint> constraints;
    std::vector<long long> objective;
};

struct Solution {
    long long objective = 0;
    std::vector<int> assignment;
};

/// Depth-first branch-and-bound with interval constraint propagation and a
/// per-variable objective lower bound; branches on the most-constrained
/// variable, values ascending. Returns a provably optimal assignment or
/// nullopt when infeasible.
std::optional<Solution> solve(const Program& program, const Deadline* deadline = nullptr);

}  // namespace bip
}  // namespace fcc
