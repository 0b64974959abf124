#pragma once

#include <cstdint>

#include "fcc/instance.hpp"

namespace fcc {

enum class Family { Gnp, Tree, KTree, StarForest };

Family family_from_string(const std::string& s);
std::string family_name(Family f);

struct GenSpec {
    Family family = Family::Gnp;
    int n = 0;
    double p = 0.5;                // Gnp edge probability
    int k = 2;                     // KTree parameter
    std::vector<int> fairlet;      // target fairlet vector, one entry per color
    std::uint64_t seed = 1;
};

/// Seed-reproducible instance whose global color counts are exactly
/// (n / fairlet size) copies of the fairlet vector. Throws ParamError when n
/// is not divisible by the fairlet size.
ColoredInstance generate(const GenSpec& spec);

}  // namespace fcc
