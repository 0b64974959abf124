#pragma once

#include <iosfwd>
#include <string>

#include "fcc/decomp.hpp"
#include "fcc/instance.hpp"

namespace fcc {

/// Instance text format:
///   c <comment>
///   p fcc <n> <m> <kappa>
///   n <vertex> <color>     one line per vertex
///   e <u> <v>              one line per edge, u < v
/// Parse errors carry the offending line number.
ColoredInstance parse_instance(std::istream& in);
ColoredInstance load_instance(const std::string& path);

/// Canonical serialization: ASCII, LF, single spaces; vertex lines ascending,
/// edge lines sorted. parse(write(x)) == x.
std::string write_instance(const ColoredInstance& instance);
void save_instance(const ColoredInstance& instance, const std::string& path);

/// PACE-style tree decomposition:
///   s td <bags> <width+1> <n>
///   b <id> <vertices...>
///   <x> <y>                bag tree edges (1-based bag ids)
RawTreeDecomposition parse_pace_td(std::istream& in);
RawTreeDecomposition load_pace_td(const std::string& path);
std::string write_pace_td(const RawTreeDecomposition& td, int n);

/// Treedepth forest as one "<vertex> <parent-or-0>" line per vertex.
TreedepthForest parse_forest(std::istream& in, int n);
TreedepthForest load_forest(const std::string& path, int n);
std::string write_forest(const TreedepthForest& forest);

}  // namespace fcc
