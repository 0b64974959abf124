#pragma once

#include <unordered_map>

#include "fcc/decomp.hpp"
#include "fcc/oracle.hpp"

namespace fcc {
namespace tw {

/// An incomplete solution cluster that is disjoint from the current bag:
/// guessed final size multiplier d (size = d * fairlet size) and how many
/// past vertices of each color it already holds.
struct OpenEntry {
    int d = 0;
    std::vector<int> colors;  // indexed color-1

    friend bool operator==(const OpenEntry&, const OpenEntry&) = default;
    friend auto operator<=>(const OpenEntry&, const OpenEntry&) = default;
};

/// A solution cluster intersecting the current bag: past color counts exclude
/// the bag part S.
struct CurrentEntry {
    int d = 0;
    std::vector<int> colors;
    std::vector<int> bagset;  // sorted vertex ids; the S of the record

    friend bool operator==(const CurrentEntry&, const CurrentEntry&) = default;
};

struct Record {
    std::vector<std::pair<OpenEntry, int>> open;  // sorted, with multiplicities
    std::vector<CurrentEntry> current;            // sorted by bagset
    int cost = 0;
};

/// How a record was derived from its child record(s); drives witness
/// reconstruction.
struct Back {
    enum class Kind { LeafInit, IntroNew, IntroJoinCurrent, IntroReopen, Forget, Join };
    Kind kind = Kind::LeafInit;
    int child = -1;   // record index in the child table
    int child2 = -1;  // second child for joins
    int d = 0;        // LeafInit / IntroNew size multiplier
    int entry = -1;   // IntroJoinCurrent: current index in child; IntroReopen: open index in child
    std::vector<std::array<int, 3>> merges;  // Join: (p open index, q open index, count)
};

struct Table {
    std::vector<Record> records;
    std::vector<Back> backs;
    std::unordered_map<std::string, int> index;  // canonical key -> record position

    int find(const Record& r) const;
};

enum class Mode { Xp, Fpt2 };

/// The treewidth dynamic program over (open, current, cost) records. Mode Xp
/// runs the full table; mode Fpt2 (fairlet size <= 2) additionally discards
/// records whose open part is anything but size-2 lone vertices (and for
/// fairlet size 1, any open entry at all).
class TwSolver {
  public:
    TwSolver(const ColoredInstance& instance, const NiceTreeDecomposition& nice, Mode mode,
             const Deadline* deadline = nullptr);

    Table leaf_table(int vertex) const;
    Table process_introduce(const Table& child, int vertex) const;
    Table process_forget(const Table& child, int vertex, const std::vector<int>& parent_bag) const;
    Table process_join(const Table& left, const Table& right) const;

    SolveResult solve();

    int max_multiplier() const { return dmax_; }

  private:
    void insert(Table& t, Record rec, Back back) const;
    bool admissible(const Record& rec) const;
    Clustering reconstruct(const std::vector<Table>& tables, int root_record) const;

    const ColoredInstance& g_;
    const NiceTreeDecomposition& nice_;
    Mode mode_;
    const Deadline* deadline_;
    FairletVector fairlet_;
    int dmax_;
};

}  // namespace tw

/// Full dynamic program; XP w.r.t. treewidth plus fairlet size.
SolveResult solve_tw_xp(const ColoredInstance& instance, const NiceTreeDecomposition& nice,
                        const Deadline* deadline = nullptr);

/// FPT restriction for fairlet size <= 2 (fairlet size 1 is plain correlation
/// clustering). Throws ParamError when the fairlet is larger.
SolveResult solve_tw_fpt2(const ColoredInstance& instance, const NiceTreeDecomposition& nice,
                          const Deadline* deadline = nullptr);

}  // namespace fcc
