#include "fcc/bip.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace fcc {
namespace bip {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

struct Search {
    const Program& prog;
    const Deadline* deadline;
    std::vector<long long> lo, hi;
    std::optional<Solution> best;
    long long ticks = 0;

    bool propagate() {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& cons : prog.constraints) {
                long long minsum = 0, maxsum = 0;
                for (auto [i, a] : cons.terms) {
                    minsum += a >= 0 ? a * lo[i] : a * hi[i];
                    maxsum += a >= 0 ? a * hi[i] : a * lo[i];
                }
                if (cons.rel == Rel::Eq && (maxsum < cons.rhs || minsum > cons.rhs))
                    return false;
                if (cons.rel == Rel::Le && minsum > cons.rhs) return false;
                if (cons.rel == Rel::Ge && maxsum < cons.rhs) return false;

                for (auto [i, a] : cons.terms) {
                    if (a == 0 || lo[i] == hi[i]) continue;
                    long long own_min = a >= 0 ? a * lo[i] : a * hi[i];
                    long long own_max = a >= 0 ? a * hi[i] : a * lo[i];
                    long long others_min = minsum - own_min;
                    long long others_max = maxsum - own_max;
                    long long tlo = lo[i], thi = hi[i];
                    if (cons.rel == Rel::Eq || cons.rel == Rel::Le) {
                        // a*x <= rhs - others_min
                        long long bound = cons.rhs - others_min;
                        if (a > 0) thi = std::min(thi, floor_div(bound, a));
                        else tlo = std::max(tlo, ceil_div(bound, a));
                    }
                    if (cons.rel == Rel::Eq || cons.rel == Rel::Ge) {
                        // a*x >= rhs - others_max
                        long long bound = cons.rhs - others_max;
                        if (a > 0) tlo = std::max(tlo, ceil_div(bound, a));
                        else thi = std::min(thi, floor_div(bound, a));
                    }
                    if (tlo > thi) return false;
                    if (tlo != lo[i] || thi != hi[i]) {
                        long long old_min = own_min, old_max = own_max;
                        lo[i] = tlo;
                        hi[i] = thi;
                        long long new_min = a >= 0 ? a * lo[i] : a * hi[i];
                        long long new_max = a >= 0 ? a * hi[i] : a * lo[i];
                        minsum += new_min - old_min;
                        maxsum += new_max - old_max;
                        changed = true;
                    }
                }
                if (cons.rel == Rel::Eq && (maxsum < cons.rhs || minsum > cons.rhs))
                    return false;
                if (cons.rel == Rel::Le && minsum > cons.rhs) return false;
                if (cons.rel == Rel::Ge && maxsum < cons.rhs) return false;
            }
        }
        return true;
    }

    long long objective_lower_bound() const {
        long long b = 0;
        for (std::size_t i = 0; i < prog.objective.size(); ++i) {
            long long c = prog.objective[i];
            b += c >= 0 ? c * lo[i] : c * hi[i];
        }
        return b;
    }

    bool feasible_exact(const std::vector<int>& x) const {
        for (const auto& cons : prog.constraints) {
            long long s = 0;
            for (auto [i, a] : cons.terms) s += a * x[i];
            if (cons.rel == Rel::Eq && s != cons.rhs) return false;
            if (cons.rel == Rel::Le && s > cons.rhs) return false;
            if (cons.rel == Rel::Ge && s < cons.rhs) return false;
        }
        return true;
    }

    void dfs() {
        if ((++ticks & 0xff) == 0) check_deadline(deadline);
        if (!propagate()) return;
        if (best && objective_lower_bound() >= best->objective) return;

        int pick = -1;
        long long pick_span = 0;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            long long span = hi[i] - lo[i];
            if (span > 0 && (pick < 0 || span < pick_span)) {
                pick = static_cast<int>(i);
                pick_span = span;
            }
        }
        if (pick < 0) {
            std::vector<int> x(lo.size());
            for (std::size_t i = 0; i < lo.size(); ++i) x[i] = static_cast<int>(lo[i]);
            if (!feasible_exact(x)) return;
            long long obj = 0;
            for (std::size_t i = 0; i < x.size(); ++i) obj += prog.objective[i] * x[i];
            if (!best || obj < best->objective) best = Solution{obj, std::move(x)};
            return;
        }

        auto save_lo = lo, save_hi = hi;
        for (long long v = save_lo[pick]; v <= save_hi[pick]; ++v) {
            lo = save_lo;
            hi = save_hi;
            lo[pick] = hi[pick] = v;
            dfs();
        }
        lo = save_lo;
        hi = save_hi;
    }
};

}  // namespace

std::optional<Solution> solve(const Program& program, const Deadline* deadline) {
    const std::size_t nv = program.upper.size();
    assert(program.objective.size() == nv);
    for (const auto& cons : program.constraints)
        for (auto [i, a] : cons.terms) {
            assert(i >= 0 && static_cast<std::size_t>(i) < nv);
            (void)a;
        }

    Search s{program, deadline, {}, {}, {}, 0};
    s.lo.assign(nv, 0);
    s.hi.assign(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) s.hi[i] = program.upper[i];
    s.dfs();
    if (s.best) assert(s.feasible_exact(s.best->assignment));
    return s.best;
}

}  // namespace bip
}  // namespace fcc
