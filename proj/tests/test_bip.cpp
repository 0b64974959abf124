#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcc/bip.hpp"

using namespace fcc;
using namespace fcc::bip;

namespace {

// reference: full grid search over the bounded domains
std::optional<Solution> grid_solve(const Program& p) {
    std::optional<Solution> best;
    std::vector<int> x(p.upper.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            for (const auto& cons : p.constraints) {
                long long s = 0;
                for (auto [j, a] : cons.terms) s += a * x[j];
                if (cons.rel == Rel::Eq && s != cons.rhs) return;
                if (cons.rel == Rel::Le && s > cons.rhs) return;
                if (cons.rel == Rel::Ge && s < cons.rhs) return;
            }
            long long obj = 0;
            for (std::size_t j = 0; j < x.size(); ++j) obj += p.objective[j] * x[j];
            if (!best || obj < best->objective) best = Solution{obj, x};
            return;
        }
        for (x[i] = 0; x[i] <= p.upper[i]; ++x[i]) rec(i + 1);
        x[i] = 0;
    };
    rec(0);
    return best;
}

Program random_program(Rng& rng) {
    Program p;
    int nv = 1 + static_cast<int>(rng.below(6));
    for (int i = 0; i < nv; ++i) {
        p.upper.push_back(static_cast<int>(rng.below(6)));
        p.objective.push_back(static_cast<int>(rng.below(11)) - 3);
    }
    int nc = 1 + static_cast<int>(rng.below(4));
    for (int c = 0; c < nc; ++c) {
        Constraint cons;
        for (int i = 0; i < nv; ++i) {
            int a = static_cast<int>(rng.below(7)) - 3;
            if (a != 0) cons.terms.emplace_back(i, a);
        }
        cons.rel = static_cast<Rel>(rng.below(3));
        cons.rhs = static_cast<int>(rng.below(13)) - 3;
        p.constraints.push_back(std::move(cons));
    }
    return p;
}

}  // namespace

TEST_CASE("forced assignment") {
    Program p;
    p.upper = {10};
    p.objective = {1};
    p.constraints.push_back({{{0, 1}}, Rel::Eq, 3});
    auto s = solve(p);
    REQUIRE(s.has_value());
    CHECK(s->objective == 3);
    CHECK(s->assignment == std::vector<int>{3});
}

TEST_CASE("infeasible program") {
    Program p;
    p.upper = {0, 0};
    p.objective = {0, 0};
    p.constraints.push_back({{{0, 1}, {1, 1}}, Rel::Eq, 1});
    CHECK_FALSE(solve(p).has_value());
}

TEST_CASE("negative objective coefficients") {
    Program p;
    p.upper = {5, 5};
    p.objective = {-2, 1};
    p.constraints.push_back({{{0, 1}, {1, 1}}, Rel::Le, 6});
    auto s = solve(p);
    REQUIRE(s.has_value());
    CHECK(s->objective == -10);  // x0 = 5, x1 = 0
}

TEST_CASE("random programs match grid search") {
    Rng rng(71);
    int solved = 0;
    for (int iter = 0; iter < 250; ++iter) {
        Program p = random_program(rng);
        auto got = solve(p);
        auto want = grid_solve(p);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->objective == want->objective);
            ++solved;
        }
    }
    CHECK(solved > 50);  // the generator must not be degenerate
}

TEST_CASE("variable order does not change the optimum") {
    Rng rng(73);
    for (int iter = 0; iter < 60; ++iter) {
        Program p = random_program(rng);
        // reversed-variable copy
        int nv = static_cast<int>(p.upper.size());
        Program q;
        q.upper.assign(p.upper.rbegin(), p.upper.rend());
        q.objective.assign(p.objective.rbegin(), p.objective.rend());
        for (const auto& cons : p.constraints) {
            Constraint rc;
            rc.rel = cons.rel;
            rc.rhs = cons.rhs;
            for (auto [i, a] : cons.terms) rc.terms.emplace_back(nv - 1 - i, a);
            q.constraints.push_back(std::move(rc));
        }
        auto sp = solve(p);
        auto sq = solve(q);
        REQUIRE(sp.has_value() == sq.has_value());
        if (sp) CHECK(sp->objective == sq->objective);
    }
}
