#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcc/core.hpp"
#include "fcc/generate.hpp"
#include "helpers.hpp"

using namespace fcc;
using namespace fcc::testing;

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(ColoredInstance::create(0, {}, {}, 1), ValidationError);
    CHECK_THROWS_AS(ColoredInstance::create(2, {{1, 1}}, {1, 1}, 1), ValidationError);
    CHECK_THROWS_AS(ColoredInstance::create(2, {{1, 2}, {2, 1}}, {1, 1}, 1), ValidationError);
    CHECK_THROWS_AS(ColoredInstance::create(2, {{1, 3}}, {1, 1}, 1), ValidationError);
    // unused color
    CHECK_THROWS_AS(ColoredInstance::create(2, {}, {1, 1}, 2), ValidationError);
    auto g = ColoredInstance::create(3, {{2, 1}, {2, 3}}, {1, 2, 1}, 2);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
}

TEST_CASE("compute_fairlet") {
    auto f = compute_fairlet(fig1());
    CHECK(f.counts == std::vector<int>{2, 1});  // counts (6,3) -> (2,1)
    CHECK(f.size == 3);

    auto g44 = generate({Family::Gnp, 8, 0.5, 2, {1, 1}, 7});
    auto f44 = compute_fairlet(g44);  // counts (4,4) -> (1,1)
    CHECK(f44.counts == std::vector<int>{1, 1});
    CHECK(f44.size == 2);

    auto g64 = ColoredInstance::create(10, {}, {1, 1, 1, 1, 1, 1, 2, 2, 2, 2}, 2);
    auto f64 = compute_fairlet(g64);  // counts (6,4) -> (3,2)
    CHECK(f64.counts == std::vector<int>{3, 2});
    CHECK(f64.size == 5);
}

TEST_CASE("clustering_cost on the demo instance") {
    auto g = fig1();
    // fairness-oblivious optimum from the instance's source drawing
    Clustering oblivious = Clustering::of({{1, 2, 3, 4, 5}, {6, 7, 8}, {9}});
    CHECK(clustering_cost(g, oblivious) == 4);
    // fair optimum
    Clustering fair = Clustering::of({{1, 2, 3, 4, 5, 9}, {6, 7, 8}});
    CHECK(clustering_cost(g, fair) == 9);
    // singletons cut every edge
    std::vector<std::vector<int>> singles;
    for (int v = 1; v <= g.n(); ++v) singles.push_back({v});
    CHECK(clustering_cost(g, Clustering::of(singles)) == g.m());
}

TEST_CASE("clustering_cost rejects invalid partitions") {
    auto g = fig1();
    CHECK_THROWS_AS(clustering_cost(g, Clustering::of({{1, 2}})), ValidationError);
    CHECK_THROWS_AS(clustering_cost(g, Clustering::of({{1, 2, 2, 3, 4, 5, 6, 7, 8, 9}})),
                    ValidationError);
}

TEST_CASE("cost_from_pair_counts equals the direct count") {
    auto g = fig1();
    // |E|=13, a=18, b=11 for the fair optimum
    Clustering fair = Clustering::of({{1, 2, 3, 4, 5, 9}, {6, 7, 8}});
    CHECK(cost_from_pair_counts(g, fair) == 9);

    // edgeless graph, single cluster of size m -> m(m-1)/2
    auto edgeless = ColoredInstance::create(5, {}, {1, 1, 1, 1, 1}, 1);
    CHECK(cost_from_pair_counts(edgeless, Clustering::of({{1, 2, 3, 4, 5}})) == 10);

    // complete graph, single cluster -> 0
    std::vector<std::pair<int, int>> km;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) km.emplace_back(u, v);
    auto complete = ColoredInstance::create(5, km, {1, 1, 1, 1, 1}, 1);
    CHECK(cost_from_pair_counts(complete, Clustering::of({{1, 2, 3, 4, 5}})) == 0);
}

TEST_CASE("cost identity on random graph/clustering pairs") {
    Rng rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng.below(9));
        GenSpec spec{Family::Gnp, n, 0.4, 2, {1}, rng.next()};
        auto g = generate(spec);
        // random partition
        std::vector<std::vector<int>> parts;
        for (int v = 1; v <= n; ++v) {
            std::size_t c = rng.below(parts.size() + 1);
            if (c == parts.size()) parts.push_back({});
            parts[c].push_back(v);
        }
        Clustering cl = Clustering::of(parts);
        int direct = clustering_cost(g, cl);
        CHECK(direct == cost_from_pair_counts(g, cl));
        CHECK(direct == naive_cost(n, g.edges(), cl.clusters));
    }
}

TEST_CASE("cost is invariant under cluster and vertex order") {
    auto g = fig1();
    Clustering a = Clustering::of({{9, 5, 4, 3, 2, 1}, {8, 7, 6}});
    Clustering b = Clustering::of({{6, 7, 8}, {1, 2, 3, 4, 5, 9}});
    CHECK(clustering_cost(g, a) == clustering_cost(g, b));
}

TEST_CASE("is_fair") {
    auto g = fig1();
    auto f = compute_fairlet(g);
    CHECK(is_fair(Clustering::of({{1, 2, 3, 4, 5, 9}, {6, 7, 8}}), f, g.colors()));
    CHECK_FALSE(is_fair(Clustering::of({{1, 2, 3, 4, 5}, {6, 7, 8}, {9}}), f, g.colors()));
    // the whole vertex set always tiles
    CHECK(is_fair(Clustering::of({{1, 2, 3, 4, 5, 6, 7, 8, 9}}), f, g.colors()));
}

TEST_CASE("single all-vertex cluster is fair on random instances") {
    Rng rng(4242);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<int> fairlet{1 + static_cast<int>(rng.below(3)),
                                 1 + static_cast<int>(rng.below(2))};
        int ctilde = fairlet[0] + fairlet[1];
        int n = ctilde * static_cast<int>(1 + rng.below(3));
        auto g = generate({Family::Gnp, n, 0.3, 2, fairlet, rng.next()});
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        CHECK(is_fair(Clustering::of({all}), compute_fairlet(g), g.colors()));
    }
}

TEST_CASE("max_cluster_size_bound") {
    CHECK(max_cluster_size_bound(1, 3) == 24);
    CHECK(max_cluster_size_bound(0, 5) == 5);
    CHECK(max_cluster_size_bound(2, 2) == 48);
}
