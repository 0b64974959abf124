#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fcc/bench.hpp"
#include "fcc/generate.hpp"
#include "fcc/io.hpp"
#include "fcc/oracle.hpp"
#include "helpers.hpp"

using namespace fcc;
using namespace fcc::testing;

TEST_CASE("parse the shipped demo instance") {
    auto g = load_instance(std::string(FCC_DATA_DIR) + "/fig1.fcc");
    CHECK(g.n() == 9);
    CHECK(g.m() == 13);
    CHECK(g.kappa() == 2);
    CHECK(compute_fairlet(g).counts == std::vector<int>{2, 1});
    // the file matches the built-in fixture
    auto fx = fig1();
    CHECK(g.edges() == fx.edges());
    CHECK(g.colors() == fx.colors());
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("duplicate edge") {
        std::istringstream in("p fcc 2 2 1\nn 1 1\nn 2 1\ne 1 2\ne 1 2\n");
        try {
            parse_instance(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);
        }
    }
    SUBCASE("missing edges vs header") {
        std::istringstream in("p fcc 3 3 1\nn 1 1\nn 2 1\nn 3 1\ne 1 2\ne 2 3\n");
        CHECK_THROWS_WITH_AS(parse_instance(in), doctest::Contains("announces 3 edges"),
                             ParseError);
    }
    SUBCASE("self-loop") {
        std::istringstream in("p fcc 2 1 1\nn 1 1\nn 2 1\ne 2 2\n");
        try {
            parse_instance(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
            CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        }
    }
    SUBCASE("empty instance") {
        std::istringstream in("p fcc 0 0 1\n");
        CHECK_THROWS_AS(parse_instance(in), ParseError);
    }
    SUBCASE("unused color") {
        std::istringstream in("p fcc 2 0 2\nn 1 1\nn 2 1\n");
        CHECK_THROWS_AS(parse_instance(in), ParseError);
    }
    SUBCASE("edge order") {
        std::istringstream in("p fcc 2 1 1\nn 1 1\nn 2 1\ne 2 1\n");
        CHECK_THROWS_WITH_AS(parse_instance(in), doctest::Contains("u < v"), ParseError);
    }
}

TEST_CASE("instance round-trip is lossless") {
    Rng rng(139);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::vector<int>> fairlets{{1}, {1, 1}, {2, 1}, {1, 1, 1}};
        auto fl = fairlets[rng.below(4)];
        int ctilde = 0;
        for (int c : fl) ctilde += c;
        int n = ctilde * static_cast<int>(1 + rng.below(3));
        if (n < static_cast<int>(fl.size())) continue;
        auto g = generate({Family::Gnp, n, 0.5, 2, fl, rng.next()});
        std::string text = write_instance(g);
        std::istringstream in(text);
        auto h = parse_instance(in);
        CHECK(g.n() == h.n());
        CHECK(g.kappa() == h.kappa());
        CHECK(g.edges() == h.edges());
        CHECK(g.colors() == h.colors());
        CHECK(write_instance(h) == text);
    }
}

TEST_CASE("pace decomposition round-trip") {
    auto g = fig1();
    auto td = tree_decomposition(g, DecompMode::Exact);
    std::string text = write_pace_td(td, g.n());
    std::istringstream in(text);
    auto back = parse_pace_td(in);
    CHECK(back.bags == td.bags);
    validate_tree_decomposition(g, back);

    std::istringstream bad("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n1 2\n");
    // duplicate tree edge makes it not a tree
    auto td2 = parse_pace_td(bad);
    CHECK_THROWS_AS(validate_tree_decomposition(g, td2), ValidationError);
}

TEST_CASE("forest file round-trip") {
    auto g = fig1();
    auto f = treedepth_forest(g, DecompMode::Exact);
    std::string text = write_forest(f);
    std::istringstream in(text);
    auto back = parse_forest(in, g.n());
    CHECK(back.parent == f.parent);
    CHECK(back.height == f.height);

    std::istringstream cyclic("1 2\n2 1\n");
    CHECK_THROWS_AS(parse_forest(cyclic, 2), ParseError);
}

TEST_CASE("generator determinism and families") {
    GenSpec spec{Family::Tree, 9, 0.5, 2, {2, 1}, 12345};
    auto a = generate(spec);
    auto b = generate(spec);
    CHECK(write_instance(a) == write_instance(b));
    CHECK(a.m() == 8);  // a tree
    CHECK(a.color_counts() == std::vector<int>{6, 3});

    auto empty = generate({Family::Gnp, 6, 0.0, 2, {1, 1}, 7});
    CHECK(empty.m() == 0);

    auto dense = generate({Family::Gnp, 6, 1.0, 2, {1, 1}, 7});
    CHECK(dense.m() == 15);

    CHECK_THROWS_AS(generate({Family::Tree, 7, 0.5, 2, {1, 1}, 1}), ParamError);

    // star forests decompose into stars: every component has at most one
    // vertex of degree > 1
    auto sf = generate({Family::StarForest, 12, 0.5, 2, {1, 1}, 99});
    for (int v = 1; v <= sf.n(); ++v) {
        if (sf.degree(v) <= 1) continue;
        for (int u : sf.neighbors(v)) CHECK(sf.degree(u) == 1);
    }
}

TEST_CASE("reports verify after a JSON round-trip") {
    auto g = fig1();
    SolveOptions opts;
    opts.budget = 9;
    auto rep = run_solver(g, Algo::Vc, opts);
    CHECK(rep.cost == 8);
    CHECK(rep.fair);
    CHECK(rep.within_budget == true);
    auto j = report_to_json(rep);
    auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(verify_report(g, back));
    CHECK(back.parameters.at("k") == 5);

    // tampering breaks verification
    back.cost += 1;
    CHECK_FALSE(verify_report(g, back));
}

TEST_CASE("run_solver honors decomposition files") {
    auto g = fig1();
    auto td = tree_decomposition(g, DecompMode::Exact);
    std::string path = "/tmp/fcc_test_fig1.td";
    {
        std::ofstream out(path);
        out << write_pace_td(td, g.n());
    }
    SolveOptions opts;
    opts.decomposition_file = path;
    auto rep = run_solver(g, Algo::TwXp, opts);
    CHECK(rep.cost == 8);
}

TEST_CASE("bench agrees across the shipped corpus") {
    std::vector<std::string> files;
    for (const auto& entry :
         std::filesystem::directory_iterator(std::string(FCC_DATA_DIR) + "/corpus"))
        if (entry.path().extension() == ".fcc") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    REQUIRE(files.size() >= 10);
    BenchOptions opts;
    opts.timeout_s = 60;
    auto res = run_bench(files, opts);
    CHECK(res.all_agree);
    for (const auto& cell : res.cells)
        CHECK((cell.status == "ok" || cell.status == "skip"));
}

TEST_CASE("bench records costs, agreement and timeouts") {
    std::string dir = "/tmp/fcc_bench_test";
    std::filesystem::create_directories(dir);
    save_instance(fig1(), dir + "/a.fcc");
    save_instance(fig1_mono(), dir + "/b.fcc");

    BenchOptions opts;
    opts.algos = {Algo::Oracle, Algo::Vc, Algo::TwXp};
    opts.timeout_s = 60;
    auto res = run_bench({dir + "/a.fcc", dir + "/b.fcc"}, opts);
    CHECK(res.all_agree);
    CHECK(res.cells.size() == 6);
    for (const auto& cell : res.cells) CHECK(cell.status == "ok");
    auto tsv = res.to_tsv();
    CHECK(tsv.find("agree") != std::string::npos);
    CHECK(tsv.find("false") == std::string::npos);

    // a tiny timeout must be recorded, not fatal
    BenchOptions tiny;
    tiny.algos = {Algo::Oracle};
    tiny.timeout_s = 1e-9;
    tiny.oracle_cap = 20;
    save_instance(generate({Family::Gnp, 12, 0.5, 2, {1, 1}, 3}), dir + "/slow.fcc");
    auto slow = run_bench({dir + "/slow.fcc"}, tiny);
    REQUIRE(slow.cells.size() == 1);
    CHECK(slow.cells[0].status == "timeout");

    // worker pool gives the same cells (timings aside)
    BenchOptions parallel = opts;
    parallel.jobs = 4;
    auto res2 = run_bench({dir + "/a.fcc", dir + "/b.fcc"}, parallel);
    REQUIRE(res2.cells.size() == res.cells.size());
    for (std::size_t i = 0; i < res.cells.size(); ++i) {
        CHECK(res2.cells[i].instance == res.cells[i].instance);
        CHECK(res2.cells[i].algo == res.cells[i].algo);
        CHECK(res2.cells[i].status == res.cells[i].status);
        CHECK(res2.cells[i].cost == res.cells[i].cost);
    }
}
