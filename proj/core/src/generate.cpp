#include "fcc/generate.hpp"

#include <algorithm>
#include <numeric>

namespace fcc {

Family family_from_string(const std::string& s) {
    if (s == "gnp") return Family::Gnp;
    if (s == "tree") return Family::Tree;
    if (s == "ktree") return Family::KTree;
    if (s == "star-forest") return Family::StarForest;
    throw ParamError("unknown family '" + s + "' (expected gnp|tree|ktree|star-forest)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Gnp: return "gnp";
        case Family::Tree: return "tree";
        case Family::KTree: return "ktree";
        case Family::StarForest: return "star-forest";
    }
    return "?";
}

namespace {

std::vector<std::pair<int, int>> gnp_edges(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.unit() < p) edges.emplace_back(u, v);
    return edges;
}

// uniform labeled tree via Pruefer decoding
std::vector<std::pair<int, int>> tree_edges(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    if (n < 2) return edges;
    if (n == 2) return {{1, 2}};
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = 1 + static_cast<int>(rng.below(n));
    std::vector<int> degree(n + 1, 1);
    for (int x : pruefer) ++degree[x];
    std::vector<char> used(n + 1, 0);
    for (int x : pruefer) {
        int leaf = 0;
        for (int v = 1; v <= n; ++v)
            if (degree[v] == 1 && !used[v]) { leaf = v; break; }
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        used[leaf] = 1;
        --degree[x];
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1 && !used[v]) (a == 0 ? a : b) = v;
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

std::vector<std::pair<int, int>> ktree_edges(int n, int k, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    int base = std::min(n, k + 1);
    for (int u = 1; u <= base; ++u)
        for (int v = u + 1; v <= base; ++v) edges.emplace_back(u, v);
    if (n <= k + 1) return edges;
    // faces: the k-cliques a new vertex may attach to
    std::vector<std::vector<int>> faces;
    for (int skip = 1; skip <= k + 1; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= k + 1; ++v)
            if (v != skip) f.push_back(v);
        faces.push_back(std::move(f));
    }
    for (int v = k + 2; v <= n; ++v) {
        const auto face = faces[rng.below(faces.size())];
        for (int u : face) edges.emplace_back(std::min(u, v), std::max(u, v));
        for (int skip = 0; skip < k; ++skip) {
            std::vector<int> f;
            for (int i = 0; i < k; ++i)
                if (i != skip) f.push_back(face[i]);
            f.push_back(v);
            std::sort(f.begin(), f.end());
            faces.push_back(std::move(f));
        }
    }
    return edges;
}

std::vector<std::pair<int, int>> star_forest_edges(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    int v = 1;
    while (v <= n) {
        int remaining = n - v + 1;
        int size = 1 + static_cast<int>(rng.below(remaining));  // star on `size` vertices
        int center = v;
        for (int leaf = v + 1; leaf < v + size; ++leaf) edges.emplace_back(center, leaf);
        v += size;
    }
    return edges;
}

}  // namespace

ColoredInstance generate(const GenSpec& spec) {
    if (spec.n < 1) throw ParamError("n must be positive");
    if (spec.fairlet.empty()) throw ParamError("fairlet vector must be nonempty");
    for (int c : spec.fairlet)
        if (c < 1) throw ParamError("fairlet entries must be positive");
    int ctilde = std::accumulate(spec.fairlet.begin(), spec.fairlet.end(), 0);
    if (spec.n % ctilde != 0)
        throw ParamError("n = " + std::to_string(spec.n) +
                         " is not divisible by the fairlet size " + std::to_string(ctilde));

    Rng rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
        case Family::Gnp: edges = gnp_edges(spec.n, spec.p, rng); break;
        case Family::Tree: edges = tree_edges(spec.n, rng); break;
        case Family::KTree: edges = ktree_edges(spec.n, spec.k, rng); break;
        case Family::StarForest: edges = star_forest_edges(spec.n, rng); break;
    }

    // exact color counts: (n / ctilde) copies of the fairlet, shuffled
    std::vector<int> colors;
    colors.reserve(spec.n);
    int copies = spec.n / ctilde;
    for (std::size_t i = 0; i < spec.fairlet.size(); ++i)
        for (int j = 0; j < spec.fairlet[i] * copies; ++j)
            colors.push_back(static_cast<int>(i) + 1);
    for (std::size_t i = colors.size() - 1; i > 0; --i)
        std::swap(colors[i], colors[rng.below(i + 1)]);

    return ColoredInstance::create(spec.n, std::move(edges), std::move(colors),
                                   static_cast<int>(spec.fairlet.size()));
}

}  // namespace fcc
