#include "fcc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fcc {

ColoredInstance ColoredInstance::create(int n, std::vector<std::pair<int, int>> edges,
                                        std::vector<int> colors, int kappa,
                                        std::optional<int> budget) {
    if (n < 1) throw ValidationError("instance must have at least one vertex");
    if (kappa < 1 || kappa > n)
        throw ValidationError("kappa must be in 1..n, got " + std::to_string(kappa));
    if (static_cast<int>(colors.size()) == n) {
        // accept 0-based dense input, shift to 1-based
        colors.insert(colors.begin(), 0);
    }
    if (static_cast<int>(colors.size()) != n + 1)
        throw ValidationError("coloring must assign every vertex 1..n");

    ColoredInstance g;
    g.n_ = n;
    g.kappa_ = kappa;
    g.color_ = std::move(colors);
    g.color_counts_.assign(kappa, 0);
    for (int v = 1; v <= n; ++v) {
        int c = g.color_[v];
        if (c < 1 || c > kappa)
            throw ValidationError("vertex " + std::to_string(v) + " has color " +
                                  std::to_string(c) + " outside 1.." + std::to_string(kappa));
        ++g.color_counts_[c - 1];
    }
    for (int c = 1; c <= kappa; ++c)
        if (g.color_counts_[c - 1] == 0)
            throw ValidationError("color " + std::to_string(c) + " is unused");

    for (auto& [u, v] : edges) {
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (u < 1 || v < 1 || u > n || v > n)
            throw ValidationError("edge endpoint outside 1..n");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ValidationError("duplicate edge");
    g.edges_ = std::move(edges);

    if (budget && *budget < 0) throw ValidationError("budget must be nonnegative");
    g.budget_ = budget;

    g.adj_.assign(n + 1, std::vector<char>(n + 1, 0));
    g.nbrs_.assign(n + 1, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u][v] = g.adj_[v][u] = 1;
        g.nbrs_[u].push_back(v);
        g.nbrs_[v].push_back(u);
    }
    for (auto& lst : g.nbrs_) std::sort(lst.begin(), lst.end());
    return g;
}

ColoredInstance ColoredInstance::with_budget(std::optional<int> b) const {
    ColoredInstance g = *this;
    if (b && *b < 0) throw ValidationError("budget must be nonnegative");
    g.budget_ = b;
    return g;
}

ColoredInstance ColoredInstance::recolored(std::vector<int> colors, int kappa) const {
    return create(n_, edges_, std::move(colors), kappa, budget_);
}

ColoredInstance ColoredInstance::without_edges(
    const std::vector<std::pair<int, int>>& removed) const {
    std::vector<std::pair<int, int>> keep;
    keep.reserve(edges_.size());
    auto norm = [](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    std::vector<std::pair<int, int>> gone;
    gone.reserve(removed.size());
    for (auto e : removed) gone.push_back(norm(e));
    std::sort(gone.begin(), gone.end());
    for (auto e : edges_)
        if (!std::binary_search(gone.begin(), gone.end(), e)) keep.push_back(e);
    return create(n_, std::move(keep), color_, kappa_, budget_);
}

FairletVector compute_fairlet(const ColoredInstance& instance) {
    const auto& counts = instance.color_counts();
    int g = 0;
    for (int c : counts) g = std::gcd(g, c);
    FairletVector f;
    f.counts.reserve(counts.size());
    for (int c : counts) {
        f.counts.push_back(c / g);
        f.size += c / g;
    }
    return f;
}

Clustering Clustering::of(std::vector<std::vector<int>> parts) {
    Clustering c;
    c.clusters = std::move(parts);
    c.canonicalize();
    return c;
}

void Clustering::canonicalize() {
    for (auto& cl : clusters) std::sort(cl.begin(), cl.end());
    std::sort(clusters.begin(), clusters.end());
}

void validate_partition(const ColoredInstance& instance, const Clustering& c) {
    std::vector<char> seen(instance.n() + 1, 0);
    int total = 0;
    for (const auto& cluster : c.clusters) {
        if (cluster.empty()) throw ValidationError("empty cluster");
        for (int v : cluster) {
            if (v < 1 || v > instance.n())
                throw ValidationError("cluster vertex " + std::to_string(v) +
                                      " outside 1.." + std::to_string(instance.n()));
            if (seen[v])
                throw ValidationError("vertex " + std::to_string(v) +
                                      " appears in two clusters");
            seen[v] = 1;
            ++total;
        }
    }
    if (total != instance.n())
        throw ValidationError("clustering covers " + std::to_string(total) + " of " +
                              std::to_string(instance.n()) + " vertices");
}

std::string to_string(const Clustering& c) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < c.clusters.size(); ++i) {
        os << (i ? " {" : "{");
        for (std::size_t j = 0; j < c.clusters[i].size(); ++j)
            os << (j ? "," : "") << c.clusters[i][j];
        os << "}";
    }
    os << "}";
    return os.str();
}

}  // namespace fcc
