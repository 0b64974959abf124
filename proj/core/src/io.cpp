#include "fcc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fcc {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

}  // namespace

ColoredInstance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1, kappa = -1;
    std::vector<int> colors;
    std::vector<char> color_seen;
    std::vector<std::pair<int, int>> edges;
    int n_lines = 0, e_lines = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 5 || toks[1] != "fcc")
                throw ParseError(lineno, "header must be 'p fcc <n> <m> <kappa>'");
            n = parse_int(toks[2], lineno);
            m = parse_int(toks[3], lineno);
            kappa = parse_int(toks[4], lineno);
            if (n < 1) throw ParseError(lineno, "instance must have at least one vertex");
            if (m < 0 || kappa < 1) throw ParseError(lineno, "invalid header counts");
            colors.assign(n + 1, 0);
            color_seen.assign(n + 1, 0);
        } else if (toks[0] == "n") {
            if (n < 0) throw ParseError(lineno, "vertex line before header");
            if (toks.size() != 3) throw ParseError(lineno, "vertex line must be 'n <vertex> <color>'");
            int v = parse_int(toks[1], lineno);
            int c = parse_int(toks[2], lineno);
            if (v < 1 || v > n) throw ParseError(lineno, "vertex id outside 1..n");
            if (color_seen[v]) throw ParseError(lineno, "duplicate color line for vertex " + std::to_string(v));
            if (c < 1 || c > kappa) throw ParseError(lineno, "color outside 1..kappa");
            color_seen[v] = 1;
            colors[v] = c;
            ++n_lines;
        } else if (toks[0] == "e") {
            if (n < 0) throw ParseError(lineno, "edge line before header");
            if (toks.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
            int u = parse_int(toks[1], lineno);
            int v = parse_int(toks[2], lineno);
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(lineno, "edge endpoint outside 1..n");
            if (u > v) throw ParseError(lineno, "edge lines must satisfy u < v");
            edges.emplace_back(u, v);
            ++e_lines;
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'p fcc' header");
    if (n_lines != n)
        throw ParseError(lineno, "header announces " + std::to_string(n) + " vertices but " +
                                     std::to_string(n_lines) + " 'n' lines were given");
    if (e_lines != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges but " +
                                     std::to_string(e_lines) + " 'e' lines were given");
    try {
        return ColoredInstance::create(n, std::move(edges), std::move(colors), kappa);
    } catch (const ValidationError& e) {
        throw ParseError(lineno, e.what());
    }
}

ColoredInstance load_instance(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_instance(in);
}

std::string write_instance(const ColoredInstance& instance) {
    std::ostringstream os;
    os << "p fcc " << instance.n() << " " << instance.m() << " " << instance.kappa() << "\n";
    for (int v = 1; v <= instance.n(); ++v)
        os << "n " << v << " " << instance.color(v) << "\n";
    for (auto [u, v] : instance.edges()) os << "e " << u << " " << v << "\n";
    return os.str();
}

void save_instance(const ColoredInstance& instance, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << write_instance(instance);
}

RawTreeDecomposition parse_pace_td(std::istream& in) {
    std::string line;
    int lineno = 0;
    int bags = -1, n = -1, width_plus = -1;
    RawTreeDecomposition td;
    std::vector<char> bag_seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (bags >= 0) throw ParseError(lineno, "duplicate solution header");
            if (toks.size() != 5 || toks[1] != "td")
                throw ParseError(lineno, "header must be 's td <bags> <width+1> <n>'");
            bags = parse_int(toks[2], lineno);
            width_plus = parse_int(toks[3], lineno);
            n = parse_int(toks[4], lineno);
            if (bags < 1) throw ParseError(lineno, "need at least one bag");
            td.bags.assign(bags, {});
            bag_seen.assign(bags + 1, 0);
        } else if (toks[0] == "b") {
            if (bags < 0) throw ParseError(lineno, "bag line before header");
            if (toks.size() < 2) throw ParseError(lineno, "bag line must be 'b <id> <vertices...>'");
            int id = parse_int(toks[1], lineno);
            if (id < 1 || id > bags) throw ParseError(lineno, "bag id outside 1..bags");
            if (bag_seen[id]) throw ParseError(lineno, "duplicate bag " + std::to_string(id));
            bag_seen[id] = 1;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                int v = parse_int(toks[i], lineno);
                if (v < 1 || v > n) throw ParseError(lineno, "bag vertex outside 1..n");
                td.bags[id - 1].push_back(v);
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            td.bags[id - 1].erase(
                std::unique(td.bags[id - 1].begin(), td.bags[id - 1].end()),
                td.bags[id - 1].end());
        } else {
            if (bags < 0) throw ParseError(lineno, "tree edge before header");
            if (toks.size() != 2) throw ParseError(lineno, "tree edge must be '<x> <y>'");
            int x = parse_int(toks[0], lineno);
            int y = parse_int(toks[1], lineno);
            if (x < 1 || x > bags || y < 1 || y > bags)
                throw ParseError(lineno, "tree edge bag id outside 1..bags");
            td.tree_edges.emplace_back(x - 1, y - 1);
        }
    }
    if (bags < 0) throw ParseError(lineno, "missing 's td' header");
    for (int i = 1; i <= bags; ++i)
        if (!bag_seen[i]) throw ParseError(lineno, "bag " + std::to_string(i) + " missing");
    if (td.width() + 1 != width_plus)
        throw ParseError(lineno, "header width " + std::to_string(width_plus) +
                                     " does not match bags (" +
                                     std::to_string(td.width() + 1) + ")");
    return td;
}

RawTreeDecomposition load_pace_td(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_pace_td(in);
}

std::string write_pace_td(const RawTreeDecomposition& td, int n) {
    std::ostringstream os;
    os << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        os << "b " << i + 1;
        for (int v : td.bags[i]) os << " " << v;
        os << "\n";
    }
    for (auto [x, y] : td.tree_edges) os << x + 1 << " " << y + 1 << "\n";
    return os.str();
}

TreedepthForest parse_forest(std::istream& in, int n) {
    TreedepthForest f;
    f.parent.assign(n + 1, -1);
    f.parent[0] = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks.size() != 2) throw ParseError(lineno, "forest line must be '<vertex> <parent-or-0>'");
        int v = parse_int(toks[0], lineno);
        int p = parse_int(toks[1], lineno);
        if (v < 1 || v > n) throw ParseError(lineno, "vertex outside 1..n");
        if (p < 0 || p > n || p == v) throw ParseError(lineno, "invalid parent");
        if (f.parent[v] != -1) throw ParseError(lineno, "duplicate line for vertex " + std::to_string(v));
        f.parent[v] = p;
    }
    for (int v = 1; v <= n; ++v)
        if (f.parent[v] == -1)
            throw ParseError(lineno, "missing line for vertex " + std::to_string(v));
    for (int v = 1; v <= n; ++v) {
        int steps = 0;
        for (int u = v; u != 0; u = f.parent[u])
            if (++steps > n) throw ParseError(lineno, "forest contains a cycle");
    }
    auto depths = forest_depths(f);
    f.height = *std::max_element(depths.begin() + 1, depths.end());
    return f;
}

TreedepthForest load_forest(const std::string& path, int n) {
    auto in = open_or_throw(path);
    return parse_forest(in, n);
}

std::string write_forest(const TreedepthForest& forest) {
    std::ostringstream os;
    for (std::size_t v = 1; v < forest.parent.size(); ++v)
        os << v << " " << forest.parent[v] << "\n";
    return os.str();
}

}  // namespace fcc
