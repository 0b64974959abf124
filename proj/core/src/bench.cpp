#include "fcc/bench.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "fcc/core.hpp"
#include "fcc/io.hpp"

namespace fcc {

namespace {

BenchCell run_cell(const std::string& path, Algo algo, const BenchOptions& options) {
    BenchCell cell;
    cell.instance = path;
    cell.algo = algo_name(algo);
    auto start = std::chrono::steady_clock::now();
    try {
        ColoredInstance instance = load_instance(path);
        if (algo == Algo::TwFpt2 && compute_fairlet(instance).size > 2) {
            cell.status = "skip";
            cell.detail = "fairlet size above 2";
            return cell;
        }
        SolveOptions so;
        so.timeout_s = options.timeout_s;
        so.oracle_cap = options.oracle_cap;
        SolutionReport rep = run_solver(instance, algo, so);
        cell.status = "ok";
        cell.cost = rep.cost;
    } catch (const TimeoutError&) {
        cell.status = "timeout";
    } catch (const ParamError& e) {
        cell.status = "skip";
        cell.detail = e.what();
    } catch (const Error& e) {
        cell.status = "error";
        cell.detail = e.what();
    }
    cell.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cell;
}

}  // namespace

BenchResult run_bench(const std::vector<std::string>& instance_paths,
                      const BenchOptions& options) {
    struct Task {
        std::string path;
        Algo algo;
    };
    std::vector<Task> tasks;
    for (const auto& path : instance_paths)
        for (Algo algo : options.algos) tasks.push_back({path, algo});

    BenchResult result;
    result.cells.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            result.cells[i] = run_cell(tasks[i].path, tasks[i].algo, options);
        }
    };
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<std::string, std::pair<bool, std::optional<int>>> agree;  // instance -> (agree, cost)
    for (const auto& cell : result.cells) {
        if (cell.status != "ok") continue;
        auto& [ok, cost] = agree[cell.instance];
        if (!cost) {
            ok = true;
            cost = cell.cost;
        } else if (*cost != *cell.cost) {
            ok = false;
        }
    }
    for (const auto& [path, entry] : agree)
        if (!entry.first) result.all_agree = false;
    return result;
}

std::string BenchResult::to_tsv() const {
    std::map<std::string, std::pair<bool, std::optional<int>>> agree;
    for (const auto& cell : cells) {
        if (cell.status != "ok") continue;
        auto& [ok, cost] = agree[cell.instance];
        if (!cost) {
            ok = true;
            cost = cell.cost;
        } else if (*cost != *cell.cost) {
            ok = false;
        }
    }
    std::ostringstream os;
    os << "instance\talgo\tstatus\tcost\tseconds\tagree\n";
    for (const auto& cell : cells) {
        os << cell.instance << "\t" << cell.algo << "\t" << cell.status << "\t";
        if (cell.cost) os << *cell.cost;
        else os << "-";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", cell.seconds);
        os << "\t" << buf << "\t";
        auto it = agree.find(cell.instance);
        if (it == agree.end() || !it->second.second) os << "-";
        else os << (it->second.first ? "true" : "false");
        os << "\n";
    }
    return os.str();
}

}  // namespace fcc
