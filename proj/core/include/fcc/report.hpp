#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "fcc/oracle.hpp"

namespace fcc {

enum class Algo { Oracle, Vc, TwXp, TwFpt2, Td };

Algo algo_from_string(const std::string& s);
std::string algo_name(Algo a);

struct SolveOptions {
    std::optional<int> budget;
    std::optional<std::string> decomposition_file;  // PACE file for tw-*, parent list for td
    std::optional<int> gamma;                       // solver_td cap override
    int oracle_cap = 12;
    int exact_decomp_cap = 14;                      // exact tree decomposition / treedepth limit
    std::optional<double> timeout_s;
};

struct SolutionReport {
    std::string solver;
    std::map<std::string, int> parameters;  // k / width / height / ctilde / kappa / gamma
    int cost = 0;
    std::vector<std::vector<int>> clusters;
    bool fair = false;
    double wall_seconds = 0;
    std::optional<int> budget;
    std::optional<bool> within_budget;
};

/// Dispatches to the requested solver and assembles the report.
/// Throws ParamError on violated solver preconditions and TimeoutError when
/// the optional deadline expires.
SolutionReport run_solver(const ColoredInstance& instance, Algo algo,
                          const SolveOptions& options);

nlohmann::json report_to_json(const SolutionReport& report);
SolutionReport report_from_json(const nlohmann::json& j);

/// Re-checks a (possibly re-read) report against the instance: valid fair
/// partition, matching cost, and the budget decision if one was recorded.
bool verify_report(const ColoredInstance& instance, const SolutionReport& report);

std::string format_report_text(const SolutionReport& report);

}  // namespace fcc
