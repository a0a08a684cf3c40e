#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expind/characterize.hpp"
#include "expind/families.hpp"
#include "expind/json_io.hpp"
#include "expind/solver.hpp"
#include "expind/trees.hpp"
#include "expind/verify.hpp"
#include "expind/weights.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

expind::Graph load_graph(const std::string& path, bool graph6) {
    std::string text = slurp(path);
    if (!graph6) return expind::from_edge_list(text);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) return expind::parse_graph6(line);
    throw std::runtime_error("empty graph6 input");
}

expind::VertexSet parse_set(const std::string& spec) {
    std::vector<int> ids;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) ids.push_back(std::stoi(tok));
    auto s = expind::normalized_set(std::move(ids));
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace expind;
    CLI::App app{"Exact exponential independence toolkit"};
    app.require_subcommand(1);

    std::string file = "-", mode, set_spec, family, theorem, output;
    bool graph6 = false, describe = false;
    int vertex = -1, param_k = 0, param_n = 0, max_n = 0;
    std::uint64_t budget = kDefaultNodeBudget, seed = 0;
    int threads = 1;
    if (const char* env = std::getenv("EXPIND_THREADS")) threads = std::max(1, std::atoi(env));

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "edge-list file or - for stdin");
        cmd->add_flag("--graph6", graph6, "input is a graph6 record");
    };

    auto* compute = app.add_subcommand("compute", "alpha, alpha-e or all-max of a graph");
    compute->add_option("invariant", mode)->required()->check(CLI::IsMember({"alpha", "alpha-e", "all-max"}));
    add_input(compute);
    compute->add_option("--budget", budget, "node budget");

    auto* check = app.add_subcommand("check", "test a vertex set (eis or eds)");
    check->add_option("kind", mode)->required()->check(CLI::IsMember({"eis", "eds"}));
    add_input(check);
    check->add_option("--set", set_spec, "comma-separated vertex ids")->required();

    auto* weight_cmd = app.add_subcommand("weight", "weight report of a vertex against a set");
    add_input(weight_cmd);
    weight_cmd->add_option("--set", set_spec)->required();
    weight_cmd->add_option("--vertex", vertex)->required();

    auto* gen = app.add_subcommand("gen", "generate a named family member as an edge list");
    gen->add_option("family", family)->required();
    gen->add_option("--k", param_k, "family parameter");
    gen->add_option("--n", param_n, "order (path/cycle/fbt)");
    gen->add_flag("--describe", describe, "print the role labeling as JSON instead");

    auto* family_check = app.add_subcommand("family-check", "membership in the alpha_e = alpha tree family");
    add_input(family_check);

    auto* free_check = app.add_subcommand("free-check", "{K_{1,3}, P_5, bull}-freeness");
    add_input(free_check);

    auto* classify = app.add_subcommand("classify", "extremal classification report");
    add_input(classify);
    classify->add_option("--budget", budget);

    auto* verify = app.add_subcommand("verify", "run a theorem verification harness");
    verify->add_option("theorem", theorem)->required();
    verify->add_option("--max-n", max_n, "parameter range override");
    verify->add_option("--seed", seed, "seed for randomized suites");
    verify->add_option("--budget", budget);
    verify->add_option("--output", output, "write the JSON-lines report to a file");

    auto* enumerate = app.add_subcommand("enumerate", "free trees or full binary trees of an order");
    enumerate->add_option("kind", mode)->required()->check(CLI::IsMember({"trees", "fbt"}));
    enumerate->add_option("--n", param_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) {
            Graph g = load_graph(file, graph6);
            if (mode == "all-max") {
                auto result = alpha_e_all_max(g, budget);
                nlohmann::json witnesses = nlohmann::json::array();
                for (const auto& w : result.witnesses) witnesses.push_back(w);
                std::cout << nlohmann::json{{"invariant", "alpha_e_all_max"},
                                            {"value", result.value},
                                            {"witnesses", witnesses},
                                            {"nodes", result.nodes_explored},
                                            {"ms", result.elapsed.count()}}
                                 .dump()
                          << '\n';
            } else {
                auto result = mode == "alpha" ? alpha(g, budget) : alpha_e(g, budget);
                std::cout << solve_result_json(result, mode == "alpha" ? "alpha" : "alpha_e").dump()
                          << '\n';
            }
        } else if (*check) {
            Graph g = load_graph(file, graph6);
            VertexSet s = parse_set(set_spec);
            std::optional<Violation> violation;
            bool holds = mode == "eis" ? is_exponential_independent(g, s, &violation)
                                       : is_exponential_dominating(g, s, &violation);
            nlohmann::json out{{"check", mode}, {"holds", holds}};
            if (violation)
                out["violation"] = {{"vertex", violation->vertex},
                                    {"weight", dyadic_json(violation->weight)}};
            std::cout << out.dump() << '\n';
            return holds ? kExitPass : kExitCheckFalse;
        } else if (*weight_cmd) {
            Graph g = load_graph(file, graph6);
            std::cout << weight_report_json(weight(g, parse_set(set_spec), vertex)).dump() << '\n';
        } else if (*gen) {
            auto kind = family_kind_from_name(family);
            if (!kind) {
                std::cerr << "unknown family: " << family << '\n';
                return kExitUsage;
            }
            int k = param_k;
            if (param_n > 0) {
                if (*kind == FamilyKind::PATH || *kind == FamilyKind::CYCLE) k = param_n;
                else if (*kind == FamilyKind::FULL_BINARY) k = (param_n + 1) / 2;
                else if (*kind == FamilyKind::STAR) k = param_n - 1;
            }
            auto [g, d] = generate(*kind, k);
            if (describe)
                std::cout << family_descriptor_json(d).dump() << '\n';
            else
                std::cout << to_edge_list(g);
        } else if (*family_check) {
            Graph g = load_graph(file, graph6);
            auto member = t_membership(g);
            if (member)
                std::cout << nlohmann::json{{"member", true},
                                            {"descriptor", family_descriptor_json(*member)}}
                                 .dump()
                          << '\n';
            else
                std::cout << nlohmann::json{{"member", false}}.dump() << '\n';
            return member ? kExitPass : kExitCheckFalse;
        } else if (*free_check) {
            Graph g = load_graph(file, graph6);
            VertexSet offending;
            bool free = is_cpb_free(g, &offending);
            nlohmann::json out{{"cpb_free", free}};
            if (!free) out["offending"] = offending;
            std::cout << out.dump() << '\n';
            return free ? kExitPass : kExitCheckFalse;
        } else if (*classify) {
            Graph g = load_graph(file, graph6);
            std::cout << extremal_report_json(classify_extremal(g, budget)).dump() << '\n';
        } else if (*verify) {
            RunConfig config{max_n, budget, threads, seed};
            auto report = run_verify(theorem, config);
            std::string lines = verification_report_lines(report);
            if (output.empty()) {
                std::cout << lines;
            } else {
                std::ofstream out_file(output);
                if (!out_file) throw std::runtime_error("cannot open " + output);
                out_file << lines;
            }
            return report.passed ? kExitPass : kExitCheckFalse;
        } else if (*enumerate) {
            auto graphs = mode == "trees" ? enumerate_free_trees(param_n)
                                          : enumerate_full_binary(param_n);
            for (const auto& g : graphs) std::cout << to_edge_list(g) << '\n';
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "node budget exceeded; best lower bound " << e.best_lower_bound << '\n';
        return kExitBudget;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}
