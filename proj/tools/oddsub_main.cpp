#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oddsub/campaign.hpp"
#include "oddsub/enumerate.hpp"
#include "oddsub/errors.hpp"
#include "oddsub/gallai.hpp"
#include "oddsub/generate.hpp"
#include "oddsub/graph.hpp"
#include "oddsub/parity.hpp"
#include "oddsub/reduce.hpp"
#include "oddsub/rng.hpp"

using nlohmann::json;
using namespace oddsub;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProofGap = 3;

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open input file " + path);
    return read_stream(f);
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    std::vector<Graph> graphs;
    if (format == "edgelist") {
        graphs.push_back(parse_edge_list(text));
        return graphs;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    if (graphs.empty()) throw ParseError("no graphs in input", 0);
    return graphs;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw PreconditionError("cannot open output file " + path);
    return file;
}

json set_json(const VertexSet& s) {
    json a = json::array();
    s.for_each([&](uint32_t v) { a.push_back(v); });
    return a;
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "graph6";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "input path, or - for stdin");
    cmd->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--output", o.output, "output path, default stdout");
}

int cmd_solve(const CommonOpts& o) {
    std::ofstream file;
    std::ostream& out = open_output(file, o.output);
    for (const Graph& g : load_graphs(o.input, o.format)) {
        SolveResult r = max_odd_induced_exact(g);
        json j;
        j["optimum"] = r.optimum;
        j["witness"] = set_json(r.witness);
        j["nodes_explored"] = r.nodes_explored;
        j["optimal"] = r.optimal;
        j["wall_time_ms"] = r.wall_time_ms;
        out << j.dump() << "\n";
    }
    return 0;
}

int cmd_construct(const CommonOpts& o) {
    std::ofstream file;
    std::ostream& out = open_output(file, o.output);
    for (const Graph& g : load_graphs(o.input, o.format)) {
        try {
            ReductionTrace t = construct_odd_subgraph(g);
            out << t.to_json().dump(2) << "\n";
            ReplayResult rep = replay_trace(g, t);
            if (!rep) {
                std::cerr << "trace replay failed at step " << rep.failed_step << ": "
                          << rep.reason << "\n";
                return kExitViolation;
            }
        } catch (const ProofGapError& e) {
            json j;
            j["error"] = "proof_gap";
            j["graph6"] = e.graph6;
            out << j.dump() << "\n";
            std::cerr << "irreducible instance: " << e.graph6 << "\n";
            return kExitProofGap;
        }
    }
    return 0;
}

int cmd_gallai(const CommonOpts& o) {
    std::ofstream file;
    std::ostream& out = open_output(file, o.output);
    for (const Graph& g : load_graphs(o.input, o.format)) {
        EvenPartition p = even_even_partition(g);
        json j;
        j["part_one"] = set_json(p.part_one);
        j["part_two"] = set_json(p.part_two);
        out << j.dump() << "\n";
    }
    return 0;
}

int cmd_gen(const std::string& spec_text, uint64_t count, std::optional<uint64_t> seed,
            const std::string& output) {
    GenSpec spec = GenSpec::from_json(json::parse(spec_text));
    uint64_t base_seed = seed ? *seed : spec.seed;
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    for (uint64_t k = 0; k < count; ++k)
        out << to_graph6(generate(spec, derive_seed(base_seed, k))) << "\n";
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& output,
               std::optional<uint32_t> jobs, std::optional<uint64_t> seed) {
    std::ifstream f(config_path);
    if (!f) throw PreconditionError("cannot open config " + config_path);
    CampaignConfig cfg = CampaignConfig::from_json(json::parse(read_stream(f)));
    if (jobs) cfg.jobs = *jobs;
    if (seed) cfg.seed = *seed;
    if (cfg.ledger_path.empty() && !output.empty() && output != "-")
        cfg.ledger_path = output + ".ledger.jsonl";

    CampaignReport report = run_campaign(cfg);

    json rj = report.to_json();
    if (!output.empty() && output != "-") {
        std::ofstream rf(output);
        if (!rf) throw PreconditionError("cannot open report file " + output);
        rf << rj.dump(2) << "\n";
    } else {
        std::cout << rj.dump(2) << "\n";
    }
    std::cerr << "instances=" << report.instances_tested
              << " violations=" << report.violations.size()
              << " proof_gaps=" << report.proof_gap_reports.size();
    if (report.min_ratio)
        std::cerr << " min_ratio=" << report.min_ratio->fo << "/" << report.min_ratio->n;
    std::cerr << "\n";
    return report.passed() ? 0 : kExitViolation;
}

int cmd_enum(uint32_t n, uint32_t max_degree, const std::string& output) {
    std::ofstream file;
    std::ostream& out = open_output(file, output);
    BoundedGraphStream stream(n, max_degree);
    while (auto m = stream.next())
        out << to_graph6(BoundedGraphStream::graph_from_mask(n, *m)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd induced subgraph toolkit"};
    app.require_subcommand(1);

    CommonOpts solve_o, construct_o, gallai_o;
    auto* solve = app.add_subcommand("solve", "exact maximum odd induced subgraph");
    add_common(solve, solve_o);
    auto* construct =
        app.add_subcommand("construct", "build an odd set of order >= 2n/7 with a trace");
    add_common(construct, construct_o);
    auto* gallai = app.add_subcommand("gallai", "even-even vertex partition");
    add_common(gallai, gallai_o);

    std::string gen_spec;
    uint64_t gen_count = 1;
    std::optional<uint64_t> gen_seed;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "generate graph6 instances");
    gen->add_option("--spec", gen_spec, "generator spec as JSON")->required();
    gen->add_option("--count", gen_count, "number of instances");
    gen->add_option("--seed", gen_seed, "stream seed, overrides the spec seed");
    gen->add_option("--output", gen_output, "output path, default stdout");

    std::string verify_config, verify_output;
    std::optional<uint32_t> verify_jobs;
    std::optional<uint64_t> verify_seed;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--config", verify_config, "campaign config JSON path")->required();
    verify->add_option("--output", verify_output, "report path, default stdout");
    verify->add_option("--jobs", verify_jobs, "worker count override");
    verify->add_option("--seed", verify_seed, "seed override");

    uint32_t enum_n = 0, enum_d = 4;
    std::string enum_output;
    auto* enumc = app.add_subcommand("enum", "list bounded-degree graphs without isolated vertices");
    enumc->add_option("--n", enum_n, "vertex count (<= 8)")->required();
    enumc->add_option("--max-degree", enum_d, "degree cap");
    enumc->add_option("--output", enum_output, "output path, default stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_o);
        if (construct->parsed()) return cmd_construct(construct_o);
        if (gallai->parsed()) return cmd_gallai(gallai_o);
        if (gen->parsed()) return cmd_gen(gen_spec, gen_count, gen_seed, gen_output);
        if (verify->parsed()) return cmd_verify(verify_config, verify_output, verify_jobs, verify_seed);
        if (enumc->parsed()) return cmd_enum(enum_n, enum_d, enum_output);
    } catch (const ProofGapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProofGap;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
