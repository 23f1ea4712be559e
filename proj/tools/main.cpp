// Command-line front end: graph generation, coloring simulation, dynamo
// construction, the dominating-set gadget pipeline and the exact oracles.
//
// Exit codes: 0 success, 2 partial coverage (simulate), 64 unreadable or
// malformed input, 65 precondition violation, 66 invalid certificate,
// 70 internal invariant breach.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dynamo/coloring.hpp"
#include "dynamo/digraph_dynamo.hpp"
#include "dynamo/graph.hpp"
#include "dynamo/oracle.hpp"
#include "dynamo/reduction.hpp"
#include "dynamo/undirected_dynamo.hpp"

namespace {

constexpr int kExitPartial = 2;
constexpr int kExitParse = 64;
constexpr int kExitPrecondition = 65;
constexpr int kExitCertificate = 66;
constexpr int kExitInternal = 70;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

dynamo::Graph load_graph(const std::string& path) { return dynamo::parse_graph(read_file(path)); }

void print_graph_summary(const dynamo::Graph& g) {
    std::cout << "n: " << g.n << '\n';
    std::cout << "m: " << g.edge_count() << '\n';
    std::cout << "directed: " << (g.directed ? "true" : "false") << '\n';
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

dynamo::ThresholdScenario scenario_from_flags(const std::string& name, int k) {
    if (name == "strict") return dynamo::ThresholdScenario::strict_majority();
    if (name == "simple") return dynamo::ThresholdScenario::simple_majority();
    if (name == "fraction") return dynamo::ThresholdScenario::fraction(k);
    throw std::invalid_argument("scenario must be strict, simple or fraction");
}

std::string join_ids(const dynamo::VertexSet& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        out << s[i];
    }
    return out.str();
}

int cmd_gen(const std::string& kind, int n, int rows, int cols, double p, bool directed,
            std::uint64_t seed, const std::string& out_path) {
    dynamo::GenSpec spec;
    spec.family = dynamo::graph_family_from_string(kind);
    spec.n = n;
    spec.rows = rows;
    spec.cols = cols;
    spec.p = p;
    spec.directed = directed;
    const auto g = dynamo::generate(spec, seed);
    write_file(out_path, dynamo::serialize_graph(g));
    std::cout << "command: gen\n";
    std::cout << "family: " << kind << '\n';
    print_graph_summary(g);
    std::cout << "seed: " << seed << '\n';
    std::cout << "out: " << out_path << '\n';
    return 0;
}

int cmd_simulate(const std::string& graph_path, const std::string& seeds_path,
                 const std::string& scenario_name, int k, const std::string& out_path,
                 const std::string& trace_path) {
    const auto g = load_graph(graph_path);
    const auto seeds = dynamo::parse_vertex_set(read_file(seeds_path), g.n);
    const auto scenario = scenario_from_flags(scenario_name, k);

    Timer timer;
    const auto result = dynamo::closure(g, seeds, scenario);

    if (!out_path.empty()) write_file(out_path, dynamo::serialize_vertex_set(result.white));
    if (!trace_path.empty()) {
        std::ostringstream trace;
        for (const auto& step : result.trace)
            trace << step.vertex << ' ' << step.white_in_neighbors << '\n';
        write_file(trace_path, trace.str());
    }

    const bool full = result.covers(g);
    std::cout << "command: simulate\n";
    print_graph_summary(g);
    std::cout << "scenario: " << scenario.name() << '\n';
    std::cout << "seeds: " << result.seeds.size() << '\n';
    std::cout << "white: " << result.white.size() << '\n';
    std::cout << "coverage: " << (full ? "full" : "partial") << '\n';
    std::cout << "elapsed_ms: " << timer.elapsed_ms() << '\n';
    return full ? 0 : kExitPartial;
}

int cmd_find_dynamo(const std::string& graph_path, const std::string& mode, int k,
                    bool per_component, const std::string& out_path) {
    const auto g = load_graph(graph_path);
    Timer timer;
    dynamo::VertexSet witness;
    long long bound = 0;
    long long iterations = 0;
    std::string scenario_name;

    if (mode == "directed") {
        if (!g.directed) throw dynamo::PreconditionError("directed mode needs a directed graph");
        const auto result = dynamo::find_dynamo_directed(g, k);
        witness = result.seeds;
        iterations = result.iterations;
        bound = static_cast<long long>(k) * g.n / (k + 1);
        const auto scenario = dynamo::ThresholdScenario::fraction(k);
        scenario_name = scenario.name();
        bool verified = dynamo::is_dynamo(g, witness, scenario);
        if (k >= 2) verified = verified && dynamo::is_dynamo(g, witness, dynamo::ThresholdScenario::strict_majority());
        if (!verified) throw std::logic_error("emitted witness failed re-verification");
    } else if (mode == "undirected") {
        if (g.directed) throw dynamo::PreconditionError("undirected mode needs an undirected graph");
        const auto diag = dynamo::validate(g);
        if (!diag.is_connected && !per_component)
            throw dynamo::PreconditionError("graph is disconnected; pass --per-component");
        const auto result = dynamo::find_dynamo_undirected(g);
        witness = result.seeds;
        iterations = result.iterations;
        dynamo::VertexSet all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        for (const auto& comp : dynamo::induced_components(g, all))
            bound += (static_cast<long long>(comp.size()) + 1) / 2;
        scenario_name = "strict";
        if (!dynamo::is_dynamo(g, witness, dynamo::ThresholdScenario::strict_majority()))
            throw std::logic_error("emitted witness failed re-verification");
    } else {
        throw std::invalid_argument("mode must be directed or undirected");
    }

    if (static_cast<long long>(witness.size()) > bound)
        throw std::logic_error("witness exceeds the guaranteed bound");
    write_file(out_path, dynamo::serialize_vertex_set(witness));

    std::cout << "command: find-dynamo\n";
    print_graph_summary(g);
    std::cout << "mode: " << mode << '\n';
    std::cout << "scenario: " << scenario_name << '\n';
    std::cout << "output_size: " << witness.size() << '\n';
    std::cout << "bound: " << bound << '\n';
    std::cout << "iterations: " << iterations << '\n';
    std::cout << "elapsed_ms: " << timer.elapsed_ms() << '\n';
    std::cout << "verified: true\n";
    std::cout << "out: " << out_path << '\n';
    return 0;
}

int cmd_reduce(const std::string& graph_path, const std::string& out_path,
               const std::string& map_path) {
    const auto source = load_graph(graph_path);
    Timer timer;
    const auto [gadget, map] = dynamo::build_gadget(source);
    const auto report = dynamo::check_gadget_invariants(gadget, map);
    if (!report.all_ok()) throw std::logic_error("gadget failed its structural invariants");

    write_file(out_path, dynamo::serialize_graph(gadget));
    write_file(map_path, dynamo::serialize_gadget_map(map));

    std::cout << "command: reduce\n";
    print_graph_summary(source);
    std::cout << "gadget_n: " << gadget.n << '\n';
    std::cout << "gadget_m: " << gadget.edge_count() << '\n';
    std::cout << "bipartite: " << (report.bipartite_by_roles ? "true" : "false") << '\n';
    std::cout << "z1_eccentricity: " << report.z1_eccentricity << '\n';
    std::cout << "degrees_all_odd: " << (report.degrees_all_odd ? "true" : "false") << '\n';
    std::cout << "closure_trials: " << report.closure_trials << '\n';
    std::cout << "closures_coincide: " << (report.closures_coincide ? "true" : "false") << '\n';
    std::cout << "elapsed_ms: " << timer.elapsed_ms() << '\n';
    std::cout << "verified: true\n";
    std::cout << "out: " << out_path << '\n';
    std::cout << "map: " << map_path << '\n';
    return 0;
}

int cmd_convert(const std::string& graph_path, const std::string& map_path,
                const std::string& domset_path, const std::string& gadget_seeds_path,
                const std::string& out_path) {
    const auto source = load_graph(graph_path);
    const auto map = dynamo::parse_gadget_map(read_file(map_path), source);
    Timer timer;

    dynamo::VertexSet output;
    std::string direction;
    std::size_t input_size = 0;
    if (!domset_path.empty()) {
        direction = "domset-to-dynamo";
        const auto domset = dynamo::parse_vertex_set(read_file(domset_path), source.n);
        input_size = domset.size();
        output = dynamo::domset_to_dynamo(map, domset);
    } else {
        direction = "dynamo-to-domset";
        const auto seeds = dynamo::parse_vertex_set(read_file(gadget_seeds_path), map.gadget_size());
        input_size = seeds.size();
        output = dynamo::dynamo_to_domset(map, seeds);
    }
    write_file(out_path, dynamo::serialize_vertex_set(output));

    std::cout << "command: convert\n";
    std::cout << "direction: " << direction << '\n';
    print_graph_summary(source);
    std::cout << "input_size: " << input_size << '\n';
    std::cout << "output_size: " << output.size() << '\n';
    std::cout << "elapsed_ms: " << timer.elapsed_ms() << '\n';
    std::cout << "verified: true\n";
    std::cout << "out: " << out_path << '\n';
    return 0;
}

int cmd_oracle(const std::string& task, const std::string& graph_path,
               const std::string& scenario_name, int k, int max_size,
               const std::string& out_path) {
    const auto g = load_graph(graph_path);
    Timer timer;
    dynamo::OracleResult result;
    if (task == "min-dynamo") {
        const auto scenario = scenario_from_flags(scenario_name, k);
        const int cap = max_size < 0 ? g.n : max_size;
        result = dynamo::min_dynamo_bruteforce(g, scenario, cap);
    } else if (task == "min-domset") {
        result = dynamo::min_domset_bruteforce(g);
    } else {
        throw std::invalid_argument("oracle task must be min-dynamo or min-domset");
    }

    std::cout << "command: oracle " << task << '\n';
    print_graph_summary(g);
    std::cout << "optimum: " << result.optimum_size << '\n';
    std::cout << "witness: " << join_ids(result.witness) << '\n';
    std::cout << "subsets_examined: " << result.subsets_examined << '\n';
    std::cout << "budget_exhausted: " << (result.budget_exhausted ? "true" : "false") << '\n';
    std::cout << "elapsed_ms: " << timer.elapsed_ms() << '\n';
    if (!out_path.empty()) write_file(out_path, dynamo::serialize_vertex_set(result.witness));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreversible majority dynamos: simulation, constructive seed sets, "
                 "dominating-set gadget reduction and exact tiny-instance oracles"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    std::string gen_kind, gen_out;
    int gen_n = 0, gen_rows = 0, gen_cols = 0;
    double gen_p = 0.0;
    bool gen_directed = false;
    std::uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind,
                    "complete|cycle|path|grid-torus|random-gnp|random-digraph")
        ->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--rows", gen_rows, "grid-torus rows");
    gen->add_option("--cols", gen_cols, "grid-torus cols");
    gen->add_option("--p", gen_p, "edge probability for random families");
    gen->add_flag("--directed", gen_directed, "orient cycle/path");
    gen->add_option("--seed", gen_seed, "rng seed")->default_val(0);
    gen->add_option("--out", gen_out, "output graph file")->required();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run the coloring process to its fixed point");
    std::string sim_graph, sim_seeds, sim_scenario = "strict", sim_out, sim_trace;
    int sim_k = 1;
    simulate->add_option("--graph", sim_graph)->required();
    simulate->add_option("--seeds", sim_seeds)->required();
    simulate->add_option("--scenario", sim_scenario, "strict|simple|fraction");
    simulate->add_option("--k", sim_k, "k for the fraction scenario");
    simulate->add_option("--out", sim_out, "white-set output file");
    simulate->add_option("--trace", sim_trace, "activation trace output file");

    // find-dynamo
    auto* find = app.add_subcommand("find-dynamo", "Construct a dynamo within the size guarantee");
    std::string find_graph, find_mode, find_out;
    int find_k = 2;
    bool find_per_component = false;
    find->add_option("--graph", find_graph)->required();
    find->add_option("--mode", find_mode, "directed|undirected")->required();
    find->add_option("--k", find_k, "k for directed mode");
    find->add_flag("--per-component", find_per_component, "allow disconnected undirected input");
    find->add_option("--out", find_out, "witness output file")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Build the dominating-set gadget");
    std::string red_graph, red_out, red_map;
    reduce->add_option("--graph", red_graph)->required();
    reduce->add_option("--out", red_out, "gadget graph file")->required();
    reduce->add_option("--map", red_map, "gadget map file")->required();

    // convert
    auto* convert = app.add_subcommand("convert", "Translate witnesses through the gadget");
    std::string conv_graph, conv_map, conv_domset, conv_seeds, conv_out;
    convert->add_option("--graph", conv_graph, "source graph file")->required();
    convert->add_option("--map", conv_map, "gadget map file")->required();
    auto* conv_d = convert->add_option("--domset", conv_domset, "dominating set to lift");
    auto* conv_s = convert->add_option("--gadget-seeds", conv_seeds, "gadget dynamo to project");
    conv_d->excludes(conv_s);
    conv_s->excludes(conv_d);
    convert->add_option("--out", conv_out)->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact solvers for tiny instances");
    std::string ora_task, ora_graph, ora_scenario = "strict", ora_out;
    int ora_k = 1, ora_max = -1;
    oracle->add_option("task", ora_task, "min-dynamo|min-domset")->required();
    oracle->add_option("--graph", ora_graph)->required();
    oracle->add_option("--scenario", ora_scenario, "strict|simple|fraction");
    oracle->add_option("--k", ora_k, "k for the fraction scenario");
    oracle->add_option("--max-size", ora_max, "largest subset size to try");
    oracle->add_option("--out", ora_out, "witness output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_n, gen_rows, gen_cols, gen_p, gen_directed, gen_seed,
                           gen_out);
        if (simulate->parsed())
            return cmd_simulate(sim_graph, sim_seeds, sim_scenario, sim_k, sim_out, sim_trace);
        if (find->parsed())
            return cmd_find_dynamo(find_graph, find_mode, find_k, find_per_component, find_out);
        if (reduce->parsed()) return cmd_reduce(red_graph, red_out, red_map);
        if (convert->parsed()) {
            if (conv_domset.empty() && conv_seeds.empty())
                throw std::invalid_argument("convert needs --domset or --gadget-seeds");
            return cmd_convert(conv_graph, conv_map, conv_domset, conv_seeds, conv_out);
        }
        if (oracle->parsed())
            return cmd_oracle(ora_task, ora_graph, ora_scenario, ora_k, ora_max, ora_out);
    } catch (const dynamo::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const dynamo::CertificateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCertificate;
    } catch (const dynamo::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
