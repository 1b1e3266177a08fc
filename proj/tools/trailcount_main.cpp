#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trailcount/harness.hpp"
#include "trailcount/report.hpp"
#include "trailcount/verify.hpp"

using namespace trailcount;
using namespace trailcount::harness;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_capacity = 2;
constexpr int exit_verification = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Engine> parse_engines(const std::vector<std::string>& names)
{
    std::vector<Engine> out;
    for (const std::string& n : names) {
        if (n == "all")
            return {std::begin(all_engines), std::end(all_engines)};
        out.push_back(parse_engine(n));
    }
    return out;
}

struct CountArgs {
    std::string input;
    std::string graph_id;
    std::string kind = "trails";
    std::size_t length = 1;
    std::size_t from = 1;
    std::size_t to = 1;
    std::vector<std::string> engines{"all"};
    std::string variant = "literal";
    std::string format = "json";
    bool edge_subspace = false;
};

int cmd_count(const CountArgs& a, const Limits& limits)
{
    const std::string bytes = read_file(a.input);
    const Graph g = parse_edge_list(bytes);
    Query q;
    q.kind = parse_kind(a.kind);
    q.length = a.length;
    if (a.from == 0 || a.to == 0)
        throw InputError("vertex labels start at 1");
    q.from = Vertex::from_label(a.from);
    q.to = Vertex::from_label(a.to);
    q.variant = a.variant == "guarded" ? nilpotent::MVariant::StartGuarded : nilpotent::MVariant::Literal;
    q.edge_subspace = a.edge_subspace;
    q.engines = parse_engines(a.engines);

    const CountReport r = run_count(g, a.graph_id.empty() ? content_id(bytes) : a.graph_id, q, limits);
    if (a.format == "json")
        std::cout << to_json(r).dump(2) << '\n';
    else if (a.format == "csv")
        std::cout << to_csv(r);
    else
        std::cout << to_text(r);

    if (r.capacity_exhausted())
        return exit_capacity;
    if (r.has_note(codes::engine_disagreement))
        return exit_verification;
    return exit_ok;
}

struct VerifyArgs {
    VerifyConfig config;
    std::string source = "all-connected";
    std::vector<std::string> engines{"all"};
    std::string format = "text";
};

int cmd_verify(VerifyArgs a, const Limits& limits)
{
    if (a.source == "all-connected")
        a.config.source = GraphSource::AllConnected;
    else if (a.source == "random")
        a.config.source = GraphSource::Random;
    else
        a.config.source = GraphSource::None;
    a.config.engines = parse_engines(a.engines);
    a.config.limits = limits;

    const VerifySummary s = run_verify(a.config);
    if (a.format == "json")
        std::cout << to_json(s).dump(2) << '\n';
    else
        std::cout << to_text(s);
    for (const std::string& w : s.warnings)
        std::cerr << "warning: " << w << '\n';
    return s.passed() ? exit_ok : exit_verification;
}

int cmd_example(const std::string& input, const std::string& format, const Limits& limits)
{
    const Graph g = input.empty() ? graphs::example_c4() : parse_edge_list(read_file(input));
    const ExampleReport r = run_worked_example(g, limits);
    if (format == "json")
        std::cout << to_json(r).dump(2) << '\n';
    else
        std::cout << to_text(r);
    return r.passed() ? exit_ok : exit_verification;
}

struct BenchArgs {
    BenchConfig config;
    std::string kind = "trails";
    std::vector<std::string> engines{"all"};
    std::string output;
};

int cmd_bench(BenchArgs a, const Limits& limits)
{
    a.config.kind = parse_kind(a.kind);
    a.config.engines = parse_engines(a.engines);
    a.config.limits = limits;
    const std::string csv = to_csv(run_bench(a.config));
    if (a.output.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(a.output);
        if (!out)
            throw InputError("cannot write " + a.output);
        out << csv;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact walk, trail, path and cycle counts from several independent engines"};
    app.require_subcommand(1);

    const std::vector<std::string> engine_names{"oracle", "symbolic", "fock", "all"};

    CountArgs count;
    auto* count_cmd = app.add_subcommand("count", "Count one class of walks between two vertices");
    count_cmd->add_option("--input", count.input, "Edge-list file")->required();
    count_cmd->add_option("--graph-id", count.graph_id, "Name for the report (default: hash of the file)");
    count_cmd->add_option("--kind", count.kind, "walks|trails|paths|euler|cycles|hamiltonian")
        ->check(CLI::IsMember({"walks", "trails", "paths", "euler", "cycles", "hamiltonian"}))
        ->required();
    count_cmd->add_option("--length", count.length, "Walk length (ignored for euler and hamiltonian)");
    count_cmd->add_option("--from", count.from, "Start vertex (1-based)")->required();
    count_cmd->add_option("--to", count.to, "End vertex (1-based; ignored for closed kinds)");
    count_cmd->add_option("--engine", count.engines, "oracle|symbolic|fock|all (repeatable)")
        ->check(CLI::IsMember(engine_names));
    count_cmd->add_option("--variant", count.variant, "Vertex observable for paths: literal|guarded")
        ->check(CLI::IsMember({"literal", "guarded"}));
    count_cmd->add_option("--format", count.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    count_cmd->add_flag("--edge-subspace", count.edge_subspace, "Fock trails on one qubit per edge");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-engine invariant sweep");
    verify_cmd->add_option("--n-max", verify.config.n_max, "Largest graph size");
    verify_cmd->add_option("--l-max", verify.config.l_max, "Largest walk length");
    verify_cmd->add_option("--source", verify.source, "all-connected|random|none")
        ->check(CLI::IsMember({"all-connected", "random", "none"}));
    verify_cmd->add_option("--count", verify.config.random_count, "Random graphs to draw");
    verify_cmd->add_option("--random-n", verify.config.random_n, "Vertices per random graph");
    verify_cmd->add_option("--p", verify.config.edge_probability, "Edge probability of random graphs");
    verify_cmd->add_option("--seed", verify.config.seed, "Seed for random graphs and random states");
    verify_cmd->add_flag("--named", verify.config.include_named, "Add the named graphs to the corpus");
    verify_cmd->add_option("--engine", verify.engines, "Engines to include (repeatable)")
        ->check(CLI::IsMember(engine_names));
    verify_cmd->add_option("--only", verify.config.only, "Run invariants whose name starts with this (repeatable)");
    verify_cmd->add_option("--format", verify.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    std::string example_input;
    std::string example_format = "text";
    auto* example_cmd =
        app.add_subcommand("paper-example", "Recompute every value of the worked 4-cycle example");
    example_cmd->alias("worked-example");
    example_cmd->add_option("--input", example_input, "Edge-list file to use instead of the built-in C4");
    example_cmd->add_option("--format", example_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time engines over a graph family; CSV output");
    bench_cmd->add_option("--family", bench.config.family, "cycle|complete|path|star|petersen")
        ->check(CLI::IsMember({"cycle", "complete", "path", "star", "petersen"}));
    bench_cmd->add_option("--n-min", bench.config.n_min, "Smallest graph size");
    bench_cmd->add_option("--n-max", bench.config.n_max, "Largest graph size");
    bench_cmd->add_option("--kind", bench.kind, "Count kind")
        ->check(CLI::IsMember({"walks", "trails", "paths", "euler", "cycles", "hamiltonian"}));
    bench_cmd->add_option("--length", bench.config.length, "Walk length (default n-1, or n for closed kinds)");
    bench_cmd->add_option("--engine", bench.engines, "Engines to time (repeatable)")
        ->check(CLI::IsMember(engine_names));
    bench_cmd->add_flag("--edge-subspace", bench.config.edge_subspace, "Fock trails on one qubit per edge");
    bench_cmd->add_option("--output", bench.output, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const Limits limits = Limits::from_env();
        if (count_cmd->parsed())
            return cmd_count(count, limits);
        if (verify_cmd->parsed())
            return cmd_verify(verify, limits);
        if (example_cmd->parsed())
            return cmd_example(example_input, example_format, limits);
        if (bench_cmd->parsed())
            return cmd_bench(bench, limits);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return exit_capacity;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return exit_capacity;
    }
    return exit_usage;
}
