#include <layered/generators.hpp>
#include <layered/verifiers.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using std::cerr;
using std::cout;
using std::string;
using std::vector;

using namespace layered;

namespace
{
    struct RunConfig
    {
        string notion = "oa";
        string algo = "auto";
        bool witness = false;
        string input;
        string output;
        vector<string> graphs;
        string family;
        string graph_kind = "random";
        int vertices = 5;
        int count = 2;
        double probability = 0.4;
        std::uint64_t seed = 1;
        RandomSpec random;
        VerifyLimits limits;
        vector<int> grid;
        int repeat = 1;
    };

    auto read_text(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto load(const string & path) -> Instance
    {
        try {
            auto inst = parse_instance(read_text(path));
            for (auto & note : validate(inst).warnings)
                cerr << "warning: " << describe(inst, note) << '\n';
            return inst;
        }
        catch (const ParseError & e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    }

    auto emit(const RunConfig & config, const string & text) -> void
    {
        if (config.output.empty()) {
            cout << text;
            return;
        }
        std::ofstream out(config.output);
        if (! out)
            throw std::runtime_error("cannot write " + config.output);
        out << text;
    }

    auto cmd_verify(const RunConfig & config) -> int
    {
        auto inst = load(config.input);
        auto notion = parse_notion(config.notion);
        auto verdict = verify(inst, notion, parse_algorithm(config.algo), config.limits);
        if (! verdict.optimal && ! check_witness(inst, notion, verdict)) {
            cerr << "error: witness failed its self-check\n";
            return 2;
        }
        cout << render(inst, notion, verdict, config.witness);
        return verdict.optimal ? 0 : 1;
    }

    auto cmd_kernelize(const RunConfig & config) -> int
    {
        auto inst = load(config.input);
        auto result = kernelize(inst, parse_notion(config.notion));
        if (result.outcome == KernelOutcome::rejected) {
            auto a = result.rejection.front().agent;
            std::ostringstream out;
            out << "rejected: " << inst.agents[a] << " self-loops in layers";
            for (auto & loop : result.rejection)
                out << ' ' << loop.layer + 1;
            out << '\n';
            for (auto & loop : result.rejection)
                out << render(inst, loop) << '\n';
            emit(config, out.str());
            return 1;
        }
        std::ostringstream out;
        out << serialize_instance(result.instance);
        out << "# removed: " << result.removed_agents.size() << " agents, " << result.removed_items.size() << " items\n";
        emit(config, out.str());
        return 0;
    }

    auto input_graphs(const RunConfig & config) -> vector<Digraph>
    {
        vector<Digraph> graphs;
        for (auto & path : config.graphs)
            graphs.push_back(parse_digraph(read_text(path)));
        if (! graphs.empty())
            return graphs;
        for (int i = 0; i < config.count; ++i) {
            if (config.graph_kind == "cycle")
                graphs.push_back(directed_cycle(config.vertices));
            else if (config.graph_kind == "path")
                graphs.push_back(directed_path(config.vertices));
            else if (config.graph_kind == "random")
                graphs.push_back(random_digraph(config.vertices, config.probability, config.seed + static_cast<std::uint64_t>(i)));
            else
                throw std::invalid_argument("unknown graph kind '" + config.graph_kind + "'");
        }
        return graphs;
    }

    auto cmd_generate(const RunConfig & config) -> int
    {
        auto notion = parse_notion(config.notion);
        LabeledInstance result;
        if (config.family == "conp")
            result = gen_conp_instance(input_graphs(config).front(), notion);
        else if (config.family == "and-cc")
            result = gen_and_cross(input_graphs(config), notion);
        else if (config.family == "or-cc")
            result = gen_or_cross(input_graphs(config), notion);
        else if (config.family == "mcis") {
            ColoredGraph g = config.graphs.empty()
                ? random_colored_graph(config.vertices, config.random.k, config.probability, config.seed)
                : parse_colored_graph(read_text(config.graphs.front()));
            result = gen_mcis_instance(g);
        }
        else if (config.family == "random") {
            auto spec = config.random;
            spec.seed = config.seed;
            result.instance = gen_random(spec);
        }
        else
            throw std::invalid_argument("unknown family '" + config.family + "'");

        std::ostringstream out;
        out << serialize_instance(result.instance);
        for (auto & note : result.notes)
            out << "# note: " << note << '\n';
        out << "# label: " << label_name(result.label) << '\n';
        emit(config, out.str());
        return 0;
    }

    auto bench_instance(const RunConfig & config, int value, int rep) -> Instance
    {
        auto spec = config.random;
        spec.seed = config.seed + static_cast<std::uint64_t>(rep);
        if (config.family == "random") {
            // sweep over #alloc with every agent holding an item
            spec.agents = spec.items = value;
            spec.alloc_fraction = 1.0;
        }
        else if (config.family == "dk") {
            // keep d = 3 and enough agents that groups of k exist
            spec.k = value;
            spec.agents = spec.items = std::max(spec.agents, 5 * value);
            spec.max_list = 3;
            spec.alloc_fraction = 1.0;
        }
        else
            throw std::invalid_argument("bench families are random and dk");
        spec.max_list = std::min(spec.max_list, spec.items);
        return gen_random(spec);
    }

    auto cmd_bench(const RunConfig & config) -> int
    {
        auto notion = parse_notion(config.notion);
        auto algo = parse_algorithm(config.algo);
        cout << "family\tvalue\talgorithm\tnotion\tseconds\toptimal\tsubsets\tcycles\ttable_bits\n";
        int status = 0;
        for (auto value : config.grid) {
            for (int rep = 0; rep < config.repeat; ++rep) {
                auto inst = bench_instance(config, value, rep);
                cout << config.family << '\t' << value << '\t';
                auto start = std::chrono::steady_clock::now();
                try {
                    auto verdict = verify(inst, notion, algo, config.limits);
                    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                    cout << algorithm_name(verdict.algorithm) << '\t' << notion_name(notion) << '\t' << elapsed.count() << '\t'
                         << (verdict.optimal ? "true" : "false") << '\t' << verdict.stats.subsets_examined << '\t'
                         << verdict.stats.cycles_enumerated << '\t' << verdict.stats.table_bits << '\n';
                }
                catch (const ResourceLimit & e) {
                    cout << algorithm_name(algo) << '\t' << notion_name(notion) << "\tTIMEOUT\t-\t-\t-\t-\n";
                    cerr << "error: " << e.what() << '\n';
                    status = 2;
                }
            }
        }
        return status;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Verifier and instance generator for multi-layered assignments"};
    app.require_subcommand(1);
    RunConfig config;

    if (auto cap = std::getenv("LA_DP_WIDTH_CAP")) {
        try {
            config.limits.dp_width_cap = std::stoi(cap);
        }
        catch (const std::exception &) {
            cerr << "error: LA_DP_WIDTH_CAP must be an integer\n";
            return 2;
        }
    }

    auto add_limits = [&](CLI::App * cmd) {
        cmd->add_option("--dp-width-cap", config.limits.dp_width_cap, "Largest kernel handled by the subset DP")->check(CLI::PositiveNumber);
        cmd->add_option("--cycle-cap", config.limits.cycle_cap, "Cycle enumeration limit")->check(CLI::PositiveNumber);
        cmd->add_option("--subset-cap", config.limits.subset_cap, "Subset enumeration work limit")->check(CLI::PositiveNumber);
    };

    auto verify_cmd = app.add_subcommand("verify", "Decide optimality of the assignment");
    verify_cmd->add_option("--notion", config.notion, "oa, uoa or soa")->required()->check(CLI::IsMember({"oa", "uoa", "soa"}));
    verify_cmd->add_option("--algo", config.algo, "auto, oracle, dp, xp, dk or poly")->check(CLI::IsMember({"auto", "oracle", "dp", "xp", "dk", "poly"}));
    verify_cmd->add_flag("--witness", config.witness, "Print every witness cycle and self loop");
    verify_cmd->add_option("file", config.input, "Instance file")->required();
    add_limits(verify_cmd);

    auto kernel_cmd = app.add_subcommand("kernelize", "Remove unallocated agents and free items");
    kernel_cmd->add_option("--notion", config.notion, "Notion deciding the self-loop check")->check(CLI::IsMember({"oa", "uoa", "soa"}));
    kernel_cmd->add_option("--out", config.output, "Output file");
    kernel_cmd->add_option("file", config.input, "Instance file")->required();

    auto gen_cmd = app.add_subcommand("generate", "Emit a generated instance");
    gen_cmd->add_option("--family", config.family, "conp, mcis, and-cc, or-cc or random")->required()
        ->check(CLI::IsMember({"conp", "mcis", "and-cc", "or-cc", "random"}));
    gen_cmd->add_option("--notion", config.notion, "Target notion")->check(CLI::IsMember({"oa", "uoa", "soa"}));
    gen_cmd->add_option("--graph", config.graphs, "Digraph (or coloured graph) input files");
    gen_cmd->add_option("--kind", config.graph_kind, "Synthetic graphs: cycle, path or random");
    gen_cmd->add_option("--vertices", config.vertices, "Vertices per synthetic graph")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--count", config.count, "Number of synthetic graphs")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--probability", config.probability, "Edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", config.seed, "Random seed");
    gen_cmd->add_option("--agents", config.random.agents)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--items", config.random.items)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--layers", config.random.layers)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-list", config.random.max_list)->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--alloc-fraction", config.random.alloc_fraction)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--k", config.random.k, "Group size (colour count for mcis)")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--alpha", config.random.alpha)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", config.output, "Output file");

    auto bench_cmd = app.add_subcommand("bench", "Time a backend over a parameter grid");
    bench_cmd->add_option("--family", config.family, "random (grid over #alloc) or dk (grid over k)")->required()
        ->check(CLI::IsMember({"random", "dk"}));
    bench_cmd->add_option("--grid", config.grid, "Parameter values")->delimiter(',');
    bench_cmd->add_option("--notion", config.notion)->check(CLI::IsMember({"oa", "uoa", "soa"}));
    bench_cmd->add_option("--algo", config.algo)->check(CLI::IsMember({"auto", "oracle", "dp", "xp", "dk", "poly"}));
    bench_cmd->add_option("--seed", config.seed);
    bench_cmd->add_option("--repeat", config.repeat)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--agents", config.random.agents)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--items", config.random.items)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--layers", config.random.layers)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--max-list", config.random.max_list)->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--k", config.random.k)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--alpha", config.random.alpha)->check(CLI::PositiveNumber);
    add_limits(bench_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(config);
        if (kernel_cmd->parsed())
            return cmd_kernelize(config);
        if (gen_cmd->parsed())
            return cmd_generate(config);
        return cmd_bench(config);
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
