#include "hyperbinary/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "hyperbinary/blocks.hpp"
#include "hyperbinary/errors.hpp"
#include "hyperbinary/hbgraph.hpp"
#include "hyperbinary/iso.hpp"
#include "hyperbinary/stern.hpp"
#include "hyperbinary/verify.hpp"

namespace hyperbinary::cli {

namespace {

constexpr std::uint64_t kMaxTableSize = 100'000'000;

std::uint64_t to_machine(const Integer& n, std::uint64_t cap, const char* what) {
    if (n > cap) {
        throw DomainError(std::string(what) + " is too large (cap " + std::to_string(cap) + ")");
    }
    return n.convert_to<std::uint64_t>();
}

struct Args {
    std::string fn = "b";
    std::string n;
    std::string m;
    std::string algo;
    std::string format;
    std::string max = "2048";
    std::size_t limit = kDefaultVertexLimit;
    std::uint64_t budget = IsoOptions{}.budget;
    unsigned workers = 1;
    std::size_t bits = 64;
    std::size_t reps = 10;
    std::uint64_t seed = 1;
    bool structural = false;
    bool ignore_labels = false;
    bool places = false;
};

int eval(const Args& args, std::ostream& out) {
    const Integer n = parse_integer(args.n);
    const std::string algo = args.algo.empty() ? "rec" : args.algo;
    if (args.fn == "b" || args.fn == "c") {
        if (args.fn == "c" && algo == "cmat") {
            out << stern_diatomic_matrix(n) << '\n';
            return kOk;
        }
        const auto which = parse_b_algorithm(algo);
        if (!which) {
            throw DomainError("unknown algorithm '" + algo + "' for " + args.fn);
        }
        if (args.fn == "c") {
            if (n < 1) {
                throw DomainError("c(n) needs n >= 1");
            }
            out << b_with(*which, n - 1) << '\n';
        } else {
            out << b_with(*which, n) << '\n';
        }
        return kOk;
    }
    if (args.fn == "v" || args.fn == "a") {
        if (algo == "rec") {
            out << (args.fn == "v" ? cyclomatic_number(n) : arc_count(n)) << '\n';
        } else if (algo == "graph") {
            const GraphCounts c = counts(build_graph(n, args.limit));
            if (args.fn == "v") {
                out << c.v << '\n';
            } else {
                out << c.a << '\n';
            }
        } else {
            throw DomainError("unknown algorithm '" + algo + "' for " + args.fn);
        }
        return kOk;
    }
    throw DomainError("unknown function '" + args.fn + "'");
}

int graph(const Args& args, std::ostream& out) {
    const Integer n = parse_integer(args.n);
    const std::string format = args.format.empty() ? "dot" : args.format;
    if (format != "dot" && format != "json") {
        throw DomainError("unknown graph format '" + format + "'");
    }
    if (args.places) {
        const PlacedGraph placed = embed(n, args.limit);
        out << (format == "dot" ? export_dot(placed.graph(), placed.places())
                                : export_json(placed.graph()));
        return kOk;
    }
    const HbGraph g = build_graph(n, args.limit);
    out << (format == "dot" ? export_dot(g) : export_json(g));
    return kOk;
}

int iso(const Args& args, std::ostream& out) {
    const Integer m = parse_integer(args.m);
    const Integer n = parse_integer(args.n);
    if (!args.structural) {
        out << (iso_closed_form(m, n) ? "isomorphic" : "not isomorphic") << '\n';
        return kOk;
    }
    const HbGraph gm = build_graph(m, args.limit);
    const HbGraph gn = build_graph(n, args.limit);
    IsoOptions options;
    options.ignore_labels = args.ignore_labels;
    options.budget = args.budget;
    const auto witness = labeled_iso(gm, gn, options);
    if (!witness) {
        out << "not isomorphic\n";
        return kOk;
    }
    out << "isomorphic\n";
    for (VertexId v = 0; v < gm.vertex_count(); ++v) {
        out << gm.vertex(v).display() << " → " << gn.vertex(witness->mapping[v]).display() << '\n';
    }
    return kOk;
}

int verify(const Args& args, std::ostream& out) {
    VerifyOptions options;
    options.max = to_machine(parse_integer(args.max), kMaxTableSize, "--max");
    options.workers = args.workers;
    if (const auto c = verify_range(options)) {
        out << c->describe() << '\n';
        return kCounterexample;
    }
    out << "OK " << options.max << '\n';
    return kOk;
}

int table(const Args& args, std::ostream& out) {
    if (!args.format.empty() && args.format != "csv") {
        throw DomainError("table only supports --format csv");
    }
    const SternTable t(to_machine(parse_integer(args.max), kMaxTableSize, "--max"));
    out << "n,b,a,v\n";
    for (std::uint64_t n = 0; n <= t.max(); ++n) {
        out << n << ',' << t.b(n) << ',' << t.a(n) << ',' << t.v(n) << '\n';
    }
    return kOk;
}

int bench(const Args& args, std::ostream& out) {
    std::vector<BAlgorithm> algos;
    if (args.algo.empty() || args.algo == "all") {
        algos.assign(std::begin(kAllBAlgorithms), std::end(kAllBAlgorithms));
    } else if (const auto a = parse_b_algorithm(args.algo)) {
        algos.push_back(*a);
    } else {
        throw DomainError("unknown algorithm '" + args.algo + "'");
    }
    const std::size_t reps = std::max<std::size_t>(1, args.reps);
    std::mt19937_64 rng(args.seed);
    std::vector<Integer> inputs;
    for (std::size_t i = 0; i < reps; ++i) {
        inputs.push_back(random_integer(args.bits, rng));
    }
    for (BAlgorithm algo : algos) {
        const auto start = std::chrono::steady_clock::now();
        Integer sink = 0;
        for (const Integer& n : inputs) {
            sink += b_with(algo, n);
        }
        const std::chrono::duration<double, std::micro> elapsed =
            std::chrono::steady_clock::now() - start;
        out << "algo=" << to_string(algo) << " bits=" << args.bits << " reps=" << reps
            << " mean_us=" << std::fixed << std::setprecision(2)
            << elapsed.count() / static_cast<double>(reps) << " checksum_bits=" << bit_length(sink)
            << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperbinary expansion graphs and Stern's diatomic sequence", "hbx"};
    app.require_subcommand(1);
    Args args;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate b, c, v or a at n");
    eval_cmd->add_option("--fn", args.fn, "b | c | v | a")->required();
    eval_cmd->add_option("--n", args.n, "Argument (decimal or 0b...)")->required();
    eval_cmd->add_option("--algo", args.algo,
                         "b/c: rec | mat | matblk | alg1 | blockfold (c also: cmat); v/a: rec | graph");
    eval_cmd->add_option("--limit", args.limit, "Vertex limit for --algo graph");

    auto* graph_cmd = app.add_subcommand("graph", "Export A(n) as DOT or JSON");
    graph_cmd->add_option("--n", args.n)->required();
    graph_cmd->add_option("--format", args.format, "dot | json");
    graph_cmd->add_option("--limit", args.limit, "Refuse graphs with more vertices than this");
    graph_cmd->add_flag("--places", args.places, "Attach the place of each arc (even n only)");

    auto* decompose_cmd = app.add_subcommand("decompose", "Block decomposition of the minimal expansion");
    decompose_cmd->add_option("--n", args.n)->required();

    auto* iso_cmd = app.add_subcommand("iso", "Are A(m) and A(n) isomorphic as edge-labeled digraphs?");
    iso_cmd->add_option("--m", args.m)->required();
    iso_cmd->add_option("--n", args.n)->required();
    iso_cmd->add_flag("--structural", args.structural, "Search for a witness instead of using the closed form");
    iso_cmd->add_flag("--ignore-labels", args.ignore_labels, "With --structural, ignore arc labels");
    iso_cmd->add_option("--budget", args.budget, "Search budget (candidate trials)");
    iso_cmd->add_option("--limit", args.limit, "Vertex limit per graph");

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every algorithm on [0, max]");
    verify_cmd->add_option("--max", args.max);
    verify_cmd->add_option("--workers", args.workers);

    auto* table_cmd = app.add_subcommand("table", "CSV rows n,b,a,v for n in [0, max]");
    table_cmd->add_option("--max", args.max)->required();
    table_cmd->add_option("--format", args.format, "csv");

    auto* bench_cmd = app.add_subcommand("bench", "Time b algorithms on random inputs");
    bench_cmd->add_option("--bits", args.bits)->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algo", args.algo, "rec | mat | matblk | alg1 | blockfold | all");
    bench_cmd->add_option("--reps", args.reps);
    bench_cmd->add_option("--seed", args.seed);

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kDomainError;
    }

    try {
        if (eval_cmd->parsed()) {
            return eval(args, out);
        }
        if (graph_cmd->parsed()) {
            return graph(args, out);
        }
        if (decompose_cmd->parsed()) {
            out << format_decomposition(decompose(minimal_expansion(parse_integer(args.n))));
            return kOk;
        }
        if (iso_cmd->parsed()) {
            return iso(args, out);
        }
        if (verify_cmd->parsed()) {
            return verify(args, out);
        }
        if (table_cmd->parsed()) {
            return table(args, out);
        }
        if (bench_cmd->parsed()) {
            return bench(args, out);
        }
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kLimitExceeded;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kLimitExceeded;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    err << app.help();
    return kDomainError;
}

} // namespace hyperbinary::cli
