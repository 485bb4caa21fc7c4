// frcodes command-line interface: construct, enumerate, graph, equiv,
// simulate and export subcommands over the frcodes library. Every
// invocation is deterministic: identical inputs give byte-identical output.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "frcodes/catalog.hpp"
#include "frcodes/code.hpp"
#include "frcodes/construct.hpp"
#include "frcodes/equivalence.hpp"
#include "frcodes/errors.hpp"
#include "frcodes/graph.hpp"
#include "frcodes/io.hpp"
#include "frcodes/repair.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInvalidArguments = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

using ordered_json = nlohmann::ordered_json;

struct Options {
    int n = 0;
    int d = 0;
    int rho = 0;
    int theta = 0;
    int n_to = 0;
    std::string format;
    std::string method;
    std::string filter = "rho-lt-theta";
    bool dedupe = false;
    int fail = 0;
    int k = 0;
    long long file_size = 0;  // --B
    int beta = 1;
    std::string in_path;
    std::string out_path;
    std::string equiv_a;
    std::string equiv_b;
    bool brute = false;
};

void write_output(const Options& opt, const std::string& payload) {
    std::string text = payload;
    if (text.empty() || text.back() != '\n') text.push_back('\n');
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw fr::InvalidArgumentError("cannot open output file " + opt.out_path);
    out << text;
}

std::string read_input(const Options& opt) {
    if (opt.in_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(opt.in_path, std::ios::binary);
    if (!in) throw fr::InvalidArgumentError("cannot open input file " + opt.in_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fr::FilterPolicy parse_filter(const std::string& filter) {
    if (filter == "rho-lt-theta") return fr::FilterPolicy{true};
    if (filter == "none") return fr::FilterPolicy{false};
    throw fr::InvalidArgumentError("unknown filter '" + filter + "'");
}

fr::FrParams resolve_params(const Options& opt) {
    if (opt.n <= 0 || opt.d <= 0 || opt.rho <= 0)
        throw fr::InvalidArgumentError("--n, --d and --rho must be positive");
    const long long total = static_cast<long long>(opt.n) * opt.d;
    if (total % opt.rho != 0)
        throw fr::InvalidArgumentError("n*d = " + std::to_string(total) +
                                       " is not divisible by rho = " +
                                       std::to_string(opt.rho));
    const int theta = static_cast<int>(total / opt.rho);
    if (opt.theta != 0 && opt.theta != theta)
        throw fr::InvalidArgumentError("--theta " + std::to_string(opt.theta) +
                                       " contradicts n*d/rho = " + std::to_string(theta));
    fr::FrParams params{opt.n, theta, opt.d, opt.rho};
    if (!fr::params_consistent(params))
        throw fr::InvalidArgumentError("parameters are not a feasible FR tuple");
    return params;
}

int run_construct(const Options& opt) {
    if (!opt.method.empty() && opt.method != "alg1")
        throw fr::InvalidArgumentError("construct supports --method alg1 only");
    const fr::FrParams params = resolve_params(opt);
    const fr::IncidenceMatrix m = fr::fill_incidence(params);
    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "matrix") {
        write_output(opt, m.to_text());
    } else if (format == "json") {
        write_output(opt, fr::code_to_json(fr::matrix_to_code(m, params, "algorithm1")));
    } else {
        throw fr::InvalidArgumentError("construct supports --format json|matrix");
    }
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    if (opt.n < 3) throw fr::InvalidArgumentError("enumerate requires --n >= 3");
    const int n_to = opt.n_to == 0 ? opt.n : opt.n_to;
    if (n_to < opt.n) throw fr::InvalidArgumentError("--n-to must be >= --n");
    const fr::FilterPolicy policy = parse_filter(opt.filter);
    const std::string format = opt.format.empty() ? "json" : opt.format;

    if (format == "json") {
        std::ostringstream out;
        for (int n = opt.n; n <= n_to; ++n) {
            auto entries = fr::generate_catalog(n, policy);
            if (opt.dedupe) fr::dedupe_catalog(entries);
            fr::write_catalog(out, entries);
        }
        write_output(opt, out.str());
        return kExitOk;
    }
    if (format == "csv") {
        std::vector<fr::CountRowWithClasses> rows;
        for (int n = opt.n; n <= n_to; ++n) {
            auto entries = fr::generate_catalog(n, policy);
            fr::CountRowWithClasses row;
            row.counts = fr::count_table(n, n, policy).front();
            row.classes = static_cast<int>(fr::dedupe_catalog(entries).size());
            rows.push_back(row);
        }
        write_output(opt, fr::count_table_to_csv(rows));
        return kExitOk;
    }
    throw fr::InvalidArgumentError("enumerate supports --format json|csv");
}

int run_graph(const Options& opt) {
    if (opt.method.empty())
        throw fr::InvalidArgumentError("graph requires --method split-cycle|adj3|adj4|circulant");
    const std::string format = opt.format.empty() ? "dot" : opt.format;

    fr::RegularGraph graph;
    std::optional<fr::IncidenceMatrix> adjacency;
    std::string provenance;
    if (opt.method == "split-cycle") {
        graph = fr::build_regular_graph_split(opt.n, opt.d);
        provenance = "split-cycle";
    } else if (opt.method == "circulant") {
        graph = fr::circulant_graph(opt.n, opt.d);
        provenance = "circulant";
    } else if (opt.method == "adj3") {
        adjacency = fr::adjacency_fill_transpose(opt.n, opt.d);
        provenance = "adjacency-transpose";
    } else if (opt.method == "adj4") {
        adjacency = fr::adjacency_fill_symmetric(opt.n, opt.d);
        provenance = "adjacency-symmetric";
    } else {
        throw fr::InvalidArgumentError("unknown --method '" + opt.method + "'");
    }

    if (format == "matrix") {
        write_output(opt, adjacency ? adjacency->to_text()
                                    : graph.adjacency_matrix().to_text());
        return kExitOk;
    }
    if (format == "dot") {
        if (adjacency) {
            // View the filled adjacency matrix as the graph it encodes.
            fr::RegularGraph g(adjacency->rows());
            for (int a = 0; a < adjacency->rows(); ++a)
                for (int b = a + 1; b < adjacency->cols(); ++b)
                    if (adjacency->get(a, b)) g.add_edge(a + 1, b + 1);
            write_output(opt, fr::to_dot(g));
        } else {
            write_output(opt, fr::to_dot(graph));
        }
        return kExitOk;
    }
    if (format == "json") {
        const fr::FrCode code = adjacency
                                    ? fr::adjacency_as_incidence(*adjacency, opt.d, provenance)
                                    : fr::graph_to_fr(graph, provenance);
        write_output(opt, fr::code_to_json(code));
        return kExitOk;
    }
    throw fr::InvalidArgumentError("graph supports --format dot|matrix|json");
}

int run_equiv(const Options& opt) {
    const auto load = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw fr::InvalidArgumentError("cannot open code file " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return fr::code_from_json(buffer.str());
    };
    const fr::FrCode a = load(opt.equiv_a);
    const fr::FrCode b = load(opt.equiv_b);

    ordered_json j;
    if (opt.brute) {
        j["equivalent"] = fr::brute_force_equivalent(a, b);
        j["method"] = "brute-force";
    } else if (a.params != b.params) {
        j["equivalent"] = false;
        j["method"] = "params";
    } else if (fr::invariant_fingerprint(a) != fr::invariant_fingerprint(b)) {
        j["equivalent"] = false;
        j["method"] = "fingerprint";
    } else {
        j["equivalent"] = fr::canonical_form(a) == fr::canonical_form(b);
        j["method"] = "canonical-form";
    }
    write_output(opt, j.dump());
    return kExitOk;
}

int run_simulate(const Options& opt) {
    const fr::FrCode code = fr::code_from_json(read_input(opt));
    if (opt.fail != 0 && opt.k != 0)
        throw fr::InvalidArgumentError("--fail and --k are mutually exclusive");
    if (opt.fail != 0) {
        const fr::RepairPlan plan = fr::repair_plan(code, opt.fail);
        const fr::RepairReport report = fr::simulate_failure(code, opt.fail, opt.beta);
        write_output(opt, fr::repair_to_json(plan, report));
        return kExitOk;
    }
    if (opt.k != 0) {
        ordered_json j;
        j["k"] = opt.k;
        j["M"] = fr::supported_file_size(code, opt.k);
        if (opt.file_size != 0) {
            j["B"] = opt.file_size;
            j["mds"] = fr::mds_check(code, opt.k, opt.file_size);
        }
        write_output(opt, j.dump());
        return kExitOk;
    }
    throw fr::InvalidArgumentError("simulate requires --fail or --k");
}

int run_export(const Options& opt) {
    const fr::FrCode code = fr::code_from_json(read_input(opt));
    const std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "json") {
        write_output(opt, fr::code_to_json(code));
        return kExitOk;
    }
    if (format == "matrix") {
        write_output(opt, fr::code_to_matrix(code).to_text());
        return kExitOk;
    }
    if (format == "dot") {
        write_output(opt, fr::to_dot(fr::fr_to_graph(code)));
        return kExitOk;
    }
    throw fr::InvalidArgumentError("export supports --format json|matrix|dot");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional repetition code toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto* construct = app.add_subcommand("construct", "Fill an incidence matrix for (n, d, rho)");
    construct->add_option("--n", opt.n, "node count")->required();
    construct->add_option("--d", opt.d, "packets per node")->required();
    construct->add_option("--rho", opt.rho, "replication factor")->required();
    construct->add_option("--theta", opt.theta, "packet count (checked against n*d/rho)");
    construct->add_option("--format", opt.format, "json|matrix (default json)");
    construct->add_option("--method", opt.method, "alg1 (default)");
    construct->add_option("--out", opt.out_path, "write output to file");

    auto* enumerate = app.add_subcommand("enumerate", "Catalog all admissible tuples for n");
    enumerate->add_option("--n", opt.n, "node count (range start)")->required();
    enumerate->add_option("--n-to", opt.n_to, "range end (default --n)");
    enumerate->add_option("--filter", opt.filter, "rho-lt-theta|none (default rho-lt-theta)");
    enumerate->add_flag("--dedupe", opt.dedupe, "fill canonical digests in JSON output");
    enumerate->add_option("--format", opt.format, "json|csv (default json)");
    enumerate->add_option("--out", opt.out_path, "write output to file");

    auto* graph = app.add_subcommand("graph", "Build a d-regular graph or adjacency fill");
    graph->add_option("--n", opt.n, "vertex count")->required();
    graph->add_option("--d", opt.d, "degree")->required();
    graph->add_option("--method", opt.method, "split-cycle|adj3|adj4|circulant")->required();
    graph->add_option("--format", opt.format, "dot|matrix|json (default dot)");
    graph->add_option("--out", opt.out_path, "write output to file");

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two code JSON files");
    equiv->add_option("a", opt.equiv_a, "first code JSON file")->required();
    equiv->add_option("b", opt.equiv_b, "second code JSON file")->required();
    equiv->add_flag("--brute", opt.brute, "use the exhaustive oracle");
    equiv->add_option("--out", opt.out_path, "write output to file");

    auto* simulate = app.add_subcommand("simulate", "Repair / recovery accounting on a code");
    simulate->add_option("--in", opt.in_path, "code JSON file (default stdin)");
    simulate->add_option("--fail", opt.fail, "failed node index (1-based)");
    simulate->add_option("--beta", opt.beta, "packets downloaded per helper (default 1)");
    simulate->add_option("--k", opt.k, "recovery node count for M(k)");
    simulate->add_option("--B", opt.file_size, "file size to check against M(k)");
    simulate->add_option("--out", opt.out_path, "write output to file");

    auto* exporter = app.add_subcommand("export", "Re-emit a code as json, matrix or dot");
    exporter->add_option("--in", opt.in_path, "code JSON file (default stdin)");
    exporter->add_option("--format", opt.format, "json|matrix|dot (default json)");
    exporter->add_option("--out", opt.out_path, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidArguments;
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (graph->parsed()) return run_graph(opt);
        if (equiv->parsed()) return run_equiv(opt);
        if (simulate->parsed()) return run_simulate(opt);
        if (exporter->parsed()) return run_export(opt);
        std::cerr << "no subcommand\n";
        return kExitInvalidArguments;
    } catch (const fr::InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    } catch (const fr::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const fr::ConstructionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitUnexpected;
    }
}
