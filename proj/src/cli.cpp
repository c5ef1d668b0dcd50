#include "dcl/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcl/construction.hpp"
#include "dcl/forbidden.hpp"
#include "dcl/generators.hpp"
#include "dcl/graph.hpp"
#include "dcl/realization.hpp"
#include "dcl/recognition.hpp"

namespace dcl {

namespace {

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

DegreeVector parse_vector(const std::string& csv) {
    DegreeVector s;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        const char* first = csv.data() + pos;
        const char* last = csv.data() + comma;
        while (first < last && *first == ' ') ++first;
        while (first < last && *(last - 1) == ' ') --last;
        int value = 0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw InputError("bad vector entry '" + csv.substr(pos, comma - pos) + "'");
        s.push_back(value);
        pos = comma + 1;
    }
    return s;
}

std::string join_csv(const DegreeVector& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

void print_obstruction(const ObstructionWitness& w) {
    std::cout << "NO " << obstruction_kind_name(w.kind);
    for (int v : w.vertices) std::cout << ' ' << v;
    std::cout << '\n';
}

void print_decomposition(const Decomposition& d) {
    std::cout << "X1";
    for (int v : d.leaf_set) std::cout << ' ' << v;
    std::cout << "\nX2";
    for (int v : d.apex_set) std::cout << ' ' << v;
    std::cout << "\nF";
    for (const auto& [u, v] : d.break_edge_set) std::cout << ' ' << u << '-' << v;
    std::cout << '\n';
    for (const auto& p : d.paths) {
        std::cout << "PATH";
        for (int v : p) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

int run_check(const std::string& input, const std::string& route) {
    const Graph g = load_graph(input);
    if (route == "ii") {
        if (auto w = find_obstruction(g)) {
            print_obstruction(*w);
            return 1;
        }
        std::cout << "YES\n";
        return 0;
    }
    auto dec = route == "iv" ? decompose_via_break_edges(g) : decompose_via_apexes(g);
    if (!dec) {
        auto w = find_obstruction(g);
        if (!w) throw InternalError("no residual path decomposition, yet no obstruction found");
        print_obstruction(*w);
        return 1;
    }
    std::cout << "YES\n";
    print_decomposition(*dec);
    return 0;
}

int run_label(const std::string& input, const std::string& method, const std::string& dot_path) {
    const Graph g = load_graph(input);
    const auto result = label_graph(g, method == "f" ? Route::break_edges : Route::apexes);
    if (!result.labeling) {
        print_obstruction(*result.obstruction);
        return 1;
    }
    std::cout << serialize_labeling(*result.labeling);
    if (!dot_path.empty()) write_file(dot_path, export_dot(g, *result.labeling));
    return 0;
}

int run_verify(const std::string& input, const std::string& labeling_path) {
    Graph g = load_graph(input);
    if (!labeling_path.empty()) g = apply_labeling(g, parse_labeling(slurp(labeling_path), g.order()));
    const auto w = find_forbidden_configuration(g);
    if (!w) {
        std::cout << "DEGREE-COMPLETE\n";
        return 0;
    }
    std::cout << "NOT-DEGREE-COMPLETE " << witness_kind_name(w->kind);
    for (int label : w->labels) std::cout << ' ' << label;
    std::cout << '\n';
    return 1;
}

int run_oracle(const std::string& input, const std::string& method, std::int64_t max_vectors,
               int max_orientations) {
    const Graph g = load_graph(input);
    std::optional<DegreeVector> counterexample;
    if (method == "orientations") {
        std::set<DegreeVector> reachable;
        for_each_orientation(g, max_orientations, [&](const Orientation& o) {
            reachable.insert(out_degrees(o));
            return true;
        });
        for_each_feasible_vector(g, max_vectors, [&](const DegreeVector& s) {
            if (!reachable.count(s)) {
                counterexample = s;
                return false;
            }
            return true;
        });
    } else {
        auto r = is_degree_complete_oracle(g, max_vectors);
        if (!r.degree_complete) counterexample = r.counterexample;
    }
    if (!counterexample) {
        std::cout << "DEGREE-COMPLETE\n";
        return 0;
    }
    std::cout << "NOT-DEGREE-COMPLETE " << join_csv(*counterexample) << '\n';
    return 1;
}

int run_realize(const std::string& input, const std::string& csv) {
    const Graph g = load_graph(input);
    const auto o = realize(g, parse_vector(csv));
    if (!o) {
        std::cout << "NOT-REALIZABLE\n";
        return 1;
    }
    for (const auto& [tail, head] : o->arcs) std::cout << tail << ' ' << head << '\n';
    return 0;
}

int run_gen(const std::string& family, int n, int m, int k, std::uint64_t seed) {
    auto need = [&](int value, const std::string& flag) {
        if (value < 0) throw InputError("family '" + family + "' needs " + flag);
        return value;
    };
    Graph g = [&] {
        if (family == "path") return make_path(need(n, "--n"));
        if (family == "cycle") return make_cycle(need(n, "--n"));
        if (family == "star") return make_star(need(n, "--n"));
        if (family == "caterpillar") return make_caterpillar(need(n, "--n"), seed);
        if (family == "t1" || family == "spider") return make_spider();
        if (family == "t2" || family == "net") return make_net();
        if (family == "triangle_chain" || family == "triangle-chain")
            return make_triangle_chain(need(k, "--k"));
        if (family == "random_gnm" || family == "gnm")
            return make_gnm(need(n, "--n"), need(m, "--m"), seed);
        if (family == "random_dcl" || family == "dcl")
            return make_labelable(need(n, "--n"), seed);
        throw InputError("unknown family '" + family + "'");
    }();
    std::cout << serialize_graph(g);
    return 0;
}

int run_export_dot(const std::string& input, const std::string& labeling_path) {
    const Graph g = load_graph(input);
    std::optional<Labeling> f;
    if (!labeling_path.empty()) f = parse_labeling(slurp(labeling_path), g.order());
    std::cout << export_dot(g, f);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"degree complete labeling toolkit"};
    app.require_subcommand(1);

    std::string input = "-", route = "iii", method = "x2", oracle_method = "vectors";
    std::string dot_path, vector_csv, family, labeling_path;
    int n = -1, m = -1, k = -1, max_orientations = 20;
    std::int64_t max_vectors = 1'000'000;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "decide whether a labeling exists");
    check->add_option("input", input, "graph file, or - for stdin");
    check->add_option("--route", route, "characterization to use")
        ->check(CLI::IsMember({"iii", "iv", "ii"}));

    auto* label = app.add_subcommand("label", "construct a degree complete labeling");
    label->add_option("input", input, "graph file, or - for stdin");
    label->add_option("--method", method, "construction route")
        ->check(CLI::IsMember({"x2", "f"}));
    label->add_option("--dot", dot_path, "also write a DOT rendering here");

    auto* verify = app.add_subcommand("verify", "verify a labeled graph");
    verify->add_option("input", input, "graph file, or - for stdin");
    verify->add_option("--labeling", labeling_path,
                       "apply this labeling to the input before verifying");

    auto* oracle = app.add_subcommand("oracle", "brute-force degree completeness check");
    oracle->add_option("input", input, "graph file, or - for stdin");
    oracle->add_option("--method", oracle_method, "vector realization or full enumeration")
        ->check(CLI::IsMember({"vectors", "orientations"}));
    oracle->add_option("--max-vectors", max_vectors, "feasible-vector cap");
    oracle->add_option("--max-orientations", max_orientations, "edge cap for 2^m enumeration");

    auto* realize_cmd = app.add_subcommand("realize", "orient edges to match an out-degree vector");
    realize_cmd->add_option("input", input, "graph file, or - for stdin");
    realize_cmd->add_option("--vector", vector_csv, "target out-degrees, comma separated")
        ->required();

    auto* gen = app.add_subcommand("gen", "generate a test graph");
    gen->add_option("family", family,
                    "path|cycle|star|caterpillar|t1|t2|triangle_chain|random_gnm|random_dcl")
        ->required();
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--m", m, "edge count (random_gnm)");
    gen->add_option("--k", k, "triangle count (triangle_chain)");
    gen->add_option("--seed", seed, "random seed");

    auto* export_dot_cmd = app.add_subcommand("export-dot", "emit DOT, optionally labeled");
    export_dot_cmd->add_option("input", input, "graph file, or - for stdin");
    export_dot_cmd->add_option("--labeling", labeling_path, "labeling file (n lines: vertex label)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(input, route);
        if (label->parsed()) return run_label(input, method, dot_path);
        if (verify->parsed()) return run_verify(input, labeling_path);
        if (oracle->parsed()) return run_oracle(input, oracle_method, max_vectors, max_orientations);
        if (realize_cmd->parsed()) return run_realize(input, vector_csv);
        if (gen->parsed()) return run_gen(family, n, m, k, seed);
        if (export_dot_cmd->parsed()) return run_export_dot(input, labeling_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

}  // namespace dcl
