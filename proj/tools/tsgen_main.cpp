// Command-line front end: generate designs with their cyclic Gray codes,
// verify design files independently, export DOT renderings, and sweep
// parameter grids. Exit codes: 0 success; 1 verification failure; 2 bad
// parameters or malformed input; 3 construction or search failure.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tsgen/assemble.hpp"
#include "tsgen/big.hpp"
#include "tsgen/core.hpp"
#include "tsgen/design_file.hpp"
#include "tsgen/errors.hpp"
#include "tsgen/honeycomb.hpp"
#include "tsgen/verify.hpp"

namespace {

using namespace tsgen;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParams("cannot open output file: " + path);
    out << text;
    if (!out) throw InvalidParams("cannot write output file: " + path);
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParams("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ArcColoring coloring_from(int n, bool seeded, std::uint64_t seed) {
    return seeded ? ArcColoring::seeded(n, seed) : ArcColoring::default_for(n);
}

int run_generate(int n, int lambda, bool seeded, std::uint64_t seed,
                 const std::string& out_path, const std::string& format) {
    ArcColoring coloring = coloring_from(n, seeded, seed);
    Assembly assembly = assemble(n, lambda, coloring);
    DesignFile file = design_file_of(assembly, coloring);
    write_output(out_path,
                 format == "text" ? design_to_text(file) : design_to_json(file));
    return 0;
}

int run_verify(const std::string& in_path) {
    DesignFile file = design_from_json(read_input(in_path));
    VerificationReport design_report =
        verify_design(file.n, file.lambda, file.blocks);
    VerificationReport gray_report = verify_gray_code(file.blocks, file.gray_code);
    if (design_report.ok && gray_report.ok) {
        std::cout << "ok: simple TS(" << 2 * file.n + 2 << "," << file.lambda
                  << "), " << file.blocks.size()
                  << " blocks, cyclic Gray code verified\n";
        return 0;
    }
    for (const std::string& msg : design_report.failures)
        std::cout << "design: " << msg << "\n";
    for (const std::string& msg : gray_report.failures)
        std::cout << "gray_code: " << msg << "\n";
    return 1;
}

int run_dot(const std::string& kind, const std::string& in_path, int n,
            int lambda, const std::string& out_path) {
    std::string text;
    if (kind == "2big") {
        if (in_path.empty())
            throw InvalidParams("dot --kind 2big needs --input");
        DesignFile file = design_from_json(read_input(in_path));
        text = export_dot(build_kbig(file.blocks, 2), "big2");
    } else if (kind == "honeycomb") {
        require_valid_lambda(n, lambda);
        std::vector<int> classes(lambda / 2);
        for (int g = 0; g < lambda / 2; ++g) classes[g] = g;
        HoneycombGraph graph = step1a_graph(n, classes);
        std::vector<std::string> labels;
        for (const ResidueTriple& v : graph.verts)
            labels.push_back(std::to_string(v.r[0]) + " " + std::to_string(v.r[1]) +
                             " " + std::to_string(v.r[2]));
        text = render_dot("honeycomb", labels, graph.edges, false);
    } else {
        require_valid_lambda(n, lambda);
        std::vector<std::string> labels;
        for (int r = 0; r < n; ++r) labels.push_back(std::to_string(r));
        std::vector<std::pair<int, int>> edges;
        for (int g = 0; g < lambda / 2; ++g)
            for (const Arc& arc : arcs_of(n, g)) edges.emplace_back(arc.tail, arc.head);
        text = render_dot("digraph_union", labels, edges, true);
    }
    write_output(out_path, text);
    return 0;
}

int run_sweep(const std::vector<int>& ns, const std::vector<int>& lambdas,
              int seeds) {
    bool all_ok = true;
    for (int n : ns)
        for (int lambda : lambdas) {
            try {
                require_valid_n(n);
                require_valid_lambda(n, lambda);
            } catch (const InvalidParams& e) {
                std::cout << "skip n=" << n << " lambda=" << lambda << ": "
                          << e.what() << "\n";
                continue;
            }
            for (int s = 0; s <= seeds; ++s) {
                std::string label = s == 0 ? "default" : "seed=" + std::to_string(s);
                try {
                    ArcColoring coloring = coloring_from(n, s > 0, s);
                    Assembly assembly = assemble(n, lambda, coloring);
                    VerificationReport design_report = verify_design(
                        n, lambda, assembly.design.blocks);
                    VerificationReport gray_report =
                        verify_gray_code(assembly.design.blocks, assembly.order);
                    if (design_report.ok && gray_report.ok) {
                        std::cout << "ok n=" << n << " lambda=" << lambda << " "
                                  << label << " blocks="
                                  << assembly.design.blocks.size() << "\n";
                    } else {
                        all_ok = false;
                        std::cout << "FAIL n=" << n << " lambda=" << lambda << " "
                                  << label << " (verification)\n";
                    }
                } catch (const Error& e) {
                    all_ok = false;
                    std::cout << "FAIL n=" << n << " lambda=" << lambda << " "
                              << label << ": " << e.what() << "\n";
                }
            }
        }
    return all_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple triple system generator with cyclic 2-intersecting "
                 "Gray codes"};
    app.require_subcommand(1);

    int n = 0, lambda = 0;
    std::uint64_t seed = 0;
    std::string out_path, in_path, format = "json", kind;
    std::vector<int> sweep_n, sweep_lambda;
    int sweep_seeds = 0;

    CLI::App* gen = app.add_subcommand("generate", "generate a design and Gray code");
    gen->add_option("-n,--n", n, "order parameter (n = 1 or 5 mod 6)")->required();
    gen->add_option("-l,--lambda", lambda, "pair multiplicity (even, 4..2n)")
        ->required();
    CLI::Option* seed_opt =
        gen->add_option("--seed", seed, "seeded arc coloring instead of default");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");
    gen->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* ver = app.add_subcommand("verify", "verify a design file");
    ver->add_option("-i,--input", in_path, "design file to verify")->required();

    CLI::App* dot = app.add_subcommand("dot", "export DOT renderings");
    dot->add_option("--kind", kind, "which graph to render")
        ->required()
        ->check(CLI::IsMember({"2big", "honeycomb", "digraph"}));
    dot->add_option("-i,--input", in_path, "design file (for --kind 2big)");
    dot->add_option("-n,--n", n, "order parameter (honeycomb/digraph)");
    dot->add_option("-l,--lambda", lambda, "pair multiplicity (honeycomb/digraph)");
    dot->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "generate and verify a grid");
    sweep->add_option("--n", sweep_n, "n values")->required();
    sweep->add_option("--lambda", sweep_lambda, "lambda values")->required();
    sweep->add_option("--seeds", sweep_seeds,
                      "also run seeded colorings 1..K per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed())
            return run_generate(n, lambda, seed_opt->count() > 0, seed, out_path,
                                format);
        if (ver->parsed()) return run_verify(in_path);
        if (dot->parsed()) return run_dot(kind, in_path, n, lambda, out_path);
        return run_sweep(sweep_n, sweep_lambda, sweep_seeds);
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
