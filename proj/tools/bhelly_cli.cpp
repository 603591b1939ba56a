#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bhelly/cli.hpp"

using namespace bhelly;

namespace {

edge_list_doc load_input(const std::string& path, const std::string& gen_family,
                         const std::vector<long long>& gen_params, uint64_t seed) {
    if (!gen_family.empty()) return cli::generate(gen_family, gen_params, seed);
    if (path.empty() || path == "-") return parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_edge_list(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hereditary biclique-Helly recognition and maximal biclique enumeration"};
    app.require_subcommand(1);

    std::string path, engine = "fast", problem = "max-edge", family;
    std::vector<long long> params, sizes;
    long long k = 1;
    uint64_t seed = 0;
    bool check = false;

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", path, "edge list file, '-' for stdin");
        c->add_option("--gen", family, "generate the input instead of reading a file");
        c->add_option("--params", params, "generator parameters");
        c->add_option("--seed", seed, "random seed");
    };

    CLI::App* rec = app.add_subcommand("recognize", "test membership, report a witness if not");
    add_input(rec);
    rec->add_option("--engine", engine, "fast | slow | both")
        ->check(CLI::IsMember({"fast", "slow", "both"}));

    CLI::App* bic = app.add_subcommand("bicliques", "list all maximal bicliques");
    add_input(bic);
    bic->add_flag("--check", check, "cross-verify against the brute-force oracle (n <= 16)");

    CLI::App* sol = app.add_subcommand("solve", "biclique optimization queries");
    add_input(sol);
    sol->add_option("--problem", problem, "balanced | max-vertex | max-edge")
        ->check(CLI::IsMember({"balanced", "max-vertex", "max-edge"}));
    sol->add_option("--k", k, "target size for the balanced problem");

    CLI::App* gen = app.add_subcommand("gen", "write a generated edge list to stdout");
    gen->add_option("family", family, "tree | ladder1|2|3 | fig2 | cycle | complete-bipartite | random-bipartite | random-hbh")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed, "random seed");

    CLI::App* ben = app.add_subcommand("bench", "timing sweep over generated instances");
    ben->add_option("family", family, "generator family (one size parameter)")->required();
    ben->add_option("--sizes", sizes, "instance sizes")->required();
    ben->add_option("--engine", engine, "fast | slow | both")
        ->check(CLI::IsMember({"fast", "slow", "both"}));
    ben->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        cli::run_report rep;
        if (rec->parsed()) {
            // defaults for quick fixture runs: ladder1, fig2 etc. need no params
            rep = cli::cmd_recognize(load_input(path, family, params, seed), engine);
        } else if (bic->parsed()) {
            rep = cli::cmd_bicliques(load_input(path, family, params, seed), check);
        } else if (sol->parsed()) {
            rep = cli::cmd_solve(load_input(path, family, params, seed), problem, k);
        } else if (gen->parsed()) {
            rep = cli::cmd_gen(family, params, seed, std::cout);
        } else if (ben->parsed()) {
            rep = cli::cmd_bench(family, sizes, engine, seed, std::cout);
        }
        rep.print(std::cout);
        return rep.exit_code;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return cli::exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_input;
    }
}
