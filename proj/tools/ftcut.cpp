// ftcut: fault-tolerant max-cut pipelines over graph files or generated
// instance families, with JSON/CSV reports.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ftcut/report.hpp"

namespace {

struct FamilyFlags {
    std::string name;
    int n = 0;
    int t = 2;
    double p = 0.5;
};

ftcut::FamilySpec parse_family(const FamilyFlags& f, std::uint64_t seed) {
    using namespace ftcut;
    if (f.name == "shared-triangles") return SharedTriangles{f.t};
    if (f.name == "path-leaf") return PathLeaf{};
    if (f.name == "cycle") return CycleSpec{f.n};
    if (f.name == "heavy-cycle") return HeavyCycle{f.n};
    if (f.name == "star") return StarSpec{f.n};
    if (f.name == "random-connected") return RandomConnected{f.n, f.p, seed};
    throw ftcut::ValidationError("flags: unknown family '" + f.name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fault-tolerant max-cut toolkit"};
    app.require_subcommand(1);

    ftcut::cli::RunConfig cfg;
    FamilyFlags family;

    auto add_common = [&](CLI::App* sub, bool takes_graph) {
        if (takes_graph) sub->add_option("graph", cfg.input_path, "graph file (edge list)");
        sub->add_option("--family", family.name,
                        "generate the input instead: shared-triangles | path-leaf | cycle | "
                        "heavy-cycle | star | random-connected");
        sub->add_option("-n,--size", family.n, "family size parameter");
        sub->add_option("-t,--triangles", family.t, "shared-triangles count");
        sub->add_option("-p,--edge-prob", family.p, "random-connected edge probability");
        sub->add_option("--seed", cfg.seed, "seed for all randomness");
        sub->add_option("--format", cfg.format, "output format: json | csv");
        sub->add_option("--enum-cap", cfg.enum_cap, "brute-force enumeration cap on n");
        sub->add_option("--lp-cap", cfg.lp_cap, "configuration-LP cap on n");
        sub->add_option("-o,--output", cfg.output_path, "output file (gen/reduce)");
    };

    auto* exact = app.add_subcommand("exact", "exact brute-force solvers");
    exact->add_option("--mode", cfg.mode, "maxcut | adaptive | oblivious");
    exact->add_option("-k,--faults", cfg.k, "fault budget");
    add_common(exact, true);

    auto* local = app.add_subcommand("aftcut-local", "combinatorial single-fault local search");
    add_common(local, true);

    auto* kfault = app.add_subcommand("aftcut-k", "heavy-vertex pipeline for k faults");
    kfault->add_option("-k,--faults", cfg.k, "fault budget");
    kfault->add_option("--eps", cfg.eps, "precision parameter (decimal, parsed exactly)");
    kfault->add_option("--oracle", cfg.oracle, "max-cut oracle: exact | stable-half");
    add_common(kfault, true);

    auto* oftcut = app.add_subcommand("oftcut", "oblivious-adversary LP pipeline");
    oftcut->add_option("-k,--faults", cfg.k, "fault budget");
    oftcut->add_option("--eps-y", cfg.eps_y, "binary-search precision on Y");
    oftcut->add_option("--oracle", cfg.oracle, "max-cut oracle: exact | stable-half");
    add_common(oftcut, true);

    auto* randomcut = app.add_subcommand("randomcut", "uniform random cut experiments");
    randomcut->add_option("-k,--faults", cfg.k, "fault budget");
    randomcut->add_flag("--exact", cfg.exact_expectation, "enumerate all cuts exactly");
    randomcut->add_option("--trials", cfg.trials, "Monte-Carlo trials");
    add_common(randomcut, true);

    auto* reduce = app.add_subcommand("reduce", "star reduction of a graph");
    add_common(reduce, true);

    auto* gen = app.add_subcommand("gen", "generate an instance family");
    add_common(gen, false);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (!family.name.empty()) {
        try {
            cfg.family = parse_family(family, cfg.seed);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        cfg.family_name = family.name;
    }

    auto outcome = ftcut::cli::run(cfg);
    if (outcome.exit_code == 0)
        std::cout << outcome.rendered;
    else
        std::cerr << outcome.rendered;
    return outcome.exit_code;
}
