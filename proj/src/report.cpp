#include "ftcut/report.hpp"

#include <fstream>
#include <sstream>

#include "ftcut/kfault.hpp"
#include "ftcut/local_search.hpp"
#include "ftcut/oblivious.hpp"
#include "ftcut/oracles.hpp"

namespace ftcut::cli {

namespace {

using nlohmann::json;

json cut_to_json(const Cut& s) {
    json arr = json::array();
    for (int v : s.members()) arr.push_back(v);
    return arr;
}

json fault_set_to_json(const FaultSet& f) {
    json arr = json::array();
    for (int v : f.members()) arr.push_back(v);
    return arr;
}

json support_to_json(const CutDistribution& d) {
    json arr = json::array();
    for (const auto& [cut, p] : d.support()) arr.push_back({{"cut", cut_to_json(cut)}, {"p", p}});
    return arr;
}

Graph load_input(const RunConfig& cfg, std::string& label) {
    if (cfg.family && !cfg.input_path.empty())
        throw ValidationError("input: give either a graph file or a family, not both");
    if (cfg.family) {
        label = cfg.family_name.empty() ? "<family>" : cfg.family_name;
        return generate(*cfg.family);
    }
    if (cfg.input_path.empty())
        throw ValidationError("input: no graph file or family given");
    std::ifstream in(cfg.input_path);
    if (!in) throw ValidationError("input: cannot open " + cfg.input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    label = cfg.input_path;
    return load_graph(buf.str());
}

json envelope(const RunConfig& cfg, const std::string& label, const Graph& g) {
    return {{"command", cfg.command}, {"input", label},     {"n", g.n()},
            {"edge_count", g.edge_count()},                 {"total_weight", g.total_weight()}};
}

MaxCutOracle pick_oracle(const RunConfig& cfg) {
    if (cfg.oracle == "exact") return exact_max_cut_oracle(cfg.enum_cap);
    if (cfg.oracle == "stable-half") return stable_half_max_cut_oracle();
    throw ValidationError("flags: unknown oracle '" + cfg.oracle + "'");
}

void maybe_write_file(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw ValidationError("output: cannot open " + path);
    out << text;
}

std::string csv_escape(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render(const RunConfig& cfg, const json& report) {
    if (cfg.format == "json") return report.dump(2) + "\n";
    std::ostringstream out;
    if (cfg.command == "randomcut") {
        // Experiment CSV: one row per run.
        out << "family,n,k,trials,mean,stderr,phi_star,ratio\n";
        auto field = [&](const char* key) {
            return report.contains(key) ? csv_escape(report[key]) : std::string();
        };
        out << field("input") << ',' << field("n") << ',' << field("k") << ','
            << field("trials") << ',' << field("mean") << ',' << field("stderr") << ','
            << field("phi_star") << ',' << field("ratio") << '\n';
        return out.str();
    }
    out << "key,value\n";
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (it.value().is_structured()) continue;
        out << it.key() << ',' << csv_escape(it.value()) << '\n';
    }
    return out.str();
}

json run_exact(const RunConfig& cfg) {
    std::string label;
    Graph g = load_input(cfg, label);
    json report = envelope(cfg, label, g);
    report["mode"] = cfg.mode;
    report["k"] = cfg.k;
    if (cfg.mode == "maxcut") {
        auto r = exact_max_cut(g, cfg.enum_cap);
        report["value"] = r.value;
        report["cut"] = cut_to_json(r.cut);
    } else if (cfg.mode == "adaptive") {
        auto r = exact_aftcut(g, cfg.k, cfg.enum_cap);
        report["value"] = r.value;
        report["phi_star"] = r.value;
        report["cut"] = cut_to_json(r.cut);
    } else if (cfg.mode == "oblivious") {
        auto r = exact_oftcut_value(g, cfg.k, cfg.lp_cap);
        report["value"] = r.value;
        report["support"] = support_to_json(r.distribution);
        report["mass"] = r.distribution.mass();
        auto ft = distribution_ft_value_witness(g, r.distribution, cfg.k);
        report["adversary_best_f"] = fault_set_to_json(ft.worst);
    } else {
        throw ValidationError("flags: unknown mode '" + cfg.mode + "'");
    }
    return report;
}

json run_aftcut_local(const RunConfig& cfg) {
    std::string label;
    Graph g = load_input(cfg, label);
    json report = envelope(cfg, label, g);
    auto r = local_search_single_fault(g);
    report["cut"] = cut_to_json(r.cut);
    report["cut_value"] = cut_value(g, r.cut);
    report["phi"] = ft_value(g, r.cut, std::min(1, g.n()));
    report["iterations"] = r.trace.size();
    json trace = json::array();
    for (const auto& step : r.trace)
        trace.push_back({{"step", step_kind_name(step.kind)},
                         {"vertex", step.vertex},
                         {"cut_value", step.cut_value},
                         {"ft_value", step.ft_value}});
    report["trace"] = std::move(trace);
    return report;
}

json run_aftcut_k(const RunConfig& cfg) {
    std::string label;
    Graph g = load_input(cfg, label);
    json report = envelope(cfg, label, g);
    Rat eps = Rat::from_decimal(cfg.eps);
    auto smc = exact_smc_oracle(cfg.enum_cap);
    auto mc = pick_oracle(cfg);
    auto r = aftcut_k_approx(g, cfg.k, eps, smc, mc, cfg.enum_cap);
    report["k"] = cfg.k;
    report["eps"] = cfg.eps;
    report["oracle"] = cfg.oracle;
    json heavy = json::array();
    for (int v : r.heavy.heavy) heavy.push_back(v);
    report["heavy"] = std::move(heavy);
    report["shallow"] = r.shallow;
    json super = json::array();
    for (int v : r.super_heavy) super.push_back(v);
    report["super_heavy"] = std::move(super);
    report["branch"] = kfault_branch_name(r.branch);
    report["cut"] = cut_to_json(r.cut);
    report["phi"] = r.phi;
    if (g.n() <= 16 && g.n() <= cfg.enum_cap) {
        auto star = exact_aftcut(g, cfg.k, cfg.enum_cap);
        report["phi_star"] = star.value;
        if (star.value > 0)
            report["ratio"] = static_cast<double>(r.phi) / static_cast<double>(star.value);
    }
    return report;
}

json run_oftcut(const RunConfig& cfg) {
    std::string label;
    Graph g = load_input(cfg, label);
    json report = envelope(cfg, label, g);
    OftcutParams params;
    params.eps_y = cfg.eps_y;
    auto r = solve_oftcut(g, cfg.k, pick_oracle(cfg), params);
    report["k"] = cfg.k;
    report["eps_y"] = cfg.eps_y;
    report["oracle"] = cfg.oracle;
    report["value"] = r.value;
    report["lower_bound"] = r.lower_bound;
    report["upper_bound"] = r.upper_bound;
    report["reported_y"] = r.reported_y;
    report["support"] = support_to_json(r.distribution);
    report["mass"] = r.distribution.mass();
    report["adversary_best_f"] = fault_set_to_json(r.adversary_best);
    report["distribution_value"] = r.distribution_value;
    report["queried_cut_count"] = r.queried_cuts.size();
    return report;
}

json run_randomcut(const RunConfig& cfg) {
    std::string label;
    Graph g = load_input(cfg, label);
    json report = envelope(cfg, label, g);
    report["k"] = cfg.k;
    RandomCutMode mode;
    if (cfg.exact_expectation)
        mode = RandomCutExact{};
    else
        mode = RandomCutMonteCarlo{cfg.trials, cfg.seed};
    auto r = uniform_random_cut_ft(g, cfg.k, mode);
    report["exact"] = r.exact;
    report["trials"] = r.trials;
    report["mean"] = r.mean;
    report["stderr"] = r.stderr_of_mean;
    if (g.n() <= 16 && g.n() <= cfg.enum_cap) {
        auto star = exact_aftcut(g, cfg.k, cfg.enum_cap);
        report["phi_star"] = star.value;
        if (star.value > 0)
            report["ratio"] = r.mean / static_cast<double>(star.value);
    }
    return report;
}

json run_reduce(const RunConfig& cfg) {
    std::string label;
    Graph g = load_input(cfg, label);
    Graph reduced = star_reduction(g);
    json report = envelope(cfg, label, g);
    report["output_n"] = reduced.n();
    report["output_edge_count"] = reduced.edge_count();
    report["output_path"] = cfg.output_path;
    std::string text = serialize_graph(reduced);
    maybe_write_file(cfg.output_path, text);
    if (cfg.output_path.empty()) report["graph_text"] = text;
    return report;
}

json run_gen(const RunConfig& cfg) {
    if (!cfg.family) throw ValidationError("flags: gen requires a --family");
    Graph g = generate(*cfg.family);
    json report = {{"command", cfg.command},
                   {"family", cfg.family_name},
                   {"n", g.n()},
                   {"edge_count", g.edge_count()},
                   {"total_weight", g.total_weight()},
                   {"output_path", cfg.output_path}};
    std::string text = serialize_graph(g);
    maybe_write_file(cfg.output_path, text);
    if (cfg.output_path.empty()) report["graph_text"] = text;
    return report;
}

void validate_flags(const RunConfig& cfg) {
    const char* commands[] = {"exact", "aftcut-local", "aftcut-k", "oftcut",
                              "randomcut", "reduce", "gen"};
    bool known = false;
    for (const char* c : commands) known = known || cfg.command == c;
    if (!known) throw ValidationError("flags: unknown command '" + cfg.command + "'");
    if (cfg.format != "json" && cfg.format != "csv")
        throw ValidationError("flags: unknown format '" + cfg.format + "'");
    if (cfg.oracle != "exact" && cfg.oracle != "stable-half")
        throw ValidationError("flags: unknown oracle '" + cfg.oracle + "'");
    if (cfg.k < 0) throw ValidationError("flags: k must be >= 0");
    if (cfg.trials < 1) throw ValidationError("flags: trials must be >= 1");
    if (cfg.enum_cap < 1 || cfg.lp_cap < 1)
        throw ValidationError("flags: enumeration caps must be >= 1");
    if (!(cfg.eps_y > 0)) throw ValidationError("flags: eps-y must be positive");
    Rat::from_decimal(cfg.eps); // fails loudly on malformed eps
}

} // namespace

RunOutcome run(const RunConfig& cfg) {
    RunOutcome outcome;
    try {
        validate_flags(cfg);
        json report;
        if (cfg.command == "exact")
            report = run_exact(cfg);
        else if (cfg.command == "aftcut-local")
            report = run_aftcut_local(cfg);
        else if (cfg.command == "aftcut-k")
            report = run_aftcut_k(cfg);
        else if (cfg.command == "oftcut")
            report = run_oftcut(cfg);
        else if (cfg.command == "randomcut")
            report = run_randomcut(cfg);
        else if (cfg.command == "reduce")
            report = run_reduce(cfg);
        else
            report = run_gen(cfg);
        outcome.report = std::move(report);
        outcome.rendered = render(cfg, outcome.report);
        outcome.exit_code = 0;
    } catch (const ValidationError& e) {
        outcome.report = {{"error", e.what()}, {"command", cfg.command}};
        outcome.rendered = outcome.report.dump(2) + "\n";
        outcome.exit_code = 2;
    } catch (const std::exception& e) {
        outcome.report = {{"error", e.what()}, {"command", cfg.command}};
        outcome.rendered = outcome.report.dump(2) + "\n";
        outcome.exit_code = 3;
    }
    return outcome;
}

} // namespace ftcut::cli
