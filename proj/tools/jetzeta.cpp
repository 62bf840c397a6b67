#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "jetzeta/cli.hpp"
#include "jetzeta/format.hpp"

int main(int argc, char** argv)
{
    using namespace jetzeta;

    CLI::App app{"zeta functions and jet-scheme invariants of space monomial curves"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("JETZETA_BUDGET"))
        cfg.budget = std::strtoull(env, nullptr, 10);

    std::string gens_csv, input_path;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--gens", gens_csv, "comma-separated generators, e.g. 4,6,13");
        sub->add_option("--input", input_path, "JSON file with {\"generators\":[...]}");
        sub->add_option("--format", cfg.format, "text | json | latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    auto* inv = app.add_subcommand("invariants", "structural pairs, lct, poles");
    add_input(inv);
    auto* mot = app.add_subcommand("motivic", "closed-form motivic zeta function");
    add_input(mot);
    mot->add_flag("--local", cfg.local, "local version at the origin");
    auto* topo = app.add_subcommand("topo", "topological zeta function");
    add_input(topo);
    auto* poles = app.add_subcommand("poles", "poles with residues, cross-checked");
    add_input(poles);
    auto* jets = app.add_subcommand("jets", "components of the jet fiber over the origin");
    add_input(jets);
    jets->add_option("--m", cfg.m, "truncation order")->required();
    auto* series = app.add_subcommand("series-check", "closed form vs truncated series");
    add_input(series);
    series->add_option("--order", cfg.order, "truncation order (default 4*N_1)");
    auto* count = app.add_subcommand("count", "finite-field point count vs class value");
    add_input(count);
    count->add_option("--m", cfg.m, "truncation order")->required();
    count->add_option("--q", cfg.q, "prime field size")->required();
    count->add_flag("--local", cfg.local, "count only jets centered at the origin");
    count->add_option("--threads", cfg.threads, "worker threads");
    count->add_option("--budget", cfg.budget, "operation budget");
    auto* flat = app.add_subcommand("flatness", "non-flatness threshold of the jet family");
    add_input(flat);
    auto* rnd = app.add_subcommand("random", "random valid generator tuple");
    rnd->add_option("--g", cfg.rand_g, "number of generators minus one")->required();
    long bound_ll = 150;
    rnd->add_option("--bound", bound_ll, "upper bound for the last generator");
    rnd->add_option("--seed", cfg.seed, "random seed");
    rnd->add_option("--format", cfg.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    auto* verify = app.add_subcommand("verify-all", "series, residue, count and limit checks");
    add_input(verify);
    verify->add_option("--order", cfg.order, "series order (default 4*N_1)");
    verify->add_option("--threads", cfg.threads, "worker threads");
    verify->add_option("--budget", cfg.budget, "operation budget");
    verify->add_option("--eps", cfg.eps, "offset for the specialization check");

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.bound = Int(static_cast<long>(bound_ll));

    try {
        if (!gens_csv.empty())
            cfg.generators = parse_generators_csv(gens_csv);
        else if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "cannot open " << input_path << "\n";
                return 1;
            }
            Json doc = Json::parse(in);
            cfg.generators = generators_from_json(doc);
        }
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }

    return run(cfg, std::cout, std::cerr);
}
