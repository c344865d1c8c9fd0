#include "commands.hpp"

#include "vsat/error.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace vsat::cli;

namespace {

void common(CLI::App* sub, ExperimentConfig& c)
{
    sub->add_option("--rule", c.rules, "voting rule (repeatable)");
    sub->add_option("--axiom", c.axioms, "CC, CCStar, Par or CL (repeatable)");
    sub->add_option("--tiebreak", c.tiebreak, "priority order, e.g. 3>1>2");
    sub->add_option("--out", c.out, "output file (stdout when absent)");
    sub->add_option("--format", c.format, "csv, json or text");
    sub->add_option("--jobs", c.jobs, "OpenMP threads (0 = default)");
    sub->add_flag("--resolute-cc", c.resolute_cc, "check CC against the tie-broken winner");
    sub->add_flag("--serial", c.serial, "use the serial kernels");
}

void model_opts(CLI::App* sub, ExperimentConfig& c)
{
    sub->add_option("--model", c.model_file, "model JSON file");
    sub->add_option("--ic", c.ic_m, "impartial culture over m alternatives");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vsat: axiom satisfaction for voting rules"};
    app.require_subcommand(1);
    ExperimentConfig c;

    auto* ev = app.add_subcommand("evaluate", "check axioms on one profile");
    common(ev, c);
    ev->add_option("--profile", c.profile_file, "profile (.soc, .json or text)")->required();

    auto* cl = app.add_subcommand("classify", "asymptotic label of a model");
    common(cl, c);
    model_opts(cl, c);
    cl->add_option("--parity", c.parity, "even or odd");

    auto* es = app.add_subcommand("estimate", "Monte Carlo satisfaction estimate");
    common(es, c);
    model_opts(es, c);
    es->add_option("--n", c.n, "number of voters (repeatable)");
    es->add_option("--trials", c.trials, "number of sampled profiles")->required();
    es->add_option("--seed", c.seed, "RNG seed");

    auto* sw = app.add_subcommand("sweep", "estimate over a grid, resumable through --out");
    common(sw, c);
    model_opts(sw, c);
    sw->add_option("--n", c.n, "number of voters (repeatable)");
    sw->add_option("--trials", c.trials, "number of sampled profiles")->required();
    sw->add_option("--seed", c.seed, "RNG seed");

    auto* co = app.add_subcommand("corpus", "evaluate a directory of .soc files");
    common(co, c);
    co->add_option("--dir", c.dir, "directory with .soc files")->required();
    co->add_option("--audit", c.audit, "per-file JSON-lines output");

    auto* cn = app.add_subcommand("construct", "build a witness profile");
    common(cn, c);
    cn->add_option("--family", c.family, "rule family, or 'gap' with a scoring --rule")->required();
    cn->add_option("--m", c.m, "number of alternatives")->required();
    cn->add_option("--n", c.n, "number of voters")->required();
    cn->add_option("--a", c.a, "Condorcet winner (gap)");
    cn->add_option("--b", c.b, "scoring winner (gap)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    const std::map<CLI::App*, std::pair<std::string, std::function<int(const ExperimentConfig&, std::ostream&)>>>
        table{{ev, {"evaluate", cmd_evaluate}},   {cl, {"classify", cmd_classify}}, {es, {"estimate", cmd_estimate}},
              {sw, {"sweep", cmd_sweep}},         {co, {"corpus", cmd_corpus}},     {cn, {"construct", cmd_construct}}};
    CLI::App* chosen = app.get_subcommands().front();
    const auto& [name, fn] = table.at(chosen);
    c.command = name;

    try {
        c.validate();
#ifdef _OPENMP
        if (c.jobs > 0)
            omp_set_num_threads(c.jobs);
#endif
        // sweep treats --out as its checkpoint file
        if (c.out.empty() || c.command == "sweep")
            return fn(c, std::cout);
        std::ofstream f(c.out, std::ios::trunc);
        if (!f)
            throw vsat::ValidationError("cannot write " + c.out);
        return fn(c, f);
    } catch (const vsat::BoundExceeded& e) {
        std::fprintf(stderr, "bound exceeded: %s\n", e.what());
        return kExitBound;
    } catch (const vsat::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
}
