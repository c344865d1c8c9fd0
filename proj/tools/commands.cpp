#include "commands.hpp"

#include "vsat/error.hpp"
#include "vsat/preflib.hpp"
#include "vsat/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace vsat::cli {

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Profile load_profile(const std::string& path)
{
    const auto ext = std::filesystem::path(path).extension().string();
    const std::string text = slurp(path);
    try {
        if (ext == ".soc")
            return parse_soc(text, path).profile;
        if (ext == ".json")
            return profile_from_json(Json::parse(text));
        return parse_profile_text(text);
    } catch (const Json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

PreferenceModel load_model(const ExperimentConfig& c)
{
    if (c.ic_m)
        return PreferenceModel::impartial_culture(c.ic_m);
    try {
        return model_from_json(Json::parse(slurp(c.model_file)));
    } catch (const Json::exception& e) {
        throw ValidationError(c.model_file + ": " + e.what());
    }
}

std::string model_name(const ExperimentConfig& c)
{
    return c.ic_m ? "ic" + std::to_string(c.ic_m) : std::filesystem::path(c.model_file).stem().string();
}

Parity parse_parity(const std::string& s)
{
    if (s == "even")
        return Parity::Even;
    if (s == "odd")
        return Parity::Odd;
    throw ValidationError("parity must be even or odd, got '" + s + "'");
}

EvalOptions eval_options(const ExperimentConfig& c, int m)
{
    EvalOptions o;
    o.tiebreak = TieBreakOrder::parse(c.tiebreak, m);
    o.resolute_cc = c.resolute_cc;
    return o;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

struct EstimateRow {
    std::string rule, axiom, model;
    long long n;
    std::uint64_t trials, seed;
    SatisfactionEstimate est;

    std::string key() const
    {
        return rule + "," + axiom + "," + model + "," + std::to_string(n) + "," + std::to_string(trials) + "," +
               std::to_string(seed);
    }
    std::string csv() const
    {
        return key() + "," + fmt(est.estimate) + "," + fmt(est.ci_lo) + "," + fmt(est.ci_hi);
    }
    Json json() const
    {
        Json j = {{"rule", rule}, {"axiom", axiom}, {"model", model}, {"n", n}, {"trials", trials}, {"seed", seed}};
        const Json e = to_json(est);
        for (auto& [k, v] : e.items())
            j[k] = v;
        return j;
    }
};

const char* kCsvHeader = "rule,axiom,model,n,trials,seed,estimate,ci_lo,ci_hi";

// CSV field containing commas (rule names like scoring:[3,1,0]) is quoted.
std::string csv_field(const std::string& s)
{
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

EstimateRow run_estimate(const ExperimentConfig& c, const PreferenceModel& model, const std::string& rule_text,
                         const std::string& axiom_text, long long n)
{
    const RuleSpec rule = parse_rule(rule_text);
    const Axiom axiom = parse_axiom(axiom_text);
    rule.validate(model.m);
    if (n < 1 || n > 1'000'000'000)
        throw ValidationError("n out of range");
    EstimateRow row{csv_field(to_string(rule)), to_string(axiom), model_name(c), n, c.trials, c.seed, {}};
    const EvalOptions opt = eval_options(c, model.m);
    if (c.ic_m) {
        row.est = estimate_satisfaction(rule, axiom, SamplerPlan::ic(model.m, static_cast<int>(n), c.seed, c.trials),
                                        opt, !c.serial);
    } else if (model.distributions.size() == 1) {
        row.est = estimate_satisfaction(
            rule, axiom, SamplerPlan::iid(model.m, static_cast<int>(n), model.distributions[0], c.seed, c.trials), opt,
            !c.serial);
    } else {
        auto rep = adversarial_estimate(model, rule, axiom, static_cast<int>(n), c.trials, c.seed, opt);
        row.est = rep.candidates[rep.minimum].estimate;
    }
    return row;
}

} // namespace

void ExperimentConfig::validate() const
{
    auto need_model = [&] {
        if (ic_m == 0 && model_file.empty())
            throw ValidationError(command + " needs --model or --ic");
        if (ic_m != 0 && !model_file.empty())
            throw ValidationError("--model and --ic are exclusive");
        if (ic_m != 0 && (ic_m < 2 || ic_m > 10))
            throw ValidationError("--ic needs 2 <= m <= 10");
        if (!model_file.empty() && !std::filesystem::exists(model_file))
            throw ValidationError("model file not found: " + model_file);
    };
    auto need_rules = [&] {
        if (rules.empty())
            throw ValidationError(command + " needs at least one --rule");
        if (axioms.empty())
            throw ValidationError(command + " needs at least one --axiom");
    };
    if (command == "evaluate") {
        need_rules();
        if (profile_file.empty() || !std::filesystem::exists(profile_file))
            throw ValidationError("profile file not found: " + profile_file);
    } else if (command == "classify") {
        need_rules();
        need_model();
    } else if (command == "estimate" || command == "sweep") {
        need_rules();
        need_model();
        if (n.empty())
            throw ValidationError(command + " needs --n");
        if (trials == 0)
            throw ValidationError("--trials must be positive");
    } else if (command == "corpus") {
        need_rules();
        if (dir.empty() || !std::filesystem::is_directory(dir))
            throw ValidationError("corpus directory not found: " + dir);
    } else if (command == "construct") {
        if (family.empty())
            throw ValidationError("construct needs --family");
        if (n.size() != 1)
            throw ValidationError("construct needs exactly one --n");
    }
    if (!format.empty() && format != "csv" && format != "json" && format != "text")
        throw ValidationError("--format must be csv, json or text");
    if (jobs < 0)
        throw ValidationError("--jobs must be nonnegative");
}

int cmd_evaluate(const ExperimentConfig& c, std::ostream& out)
{
    const Profile p = load_profile(c.profile_file);
    bool all = true;
    for (const auto& rt : c.rules)
        for (const auto& at : c.axioms) {
            const RuleSpec rule = parse_rule(rt);
            const Axiom axiom = parse_axiom(at);
            const AxiomVerdict v = evaluate_axiom(axiom, rule, p, eval_options(c, p.m()));
            all = all && v.satisfied;
            if (c.format == "json") {
                out << verdict_json(axiom, rule, v).dump() << '\n';
                continue;
            }
            out << "rule=" << to_string(rule) << " axiom=" << to_string(axiom)
                << " satisfied=" << (v.satisfied ? "true" : "false");
            if (v.witness) {
                const auto& w = *v.witness;
                if (w.ranking)
                    out << " witness=" << w.ranking->str() << " winner_before=" << w.winner_before
                        << " winner_after=" << w.winner_after;
                else
                    out << " alternative=" << w.alternative;
            }
            out << '\n';
        }
    (void)all;
    return kExitOk;
}

int cmd_classify(const ExperimentConfig& c, std::ostream& out)
{
    const PreferenceModel model = load_model(c);
    const Parity parity = parse_parity(c.parity);
    for (const auto& rt : c.rules)
        for (const auto& at : c.axioms) {
            const RuleSpec rule = parse_rule(rt);
            const Axiom axiom = parse_axiom(at);
            AsymptoticCase ac;
            if (axiom == Axiom::CC)
                ac = classify_cc(model, rule, parity);
            else if (axiom == Axiom::Par)
                ac = classify_par(model, rule);
            else
                throw ValidationError("classify supports CC and Par");
            ac.parity = parity;
            Json j = {{"rule", to_string(rule)}, {"axiom", to_string(axiom)}, {"model", model_name(c)}};
            const Json body = to_json(ac, model.m);
            for (auto& [k, v] : body.items())
                j[k] = v;
            out << j.dump() << '\n';
        }
    return kExitOk;
}

int cmd_estimate(const ExperimentConfig& c, std::ostream& out)
{
    const PreferenceModel model = load_model(c);
    if (c.format != "json")
        out << kCsvHeader << '\n';
    for (const auto& rt : c.rules)
        for (const auto& at : c.axioms)
            for (long long n : c.n) {
                EstimateRow row = run_estimate(c, model, rt, at, n);
                if (c.format == "json")
                    out << row.json().dump() << '\n';
                else
                    out << row.csv() << '\n';
                out.flush();
            }
    return kExitOk;
}

int cmd_sweep(const ExperimentConfig& c, std::ostream& out)
{
    if (c.out.empty())
        return cmd_estimate(c, out);
    // The output CSV is its own checkpoint: finished keys are skipped and
    // duplicate rows are dropped on rewrite.
    std::vector<std::string> rows;
    std::set<std::string> done;
    if (std::filesystem::exists(c.out)) {
        std::istringstream in(slurp(c.out));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line == kCsvHeader)
                continue;
            auto cut = line.size();
            for (int k = 0; k < 3; ++k)
                cut = line.rfind(',', cut - 1);
            const std::string key = line.substr(0, cut);
            if (done.insert(key).second)
                rows.push_back(line);
        }
    }
    {
        std::ofstream f(c.out, std::ios::trunc);
        f << kCsvHeader << '\n';
        for (const auto& r : rows)
            f << r << '\n';
        if (!f)
            throw ValidationError("cannot write " + c.out);
    }
    const PreferenceModel model = load_model(c);
    long long added = 0, skipped = 0;
    for (const auto& rt : c.rules)
        for (const auto& at : c.axioms)
            for (long long n : c.n) {
                EstimateRow probe{csv_field(to_string(parse_rule(rt))), to_string(parse_axiom(at)), model_name(c), n,
                                  c.trials, c.seed, {}};
                if (done.count(probe.key())) {
                    ++skipped;
                    continue;
                }
                EstimateRow row = run_estimate(c, model, rt, at, n);
                std::ofstream f(c.out, std::ios::app);
                f << row.csv() << '\n';
                done.insert(row.key());
                ++added;
            }
    out << "sweep: " << added << " new rows, " << skipped << " resumed, seed=" << c.seed << " -> " << c.out << '\n';
    return kExitOk;
}

int cmd_corpus(const ExperimentConfig& c, std::ostream& out)
{
    CorpusOptions opt;
    for (const auto& r : c.rules)
        opt.rules.push_back(parse_rule(r));
    for (const auto& a : c.axioms)
        opt.axioms.push_back(parse_axiom(a));
    opt.resolute_cc = c.resolute_cc;
    opt.parallel = !c.serial;
    if (!c.tiebreak.empty() && c.tiebreak != "lex" && c.tiebreak != "identity")
        opt.tiebreak = Ranking::parse(c.tiebreak).order();
    CorpusReport r = evaluate_corpus(std::filesystem::path(c.dir), opt);
    if (c.format == "json") {
        Json cells = Json::array();
        for (const auto& cell : r.cells)
            cells.push_back({{"rule", cell.rule},
                             {"axiom", to_string(cell.axiom)},
                             {"satisfied", cell.satisfied},
                             {"evaluated", cell.evaluated},
                             {"skipped", cell.skipped}});
        out << Json{{"files", r.files}, {"cells", cells}}.dump() << '\n';
    } else {
        out << corpus_csv(r);
    }
    if (!c.audit.empty()) {
        std::ofstream f(c.audit, std::ios::trunc);
        f << corpus_jsonl(r);
        if (!f)
            throw ValidationError("cannot write " + c.audit);
    }
    if (r.any_skipped()) {
        for (const auto& u : r.unreadable)
            std::fprintf(stderr, "skipped: %s\n", u.c_str());
        for (const auto& v : r.verdicts)
            if (!v.verdict)
                std::fprintf(stderr, "skipped: %s %s %s: %s\n", v.file.c_str(), v.rule.c_str(),
                             to_string(v.axiom).c_str(), v.skipped.c_str());
        return kExitBound;
    }
    return kExitOk;
}

int cmd_construct(const ExperimentConfig& c, std::ostream& out)
{
    const long long n = c.n.front();
    if (c.m < 3)
        throw ValidationError("construct needs --m");
    if (c.family == "gap") {
        if (c.rules.size() != 1)
            throw ValidationError("gap construction needs one scoring --rule");
        const RuleSpec rule = parse_rule(c.rules.front());
        if (rule.kind != RuleKind::Scoring)
            throw ValidationError("gap construction needs a scoring rule");
        const Profile p = cw_scoring_gap_profile(rule.scoring_vector(c.m), c.m, n, c.a, c.b);
        if (c.format == "json") {
            out << Json{{"family", "gap"}, {"rule", to_string(rule)}, {"cw", c.a}, {"winner", c.b},
                        {"profile", to_json(p)}}
                       .dump()
                << '\n';
        } else {
            out << "# family: gap\n# rule: " << to_string(rule) << "\n# m: " << c.m << "\n# n: " << n
                << "\n# condorcet_winner: " << c.a << "\n# scoring_winner: " << c.b << "\n"
                << format_profile_text(p);
        }
        return kExitOk;
    }
    const RuleSpec rule = parse_rule(c.family);
    const TieBreakOrder tb = TieBreakOrder::parse(c.tiebreak, c.m);
    const ParViolation v = par_violation_profile(rule, c.m, n, tb);
    if (c.format == "json") {
        Json j = {{"family", to_string(rule)}, {"m", c.m}, {"tiebreak", tb.priority}};
        const Json body = to_json(v);
        for (auto& [k, val] : body.items())
            j[k] = val;
        out << j.dump() << '\n';
        return kExitOk;
    }
    std::string winners;
    for (int a : v.cowinners)
        winners += (winners.empty() ? "" : ",") + std::to_string(a);
    out << "# family: " << to_string(rule) << "\n# m: " << c.m << "\n# n: " << n << "\n# threshold: " << v.threshold
        << "\n# cowinners: " << winners << "\n# winner_before: " << v.winner_before
        << "\n# winner_after: " << v.winner_after << "\n# abstainer: " << v.abstainer.str() << "\n"
        << format_profile_text(v.profile);
    return kExitOk;
}

} // namespace vsat::cli
