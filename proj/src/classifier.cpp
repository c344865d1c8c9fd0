#include "vsat/classifier.hpp"
#include "vsat/axioms.hpp"
#include "vsat/error.hpp"

#include <map>

namespace vsat {

std::string to_string(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

namespace {

using Constraints = std::vector<MixtureConstraint>;

MixtureConstraint margin(int m, int a, int b, Relation rel)
{
    return {to_rationals(pair_form(m, a, b)), rel};
}

// score(a) - score(b) with the alternatives in removed already eliminated.
MixtureConstraint score_diff(int m, const AltSet& removed, int a, int b, const std::vector<long long>& s,
                             Relation rel)
{
    return {to_rationals(score_pair_form(m, removed, a, b, s)), rel};
}

void add_wcw(Constraints& cs, int m, int a)
{
    for (int c = 1; c <= m; ++c)
        if (c != a)
            cs.push_back(margin(m, a, c, Relation::Ge));
}

void add_cw(Constraints& cs, int m, int a)
{
    for (int c = 1; c <= m; ++c)
        if (c != a)
            cs.push_back(margin(m, a, c, Relation::Gt));
}

void add_acw(Constraints& cs, int m, int a, int b)
{
    cs.push_back(margin(m, a, b, Relation::Eq));
    for (int c = 1; c <= m; ++c)
        if (c != a && c != b) {
            cs.push_back(margin(m, a, c, Relation::Gt));
            cs.push_back(margin(m, b, c, Relation::Gt));
        }
}

void check_model(const PreferenceModel& model, int m)
{
    model.validate();
    if (model.m != m)
        throw ValidationError("model has m = " + std::to_string(model.m) + " but the rule needs m = " +
                              std::to_string(m));
    if (m < 3)
        throw ValidationError("CC classification needs m >= 3");
}

AsymptoticCase make(Label l, Parity p, std::optional<MixtureWitness> w, std::string clause)
{
    AsymptoticCase c;
    c.label = l;
    c.parity = p;
    c.witness = std::move(w);
    c.clause = std::move(clause);
    c.note = "holds for all sufficiently large n of " + to_string(p) + " parity";
    return c;
}

// ---- scoring rules ----

// A mixture with a WCW a and a second alternative b in WCW or among the co-winners.
std::optional<MixtureWitness> scoring_vl_violation(const PreferenceModel& model, const std::vector<long long>& s)
{
    const int m = model.m;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            if (a == b)
                continue;
            Constraints both;
            add_wcw(both, m, a);
            add_wcw(both, m, b);
            if (auto w = mixture_feasibility(model, both))
                return w;
            Constraints cowin;
            add_wcw(cowin, m, a);
            for (int c = 1; c <= m; ++c)
                if (c != b)
                    cowin.push_back(score_diff(m, {}, b, c, s, Relation::Ge));
            if (auto w = mixture_feasibility(model, cowin))
                return w;
        }
    return std::nullopt;
}

std::optional<MixtureWitness> scoring_vu_witness(const PreferenceModel& model, const std::vector<long long>& s)
{
    const int m = model.m;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            if (a == b)
                continue;
            Constraints cs;
            add_cw(cs, m, a);
            cs.push_back(score_diff(m, {}, b, a, s, Relation::Gt));
            if (auto w = mixture_feasibility(model, cs))
                return w;
        }
    return std::nullopt;
}

// ACW pair {a,b}, both beaten on score by some other alternative.
std::optional<MixtureWitness> scoring_acw_witness(const PreferenceModel& model, const std::vector<long long>& s)
{
    const int m = model.m;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            for (int d = 1; d <= m; ++d)
                for (int e = 1; e <= m; ++e) {
                    if (d == a || e == b)
                        continue;
                    Constraints cs;
                    add_acw(cs, m, a, b);
                    cs.push_back(score_diff(m, {}, d, a, s, Relation::Gt));
                    cs.push_back(score_diff(m, {}, e, b, s, Relation::Gt));
                    if (auto w = mixture_feasibility(model, cs))
                        return w;
                }
    return std::nullopt;
}

// ---- MRSE rules ----

struct MrseSearch {
    const PreferenceModel& model;
    const RuleSpec& rule;
    int m;
    std::uint64_t targets; // none of these may win
    std::map<std::uint64_t, std::uint64_t> assigned;
    Constraints cs;

    AltSet removed_of(std::uint64_t alive) const
    {
        AltSet r;
        for (int x = 1; x <= m; ++x)
            if (!(alive >> (x - 1) & 1u))
                r.push_back(x);
        return r;
    }

    // Exact loser set lm at alive: equal scores inside, strictly below the rest.
    void add_loser_rows(std::uint64_t alive, std::uint64_t lm)
    {
        const auto removed = removed_of(alive);
        const auto s = rule.component(std::popcount(alive));
        const int first = std::countr_zero(lm) + 1;
        for (int x = 1; x <= m; ++x) {
            if (!(alive >> (x - 1) & 1u) || x == first)
                continue;
            Relation rel = (lm >> (x - 1) & 1u) ? Relation::Eq : Relation::Lt;
            cs.push_back(score_diff(m, removed, first, x, s, rel));
        }
    }

    std::optional<MixtureWitness> run(std::vector<std::uint64_t> pending)
    {
        while (!pending.empty() && assigned.count(pending.back()))
            pending.pop_back();
        if (pending.empty())
            return mixture_feasibility(model, cs);
        const std::uint64_t alive = pending.back();
        pending.pop_back();
        for (std::uint64_t lm = alive; lm; lm = (lm - 1) & alive) {
            bool bad = false;
            std::vector<std::uint64_t> next = pending;
            for (std::uint64_t r = lm; r; r &= r - 1) {
                std::uint64_t child = alive & ~(1ULL << std::countr_zero(r));
                if (std::popcount(child) == 1) {
                    bad = bad || (child & targets);
                } else if (child & targets) {
                    next.push_back(child);
                }
            }
            if (bad)
                continue;
            const std::size_t mark = cs.size();
            add_loser_rows(alive, lm);
            if (mixture_feasibility(model, cs)) {
                assigned[alive] = lm;
                auto w = run(next);
                assigned.erase(alive);
                if (w) {
                    cs.resize(mark);
                    return w;
                }
            }
            cs.resize(mark);
        }
        return std::nullopt;
    }
};

std::optional<MixtureWitness> mrse_no_target_wins(const PreferenceModel& model, const RuleSpec& rule,
                                                  Constraints base, std::uint64_t targets)
{
    if (!mixture_feasibility(model, base))
        return std::nullopt;
    MrseSearch s{model, rule, model.m, targets, {}, std::move(base)};
    return s.run({(1ULL << model.m) - 1});
}

std::optional<MixtureWitness> mrse_vu_witness(const PreferenceModel& model, const RuleSpec& rule)
{
    for (int a = 1; a <= model.m; ++a) {
        Constraints cs;
        add_cw(cs, model.m, a);
        if (auto w = mrse_no_target_wins(model, rule, cs, 1ULL << (a - 1)))
            return w;
    }
    return std::nullopt;
}

std::optional<MixtureWitness> mrse_acw_witness(const PreferenceModel& model, const RuleSpec& rule)
{
    for (int a = 1; a <= model.m; ++a)
        for (int b = a + 1; b <= model.m; ++b) {
            Constraints cs;
            add_acw(cs, model.m, a, b);
            if (auto w = mrse_no_target_wins(model, rule, cs, (1ULL << (a - 1)) | (1ULL << (b - 1))))
                return w;
        }
    return std::nullopt;
}

// A WCW a eliminated (as a weak loser) in a round whose component fails CL.
struct VlSearch {
    const PreferenceModel& model;
    const RuleSpec& rule;
    const std::vector<char>& cl_fails; // indexed by component size
    int m;
    int a;
    Constraints cs;

    std::optional<MixtureWitness> run(AltSet removed)
    {
        const int k = m - static_cast<int>(removed.size());
        if (k < 2)
            return std::nullopt;
        const auto s = rule.component(k);
        auto weak_loser = [&](int x) {
            for (int c = 1; c <= m; ++c)
                if (c != x && std::find(removed.begin(), removed.end(), c) == removed.end())
                    cs.push_back(score_diff(m, removed, x, c, s, Relation::Le));
        };
        if (cl_fails[k]) {
            const std::size_t mark = cs.size();
            weak_loser(a);
            auto w = mixture_feasibility(model, cs);
            cs.resize(mark);
            if (w)
                return w;
        }
        for (int x = 1; x <= m; ++x) {
            if (x == a || std::find(removed.begin(), removed.end(), x) != removed.end())
                continue;
            const std::size_t mark = cs.size();
            weak_loser(x);
            if (mixture_feasibility(model, cs)) {
                AltSet next = removed;
                next.push_back(x);
                std::sort(next.begin(), next.end());
                if (auto w = run(next)) {
                    cs.resize(mark);
                    return w;
                }
            }
            cs.resize(mark);
        }
        return std::nullopt;
    }
};

std::vector<char> cl_failures(const RuleSpec& rule, int m)
{
    std::vector<char> fails(m + 1, 0);
    for (int k = 3; k <= m; ++k)
        fails[k] = !rule_satisfies_cl(rule.component(k)).satisfied;
    return fails;
}

} // namespace

AsymptoticCase classify_cc_scoring(const PreferenceModel& model, const std::vector<long long>& s, Parity parity)
{
    validate_scoring_vector(s);
    check_model(model, static_cast<int>(s.size()));
    if (!scoring_vl_violation(model, s))
        return make(Label::VeryLikely, parity, std::nullopt, "no mixture has |WCW| * |winners u WCW| > 1");
    auto vu = scoring_vu_witness(model, s);
    if (parity == Parity::Even) {
        if (!vu)
            if (auto w = scoring_acw_witness(model, s))
                return make(Label::Unlikely, parity, w, "ACW pair outside the winners, no CW outside");
        if (vu)
            return make(Label::VeryUnlikely, parity, vu, "CW outside the winners");
    } else {
        if (vu)
            return make(Label::VeryUnlikely, parity, vu, "CW outside the winners");
        if (auto w = scoring_acw_witness(model, s))
            return make(Label::VeryUnlikely, parity, w, "ACW pair outside the winners");
    }
    return make(Label::Medium, parity, std::nullopt, "otherwise");
}

AsymptoticCase classify_cc_mrse(const PreferenceModel& model, const RuleSpec& rule, Parity parity)
{
    if (rule.kind != RuleKind::Mrse)
        throw ValidationError("expected an MRSE rule");
    check_model(model, model.m);
    rule.validate(model.m);
    const int m = model.m;
    const auto fails = cl_failures(rule, m);
    if (std::none_of(fails.begin(), fails.end(), [](char c) { return c; }))
        return make(Label::One, parity, std::nullopt, "every component satisfies Condorcet loser");

    bool vl = true;
    for (int a = 1; a <= m && vl; ++a) {
        VlSearch search{model, rule, fails, m, a, {}};
        add_wcw(search.cs, m, a);
        if (!mixture_feasibility(model, search.cs))
            continue;
        if (search.run({}))
            vl = false;
    }
    if (vl)
        return make(Label::VeryLikely, parity, std::nullopt,
                    "no WCW can lose in a round whose component fails Condorcet loser");

    auto vu = mrse_vu_witness(model, rule);
    if (parity == Parity::Even) {
        if (!vu)
            if (auto w = mrse_acw_witness(model, rule))
                return make(Label::Unlikely, parity, w, "ACW pair outside the winners, no CW outside");
        if (vu)
            return make(Label::VeryUnlikely, parity, vu, "CW outside the winners");
    } else {
        if (vu)
            return make(Label::VeryUnlikely, parity, vu, "CW outside the winners");
        if (auto w = mrse_acw_witness(model, rule))
            return make(Label::VeryUnlikely, parity, w, "ACW pair outside the winners");
    }
    return make(Label::Medium, parity, std::nullopt, "otherwise");
}

AsymptoticCase classify_cc(const PreferenceModel& model, const RuleSpec& rule, Parity parity)
{
    switch (rule.kind) {
    case RuleKind::Scoring:
        return classify_cc_scoring(model, rule.scoring_vector(model.m), parity);
    case RuleKind::Mrse:
        return classify_cc_mrse(model, rule, parity);
    default:
        throw ValidationError("CC classification supports scoring and MRSE rules only");
    }
}

AsymptoticCase classify_par(const PreferenceModel& model, const RuleSpec& rule)
{
    model.validate();
    if (model.m < 4)
        throw ValidationError("participation classification is unsupported for m < 4");
    if (rule.kind == RuleKind::Scoring)
        throw ValidationError("participation classification needs maximin, ranked pairs, Schulze, Copeland, "
                              "MRSE or a Condorcetified scoring rule");
    rule.validate(model.m);
    const std::size_t q = factorial(model.m);
    Constraints cs;
    for (std::size_t r = 0; r + 1 < q; ++r) {
        std::vector<Rational> f(q, 0);
        f[r] = 1;
        f[r + 1] = -1;
        cs.push_back({std::move(f), Relation::Eq});
    }
    AsymptoticCase c;
    c.parity = Parity::Even;
    if (auto w = mixture_feasibility(model, cs)) {
        c.label = Label::Likely;
        c.ell = 1;
        c.witness = w;
        c.clause = "uniform distribution lies in the hull";
        c.note = "1 - Theta(n^(-1/2)) for all sufficiently large n";
    } else {
        c.label = Label::Indeterminate;
        c.clause = "uniform distribution outside the hull";
        c.note = "at least 1 - Theta(n^(-l/2)) for some l >= 1; may be 1 or 1 - exp(-Theta(n))";
    }
    return c;
}

GisrReport gisr_conditions(const PreferenceModel& model, const RuleSpec& rule, const MixtureWitness& pi)
{
    if (rule.kind != RuleKind::Scoring && rule.kind != RuleKind::Mrse)
        throw ValidationError("GISR conditions are available for scoring and MRSE rules only");
    const int m = model.m;
    const Profile p = as_profile(m, pi.distribution);
    const auto ms = majority_structure(p);
    const auto win = cowinners(rule, p);
    auto in_win = [&](int a) { return std::find(win.begin(), win.end(), a) != win.end(); };
    GisrReport rep;
    rep.rd = ms.cw && !in_win(*ms.cw);
    rep.nrs = ms.acw.size() == 2 && !in_win(ms.acw[0]) && !in_win(ms.acw[1]);
    if (rule.kind == RuleKind::Scoring) {
        AltSet uni = win;
        uni.insert(uni.end(), ms.wcw.begin(), ms.wcw.end());
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        rep.rs = ms.wcw.size() * uni.size() <= 1;
        rep.as = false;
    } else {
        const auto fails = cl_failures(rule, m);
        rep.as = std::none_of(fails.begin(), fails.end(), [](char c) { return c; });
        rep.rs = true;
        for (int a : ms.wcw)
            for (int i : possible_losing_rounds(rule, p, a))
                if (fails[m + 1 - i])
                    rep.rs = false;
    }
    return rep;
}

} // namespace vsat
