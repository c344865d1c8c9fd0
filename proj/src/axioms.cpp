#include "vsat/axioms.hpp"
#include "vsat/lp.hpp"
#include "vsat/majority.hpp"
#include "kernels.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace vsat {

namespace {

bool contains(const AltSet& s, int a)
{
    return std::find(s.begin(), s.end(), a) != s.end();
}

AxiomVerdict cc_check(const Profile& p, const AltSet& winners, bool star)
{
    auto cw = majority_structure(p).cw;
    if (!cw)
        return {};
    bool ok = star ? (winners.size() == 1 && winners[0] == *cw) : contains(winners, *cw);
    if (ok)
        return {};
    AxiomWitness w;
    w.alternative = *cw;
    w.winners = winners;
    return {false, w};
}

} // namespace

AxiomVerdict sat_cc(const RuleSpec& rule, const Profile& p, const PutOptions& opt)
{
    return cc_check(p, cowinners(rule, p, opt), false);
}

AxiomVerdict sat_cc(const RuleSpec& rule, const Profile& p, const TieBreakOrder& tb)
{
    return cc_check(p, {resolve(rule, p, tb)}, false);
}

AxiomVerdict sat_cc_star(const RuleSpec& rule, const Profile& p, const PutOptions& opt)
{
    return cc_check(p, cowinners(rule, p, opt), true);
}

AxiomVerdict sat_cl_profile(const RuleSpec& rule, const Profile& p, const PutOptions& opt)
{
    auto cl = majority_structure(p).condorcet_loser;
    if (!cl)
        return {};
    auto winners = cowinners(rule, p, opt);
    if (!contains(winners, *cl))
        return {};
    AxiomWitness w;
    w.alternative = *cl;
    w.winners = winners;
    return {false, w};
}

AxiomVerdict sat_par(const RuleSpec& rule, const Profile& p, const TieBreakOrder& tb)
{
    p.require_integer("participation");
    if (p.total() < 1)
        throw ValidationError("participation needs a nonempty profile");
    rule.validate(p.m());
    tb.validate(p.m());
    return detail::dispatch(p, rule, [&](auto b) -> AxiomVerdict {
        const int before = detail::resolve_k(rule, b, tb);
        auto entries = p.entries().begin();
        for (std::size_t i = 0; i < b.size(); ++i, ++entries) {
            if (b.weights[i] < 1)
                continue;
            b.weights[i] -= 1;
            const bool empty = p.total() == 1;
            const int after = empty ? tb.priority.front() : detail::resolve_k(rule, b, tb);
            b.weights[i] += 1;
            const Ranking& r = entries->first;
            if (r.prefers(after, before)) {
                AxiomWitness w;
                w.ranking = r;
                w.winner_before = before;
                w.winner_after = after;
                return {false, w};
            }
        }
        return {};
    });
}

ClDecision rule_satisfies_cl(const std::vector<long long>& s, int max_k)
{
    validate_scoring_vector(s);
    const int k = static_cast<int>(s.size());
    if (k > max_k)
        throw BoundExceeded("Condorcet-loser LP needs k <= " + std::to_string(max_k));
    if (k == 2)
        return {};
    static std::mutex mu;
    static std::map<std::vector<long long>, ClDecision> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(s); it != cache.end())
            return it->second;
    }
    const auto rankings = all_rankings(k);
    const int n = static_cast<int>(rankings.size());
    ClDecision out;
    for (int a = 1; a <= k && out.satisfied; ++a) {
        lp::Problem prob(n);
        prob.add(std::vector<Rational>(n, 1), lp::Rel::Eq, 1);
        for (int b = 1; b <= k; ++b) {
            if (b == a)
                continue;
            std::vector<Rational> margin(n), diff(n);
            for (int j = 0; j < n; ++j) {
                const auto& r = rankings[j];
                margin[j] = r.prefers(a, b) ? 1 : -1;
                diff[j] = s[r.position(a)] - s[r.position(b)];
            }
            prob.add(std::move(margin), lp::Rel::Lt, 0);
            prob.add(std::move(diff), lp::Rel::Ge, 0);
        }
        auto x = lp::find_point(prob);
        if (!x)
            continue;
        Integer l = 1;
        for (const auto& v : *x)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
        Profile cex(k);
        for (int j = 0; j < n; ++j)
            if ((*x)[j] != 0)
                cex.add(rankings[j], (*x)[j] * Rational(l));
        if (sat_cl_profile(RuleSpec::scoring(s), cex).satisfied)
            throw std::logic_error("Condorcet-loser counterexample failed verification");
        out.satisfied = false;
        out.counterexample = std::move(cex);
    }
    std::lock_guard lock(mu);
    cache.emplace(s, out);
    return out;
}

std::string to_string(Axiom a)
{
    switch (a) {
    case Axiom::CC: return "cc";
    case Axiom::CCStar: return "cc*";
    case Axiom::Par: return "par";
    case Axiom::CL: return "cl";
    }
    return "?";
}

Axiom parse_axiom(std::string_view s)
{
    std::string t;
    for (char c : s)
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "cc" || t == "condorcet")
        return Axiom::CC;
    if (t == "cc*" || t == "ccstar" || t == "cc_star")
        return Axiom::CCStar;
    if (t == "par" || t == "participation")
        return Axiom::Par;
    if (t == "cl" || t == "condorcet-loser" || t == "condorcet_loser")
        return Axiom::CL;
    throw ValidationError("unknown axiom '" + std::string(s) + "'");
}

AxiomVerdict evaluate_axiom(Axiom axiom, const RuleSpec& rule, const Profile& p, const EvalOptions& opt)
{
    const TieBreakOrder tb = opt.tiebreak ? *opt.tiebreak : TieBreakOrder::identity(p.m());
    switch (axiom) {
    case Axiom::CC:
        return opt.resolute_cc ? sat_cc(rule, p, tb) : sat_cc(rule, p, opt.put);
    case Axiom::CCStar:
        return sat_cc_star(rule, p, opt.put);
    case Axiom::Par:
        return sat_par(rule, p, tb);
    case Axiom::CL:
        return sat_cl_profile(rule, p, opt.put);
    }
    throw ValidationError("unknown axiom");
}

} // namespace vsat
