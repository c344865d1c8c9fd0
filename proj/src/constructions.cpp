#include "vsat/constructions.hpp"
#include "vsat/axioms.hpp"
#include "vsat/error.hpp"
#include "vsat/majority.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace vsat {

TargetWMG::TargetWMG(int m_) : m(m_), w(static_cast<std::size_t>(m_) * m_, 0) {}

TargetWMG TargetWMG::of(const Profile& p)
{
    p.require_integer("weighted majority graph target");
    TargetWMG t(p.m());
    auto g = wmg(p);
    for (int a = 1; a <= p.m(); ++a)
        for (int b = 1; b <= p.m(); ++b)
            t.w[(a - 1) * t.m + (b - 1)] = to_ll(g.w(a, b));
    return t;
}

void TargetWMG::set(int a, int b, long long v)
{
    if (a == b || a < 1 || b < 1 || a > m || b > m)
        throw ValidationError("margin index out of range");
    w[(a - 1) * m + (b - 1)] = v;
    w[(b - 1) * m + (a - 1)] = -v;
}

int TargetWMG::validate() const
{
    if (m < 2)
        throw ValidationError("a weighted majority graph needs at least 2 alternatives");
    if (w.size() != static_cast<std::size_t>(m) * m)
        throw ValidationError("margin matrix has the wrong size");
    int parity = -1;
    for (int a = 1; a <= m; ++a) {
        if (at(a, a) != 0)
            throw ValidationError("margin matrix diagonal must be zero");
        for (int b = a + 1; b <= m; ++b) {
            if (at(a, b) != -at(b, a))
                throw ValidationError("margins must be antisymmetric: w(" + std::to_string(a) + "," +
                                      std::to_string(b) + ") != -w(" + std::to_string(b) + "," +
                                      std::to_string(a) + ")");
            int p = static_cast<int>(((at(a, b) % 2) + 2) % 2);
            if (parity >= 0 && p != parity)
                throw ValidationError("off-diagonal margins must share one parity");
            parity = p;
        }
    }
    return parity;
}

namespace detail {

Ranking vote(int m, const std::vector<int>& head, const std::vector<int>& tail)
{
    std::vector<bool> used(m + 1, false);
    for (int a : head)
        used.at(a) = true;
    for (int a : tail)
        used.at(a) = true;
    std::vector<int> o = head;
    for (int a = 1; a <= m; ++a)
        if (!used[a])
            o.push_back(a);
    o.insert(o.end(), tail.begin(), tail.end());
    return Ranking(std::move(o));
}

} // namespace detail

namespace {

using detail::vote;

// Single vote ordering alternatives by their number of target wins.
Ranking mcgarvey_base(const TargetWMG& t)
{
    std::vector<int> o(t.m);
    std::iota(o.begin(), o.end(), 1);
    auto wins = [&](int a) {
        int c = 0;
        for (int b = 1; b <= t.m; ++b)
            c += t.at(a, b) > 0;
        return c;
    };
    std::stable_sort(o.begin(), o.end(), [&](int a, int b) { return wins(a) > wins(b); });
    return Ranking(o);
}

struct PairPlan {
    std::vector<std::pair<std::pair<int, int>, long long>> pairs; // (x,y) gets +2 per pair
    std::optional<Ranking> base;
    long long votes = 0;
};

PairPlan mcgarvey_plan(const TargetWMG& t)
{
    const int parity = t.validate();
    PairPlan plan;
    if (parity == 1) {
        plan.base = mcgarvey_base(t);
        plan.votes = 1;
    }
    for (int a = 1; a <= t.m; ++a)
        for (int b = a + 1; b <= t.m; ++b) {
            long long r = t.at(a, b);
            if (plan.base)
                r -= plan.base->prefers(a, b) ? 1 : -1;
            if (r == 0)
                continue;
            const long long k = (r > 0 ? r : -r) / 2;
            plan.pairs.push_back({r > 0 ? std::pair{a, b} : std::pair{b, a}, k});
            plan.votes += 2 * k;
        }
    return plan;
}

} // namespace

long long mcgarvey_min_n(const TargetWMG& t)
{
    return mcgarvey_plan(t).votes;
}

Profile mcgarvey_profile(const TargetWMG& t, long long n)
{
    PairPlan plan = mcgarvey_plan(t);
    const long long parity = plan.base ? 1 : 0;
    if (n < 0 || n % 2 != parity)
        throw ValidationError("margins of parity " + std::to_string(parity) + " need n of the same parity, got n=" +
                              std::to_string(n));
    if (n < plan.votes)
        throw ValidationError("target needs at least n=" + std::to_string(plan.votes) + " voters, got n=" +
                              std::to_string(n));
    Profile p(t.m);
    if (plan.base)
        p.add(*plan.base, 1);
    for (const auto& [xy, k] : plan.pairs) {
        auto [x, y] = xy;
        Ranking first = vote(t.m, {x, y});
        std::vector<int> rest;
        for (int a = t.m; a >= 1; --a)
            if (a != x && a != y)
                rest.push_back(a);
        rest.push_back(x);
        rest.push_back(y);
        p.add(first, k);
        p.add(Ranking(rest), k);
    }
    const long long pad = (n - plan.votes) / 2;
    if (pad > 0) {
        p.add(Ranking::identity(t.m), pad);
        p.add(Ranking::identity(t.m).reversed(), pad);
    }
    if (!(TargetWMG::of(p) == t) || p.total() != n)
        throw std::logic_error("McGarvey construction failed to realize its target");
    return p;
}

namespace {

bool in(const AltSet& s, int a)
{
    return std::find(s.begin(), s.end(), a) != s.end();
}

void require_m(int m, int lo, const char* family)
{
    if (m < lo)
        throw ValidationError(std::string(family) + " construction needs m >= " + std::to_string(lo));
}

// Extra edges: 1..4 beat every i >= 5 and i beats j for 5 <= i < j, with
// distinct weights base, base+4, ...
void extra_edges(TargetWMG& g, long long base)
{
    long long w = base;
    for (int a = 1; a <= g.m; ++a)
        for (int b = std::max(a + 1, 5); b <= g.m; ++b) {
            g.set(a, b, w);
            w += 4;
        }
}

// Even-n version of an odd-weight graph: every positive weight grows by one.
TargetWMG evenized(const TargetWMG& g)
{
    TargetWMG e = g;
    for (int a = 1; a <= g.m; ++a)
        for (int b = 1; b <= g.m; ++b)
            if (g.at(a, b) > 0)
                e.set(a, b, g.at(a, b) + 1);
    return e;
}

enum class Family { Maximin, RankedPairs, Schulze, Copeland, Mrse, Condorcetified };

Family family_of(const RuleSpec& r)
{
    switch (r.kind) {
    case RuleKind::Maximin: return Family::Maximin;
    case RuleKind::RankedPairs: return Family::RankedPairs;
    case RuleKind::Schulze: return Family::Schulze;
    case RuleKind::Copeland: return Family::Copeland;
    case RuleKind::Mrse: return Family::Mrse;
    case RuleKind::Condorcetified: return Family::Condorcetified;
    default: break;
    }
    throw ValidationError("no participation-violation construction for rule " + to_string(r));
}

// Pairwise families: odd-weight graph, the abstainer R and the winner
// expected after R (or reverse(R)) is removed.
struct GraphPlan {
    TargetWMG g;
    Ranking r;
    int winner_if_first = 0;  // r(P) is the first of the pair: R abstains
    int winner_if_second = 0; // otherwise reverse(R) abstains
    AltSet pair;
};

GraphPlan graph_plan(Family f, int m)
{
    GraphPlan p{TargetWMG(m), Ranking(), 0, 0, {}};
    TargetWMG& g = p.g;
    switch (f) {
    case Family::Maximin:
        g.set(4, 1, 5);
        g.set(3, 2, 5);
        g.set(1, 2, 1);
        g.set(1, 3, 9);
        g.set(2, 4, 13);
        g.set(3, 4, 17);
        extra_edges(g, 21);
        p.r = vote(m, {3, 2, 1, 4});
        p.pair = {1, 2};
        p.winner_if_first = 2;
        p.winner_if_second = 1;
        break;
    case Family::RankedPairs:
        g.set(4, 1, 9);
        g.set(3, 4, 9);
        g.set(1, 2, 5);
        g.set(1, 3, 13);
        g.set(2, 4, 17);
        g.set(2, 3, 21);
        extra_edges(g, 25);
        p.r = vote(m, {2, 3, 1, 4});
        p.pair = {1, 2};
        p.winner_if_first = 2;
        p.winner_if_second = 1;
        break;
    case Family::Schulze:
        g.set(4, 1, 9);
        g.set(2, 3, 9);
        g.set(1, 2, 13);
        g.set(1, 3, 5);
        g.set(2, 4, 1);
        g.set(3, 4, 17);
        extra_edges(g, 21);
        p.r = vote(m, {2, 3, 1, 4});
        p.pair = {1, 3};
        p.winner_if_first = 3;
        p.winner_if_second = 1;
        break;
    default:
        throw std::logic_error("not a fixed-graph family");
    }
    return p;
}

struct CopelandPlan {
    TargetWMG g;
    Ranking r;
    int x, y, z;
};

CopelandPlan copeland_plan(const Rational& alpha, int m, const TieBreakOrder& tb)
{
    const int x = tb.first({1, 2, 3});
    const int y = x % 3 + 1;
    const int z = y % 3 + 1;
    TargetWMG g(m);
    g.set(x, y, 3);
    g.set(y, z, 3);
    g.set(z, x, 3);
    for (int a = 1; a <= m; ++a)
        for (int b = std::max(a + 1, 4); b <= m; ++b)
            g.set(a, b, 3);
    Ranking r;
    if (alpha > 0) {
        g.set(y, z, 1);
        r = vote(m, {4, y, z, x});
    } else {
        g.set(x, 4, 1);
        r = vote(m, {z, y, x, 4});
    }
    return {g, r, x, y, z};
}

std::vector<long long> condorcetified_vector(const RuleSpec& rule, int m)
{
    return rule.scoring_vector(m);
}

bool plurality_like(const std::vector<long long>& s)
{
    return s[1] == s.back();
}

// Smallest k >= 2 (1-based) with s_k > s_{k+1}.
int first_drop(const std::vector<long long>& s)
{
    for (std::size_t k = 2; k < s.size(); ++k)
        if (s[k - 1] > s[k])
            return static_cast<int>(k);
    throw ValidationError("scoring vector is plurality-like");
}

std::vector<int> range(int lo, int hi)
{
    std::vector<int> v;
    for (int a = lo; a <= hi; ++a)
        v.push_back(a);
    return v;
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts)
{
    std::vector<int> o;
    for (const auto& p : parts)
        o.insert(o.end(), p.begin(), p.end());
    return o;
}

// Condorcetified core profile for the non-plurality case.
Profile condorcetified_core(const std::vector<long long>& s, int m)
{
    const int k = first_drop(s);
    const auto a1 = range(4, k + 1);
    const auto a2 = range(k + 2, m);
    Profile p(m);
    p.add(Ranking(cat({{1, 2}, a1, {3}, a2})), 4);
    p.add(Ranking(cat({{2, 3}, a1, {1}, a2})), 3);
    p.add(Ranking(cat({{3, 1}, a1, {2}, a2})), 2);
    p.add(Ranking(cat({{2, 1}, a1, {3}, a2})), 1);
    const auto rest = range(4, m);
    std::vector<int> r1 = {1, 2, 3};
    do {
        std::vector<int> r2 = rest;
        do {
            p.add(Ranking(cat({r1, r2})), 6);
        } while (std::next_permutation(r2.begin(), r2.end()));
    } while (std::next_permutation(r1.begin(), r1.end()));
    return p;
}

long long condorcetified_threshold(const std::vector<long long>& s, int m, int parity)
{
    long long even;
    if (plurality_like(s)) {
        even = 18;
    } else {
        const long long size = to_ll(condorcetified_core(s, m).total());
        even = size * size / 2;
    }
    return even + parity;
}

// Even-n profile with no Condorcet winner, unique s-winner 2 and 1 the
// Condorcet winner once [3>1>2>others] abstains.
Profile condorcetified_even(const std::vector<long long>& s, int m, long long n)
{
    Profile p(m);
    if (plurality_like(s)) {
        p.add(vote(m, {2, 1, 3}), n / 2 - 6);
        p.add(vote(m, {2, 3, 1}), 4);
        p.add(vote(m, {3, 1, 2}), n / 2 - 4);
        p.add(vote(m, {1, 2, 3}), 6);
        return p;
    }
    Profile core = condorcetified_core(s, m);
    const long long size = to_ll(core.total());
    const long long copies = n / size;
    const long long pairs = (n - copies * size) / 2;
    p = core.scaled(copies);
    if (pairs > 0) {
        p.add(vote(m, {2, 1, 3}), pairs);
        p.add(vote(m, {2, 3, 1}), pairs);
    }
    return p;
}

void check(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("participation construction failed verification: " + what);
}

// Replays the abstention and the participation verdict on the result.
void verify(const RuleSpec& rule, const ParViolation& v, const TieBreakOrder& tb, long long n)
{
    check(v.profile.total() == n && v.profile.is_integer() && v.profile.is_nonnegative(), "profile size");
    check(v.profile.weight(v.abstainer) >= 1, "abstainer present");
    check(resolve(rule, v.profile, tb) == v.winner_before, "winner before removal");
    check(resolve(rule, v.profile.minus(v.abstainer), tb) == v.winner_after, "winner after removal");
    check(v.abstainer.prefers(v.winner_after, v.winner_before), "abstainer prefers the new winner");
    check(in(v.cowinners, v.winner_before), "resolved winner among co-winners");
    check(!sat_par(rule, v.profile, tb).satisfied, "participation verdict");
}

ParViolation graph_violation(Family f, const RuleSpec& rule, int m, long long n, const TieBreakOrder& tb)
{
    GraphPlan plan = graph_plan(f, m);
    const TargetWMG g = n % 2 ? plan.g : evenized(plan.g);
    ParViolation v;
    v.threshold = mcgarvey_min_n(g) + 2;
    if (n < v.threshold)
        throw ValidationError(to_string(rule) + " construction at m=" + std::to_string(m) + " needs n >= " +
                              std::to_string(v.threshold) + " of this parity");
    v.profile = mcgarvey_profile(g, n - 2);
    v.profile.add(plan.r, 1);
    v.profile.add(plan.r.reversed(), 1);
    v.cowinners = cowinners(rule, v.profile);
    check(v.cowinners == plan.pair, "co-winners of the base graph");
    v.winner_before = resolve(rule, v.profile, tb);
    if (v.winner_before == 1) {
        v.abstainer = plan.r;
        v.winner_after = plan.winner_if_first;
    } else {
        v.abstainer = plan.r.reversed();
        v.winner_after = plan.winner_if_second;
    }
    return v;
}

ParViolation copeland_violation(const RuleSpec& rule, int m, long long n, const TieBreakOrder& tb)
{
    CopelandPlan plan = copeland_plan(rule.alpha, m, tb);
    const bool odd = n % 2;
    ParViolation v;
    v.threshold = mcgarvey_min_n(plan.g) + (odd ? 2 : 3);
    if (n < v.threshold)
        throw ValidationError(to_string(rule) + " construction at m=" + std::to_string(m) + " needs n >= " +
                              std::to_string(v.threshold) + " of this parity");
    const Ranking rev = plan.r.reversed();
    if (odd) {
        v.profile = mcgarvey_profile(plan.g, n - 2);
        v.profile.add(plan.r, 1);
        v.profile.add(rev, 1);
        v.abstainer = plan.r;
        v.winner_before = plan.x;
        v.winner_after = rule.alpha > 0 ? plan.z : tb.first({plan.y, plan.z});
    } else {
        v.profile = mcgarvey_profile(plan.g, n - 3);
        v.profile.add(plan.r, 1);
        v.profile.add(rev, 2);
        v.abstainer = rev;
        v.winner_before = rule.alpha > 0 ? plan.z : tb.first({plan.y, plan.z});
        v.winner_after = plan.x;
    }
    v.cowinners = cowinners(rule, v.profile);
    return v;
}

ParViolation condorcetified_violation(const RuleSpec& rule, int m, long long n)
{
    const auto s = condorcetified_vector(rule, m);
    ParViolation v;
    const int parity = static_cast<int>(n % 2);
    v.threshold = condorcetified_threshold(s, m, parity);
    if (n < v.threshold)
        throw ValidationError(to_string(rule) + " construction at m=" + std::to_string(m) + " needs n >= " +
                              std::to_string(v.threshold) + " of this parity");
    if (parity == 0) {
        v.profile = condorcetified_even(s, m, n);
        v.abstainer = vote(m, {3, 1, 2});
        v.winner_before = 2;
        v.winner_after = 1;
    } else {
        v.profile = condorcetified_even(s, m, n - 1);
        v.abstainer = vote(m, {2, 1, 3});
        v.profile.add(v.abstainer, 1);
        v.winner_before = 1;
        v.winner_after = 2;
    }
    v.cowinners = cowinners(rule, v.profile);
    return v;
}

} // namespace

ParViolation par_violation_profile(const RuleSpec& rule, int m, long long n, const TieBreakOrder& tb)
{
    const Family f = family_of(rule);
    require_m(m, 4, "participation-violation");
    rule.validate(m);
    tb.validate(m);
    if (n < 1)
        throw ValidationError("n must be positive");
    ParViolation v;
    switch (f) {
    case Family::Maximin:
    case Family::RankedPairs:
    case Family::Schulze:
        v = graph_violation(f, rule, m, n, tb);
        break;
    case Family::Copeland:
        v = copeland_violation(rule, m, n, tb);
        break;
    case Family::Condorcetified:
        v = condorcetified_violation(rule, m, n);
        break;
    case Family::Mrse:
        return detail::mrse_par_violation(rule, m, n, tb);
    }
    verify(rule, v, tb, n);
    return v;
}

ParViolation par_violation_profile(const RuleSpec& rule, int m, long long n)
{
    return par_violation_profile(rule, m, n, TieBreakOrder::identity(m));
}

long long par_violation_threshold(const RuleSpec& rule, int m, int parity, const TieBreakOrder& tb)
{
    const Family f = family_of(rule);
    require_m(m, 4, "participation-violation");
    rule.validate(m);
    tb.validate(m);
    if (parity != 0 && parity != 1)
        throw ValidationError("parity must be 0 or 1");
    switch (f) {
    case Family::Maximin:
    case Family::RankedPairs:
    case Family::Schulze: {
        auto g = graph_plan(f, m).g;
        return mcgarvey_min_n(parity ? g : evenized(g)) + 2;
    }
    case Family::Copeland:
        return mcgarvey_min_n(copeland_plan(rule.alpha, m, tb).g) + (parity ? 2 : 3);
    case Family::Condorcetified:
        return condorcetified_threshold(condorcetified_vector(rule, m), m, parity);
    case Family::Mrse:
        return detail::mrse_par_threshold(rule, m, parity, tb);
    }
    return 0;
}

long long par_violation_threshold(const RuleSpec& rule, int m, int parity)
{
    return par_violation_threshold(rule, m, parity, TieBreakOrder::identity(m));
}

Profile cw_scoring_gap_profile(const std::vector<long long>& s, int m, long long n, int a, int b)
{
    require_m(m, 3, "gap profile");
    if (static_cast<int>(s.size()) != m)
        throw ValidationError("scoring vector length must equal m");
    validate_scoring_vector(s);
    if (a == b || a < 1 || b < 1 || a > m || b > m)
        throw ValidationError("gap profile needs two distinct alternatives in 1..m");
    if (n < 8LL * m + 49)
        throw ValidationError("gap profile needs n >= 8m+49 = " + std::to_string(8LL * m + 49));

    Profile p(m);
    int winner = 2;
    if (plurality_like(s)) {
        const long long h = (n - 1) / 2;
        p.add(vote(m, {2, 1, 3}), h);
        p.add(vote(m, {3, 1, 2}), (n - 3) / 2);
        p.add(vote(m, {1, 2, 3}), n + 1 - 2 * h);
    } else {
        const int k = first_drop(s);
        const auto a1 = range(4, k + 1);
        const auto a2 = range(k + 2, m);
        Profile core(m);
        core.add(Ranking(cat({{1, 2}, a1, {3}, a2})), 3);
        core.add(Ranking(cat({{2, 3}, a1, {1}, a2})), 2);
        core.add(Ranking(cat({{3, 1}, a1, {2}, a2})), 1);
        core.add(Ranking(cat({{2, 1}, a1, {3}, a2})), 1);
        // With A1 empty the alternatives 4.. never outscore 2.
        const auto& v = s;
        if (!a1.empty() && 3 * v[0] + 3 * v[1] + v[k] < 7 * v[k - 1])
            winner = 4;
        std::vector<int> others;
        for (int c = 1; c <= m; ++c)
            if (c != winner)
                others.push_back(c);
        Profile tie(m);
        for (int i = 1; i < m; ++i) {
            std::vector<int> o = {winner};
            for (int j = 0; j < m - 1; ++j)
                o.push_back(others[(i + j) % (m - 1)]);
            tie.add(Ranking(o), 1);
        }
        const long long copies = (n - m + 1) / 7;
        p = core.scaled(copies) + tie;
        const long long extra = n - m + 1 - 7 * copies;
        if (extra > 0)
            p.add(vote(m, {winner}), extra);
    }

    // Rename 1 -> a and winner -> b, keeping the other labels in order.
    std::vector<int> sigma(m, 0);
    std::vector<bool> taken(m + 1, false);
    sigma[0] = a;
    sigma[winner - 1] = b;
    taken[a] = taken[b] = true;
    int next = 1;
    for (int c = 1; c <= m; ++c) {
        if (sigma[c - 1])
            continue;
        while (taken[next])
            ++next;
        sigma[c - 1] = next;
        taken[next] = true;
    }
    p = p.relabeled(sigma);

    auto cw = majority_structure(p).cw;
    if (p.total() != n || !cw || *cw != a || scoring_cowinners(s, p) != AltSet{b})
        throw std::logic_error("gap profile failed verification");
    return p;
}

} // namespace vsat
