#include "vsat/axioms.hpp"
#include "vsat/constructions.hpp"
#include "vsat/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

namespace vsat::detail {

namespace {

std::vector<int> perm_of(int lo, int hi)
{
    std::vector<int> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::vector<int> joined(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Round m-3 tie-maker: 1 > 2 > 3 = 4 under the 4-component, odd size.
Profile part2(const RuleSpec& rule, int m)
{
    Profile p21(m);
    p21.add(vote(m, {1}, {3, 4, 2}), 1);
    p21.add(vote(m, {1}, {4, 3, 2}), 1);
    p21.add(vote(m, {1}, {2, 4, 3}), 3);
    p21.add(vote(m, {2}, {1, 3, 4}), 3);

    const auto s4 = rule.component(4);
    const long long d1 = s4[0] - s4[1];
    const long long d2 = s4[1] - s4[2];
    Profile p22(m);
    if (d1 == 0) {
        p22.add(vote(m, {3, 4, 1, 2}), 1);
    } else if (d2 == 0) {
        p22.add(vote(m, {1, 3, 4, 2}), 1);
    } else {
        const long long g = std::gcd(d1, d2);
        const long long e1 = d1 / g, e2 = d2 / g;
        if (e1 % 2) {
            p22.add(vote(m, {1, 3, 4, 2}), e1 + e2);
            p22.add(vote(m, {4, 1, 3, 2}), e2);
        } else {
            p22.add(vote(m, {3, 4, 1, 2}), e1 + e2);
            p22.add(vote(m, {4, 1, 3, 2}), e1);
        }
    }
    return p21.scaled(p22.total() + 1) + p22;
}

// Symmetric over {1,2,3,4} in round m-3; decides the last three rounds.
Profile part3_core(int m)
{
    static const std::vector<std::vector<int>> cyclic = {
        {1, 2, 3, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}, {2, 1, 4, 3}, {2, 4, 3, 1}, {2, 3, 1, 4},
        {3, 1, 4, 2}, {3, 4, 2, 1}, {3, 2, 1, 4}, {4, 1, 2, 3}, {4, 2, 3, 1}, {4, 3, 1, 2},
    };
    Profile p(m);
    for (const auto& h : cyclic)
        p.add(vote(m, h), 1);
    auto r = perm_of(1, 4);
    do {
        std::vector<int> h = r;
        if (h == std::vector<int>{3, 2, 4, 1})
            h = {3, 1, 4, 2};
        else if (h == std::vector<int>{4, 1, 3, 2})
            h = {4, 2, 3, 1};
        p.add(vote(m, h), 1);
    } while (std::next_permutation(r.begin(), r.end()));
    return p;
}

// Drops 5, 6, ..., m in the first m-4 rounds.
Profile part1(int m, long long k, long long l)
{
    Profile p(m);
    if (m <= 4)
        return p;
    auto r1 = perm_of(1, 4);
    do {
        auto r2 = perm_of(5, m);
        do {
            p.add(Ranking(joined(r1, r2)), k);
        } while (std::next_permutation(r2.begin(), r2.end()));
    } while (std::next_permutation(r1.begin(), r1.end()));
    for (int i = 5; i <= m; ++i) {
        std::vector<int> rest;
        for (int a = 1; a <= m; ++a)
            if (a != i)
                rest.push_back(a);
        do {
            p.add(Ranking(joined({i}, rest)), l * (i - 4));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return p;
}

struct Core {
    Profile star;
    long long copies_even = 0; // multiplier of the core for even n; odd adds one
};

Profile expand(const Core& c, int m, long long n)
{
    const long long copies = c.copies_even + (n % 2);
    Profile p = c.star.scaled(copies);
    const long long n1 = to_ll(p.total());
    const long long full = static_cast<long long>(factorial(m));
    const long long q = (n - n1) / full;
    if (q > 0)
        for (const auto& r : all_rankings(m))
            p.add(r, q);
    const long long pairs = (n - n1 - q * full) / 2;
    if (pairs > 0) {
        p.add(vote(m, {1, 2, 3, 4}), pairs);
        p.add(vote(m, {2, 1, 4, 3}), pairs);
    }
    return p;
}

long long threshold_of(const Core& c, int parity)
{
    return (c.copies_even + parity) * to_ll(c.star.total());
}

struct Outcome {
    Ranking abstainer;
    int before = 0;
    int after = 0;
    AltSet winners;
};

std::optional<Outcome> check_outcome(const RuleSpec& rule, int m, const Profile& p, const TieBreakOrder& tb)
{
    Outcome o;
    o.winners = cowinners(rule, p);
    if (o.winners != AltSet{1, 2})
        return std::nullopt;
    o.before = resolve(rule, p, tb);
    o.abstainer = o.before == 1 ? vote(m, {4, 2, 1, 3}) : vote(m, {3, 1, 2, 4});
    o.after = 3 - o.before;
    if (p.weight(o.abstainer) < 1 || resolve(rule, p.minus(o.abstainer), tb) != o.after)
        return std::nullopt;
    return o;
}

Core build_core(const RuleSpec& rule, int m, const TieBreakOrder& tb)
{
    const auto s3 = rule.component(3);
    const Profile p2 = part2(rule, m);
    const Profile p3 = part3_core(m).scaled((s3[0] - s3[2]) * to_ll(p2.total()) + 1);
    const long long copies_even = static_cast<long long>(factorial(m)) * (s3[0] - s3[2]);

    // 1..4 must outrank 5..m and the Y part must separate 5..m; both weights
    // double until the two extreme n of each parity verify.
    long long ratio = 1;
    if (m > 4)
        ratio = 2 * std::max<long long>(1, (m - 4) * static_cast<long long>(factorial(m - 1)) /
                                               (6 * static_cast<long long>(factorial(m - 4))));
    const long long full = static_cast<long long>(factorial(m));
    for (int j = 0; j < 24; ++j) {
        const long long l = 1LL << j;
        Core c{part1(m, l * ratio, l) + p2 + p3, copies_even};
        bool ok = true;
        for (int parity = 0; parity < 2 && ok; ++parity) {
            const long long n1 = threshold_of(c, parity);
            for (long long n : {n1, n1 + full - 2})
                if (!check_outcome(rule, m, expand(c, m, n), tb)) {
                    ok = false;
                    break;
                }
        }
        if (ok)
            return c;
        if (m == 4)
            break;
    }
    throw std::logic_error("MRSE participation construction did not stabilize for " + to_string(rule));
}

const Core& core_for(const RuleSpec& rule, int m, const TieBreakOrder& tb)
{
    static std::mutex mu;
    static std::map<std::tuple<std::string, int, std::vector<int>>, Core> cache;
    auto key = std::make_tuple(to_string(rule), m, tb.priority);
    {
        std::lock_guard lk(mu);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    Core c = build_core(rule, m, tb);
    std::lock_guard lk(mu);
    return cache.emplace(key, std::move(c)).first->second;
}

void require_mrse(const RuleSpec& rule, int m)
{
    if (rule.kind != RuleKind::Mrse)
        throw ValidationError("MRSE construction needs an MRSE rule");
    if (m < 4 || m > 7)
        throw ValidationError("MRSE participation construction supports 4 <= m <= 7");
    rule.validate(m);
}

} // namespace

long long mrse_par_threshold(const RuleSpec& rule, int m, int parity, const TieBreakOrder& tb)
{
    require_mrse(rule, m);
    return threshold_of(core_for(rule, m, tb), parity);
}

ParViolation mrse_par_violation(const RuleSpec& rule, int m, long long n, const TieBreakOrder& tb)
{
    require_mrse(rule, m);
    tb.validate(m);
    const Core& c = core_for(rule, m, tb);
    const long long threshold = threshold_of(c, static_cast<int>(n % 2));
    if (n < threshold)
        throw ValidationError(to_string(rule) + " construction at m=" + std::to_string(m) + " needs n >= " +
                              std::to_string(threshold) + " of this parity");
    ParViolation v;
    v.profile = expand(c, m, n);
    v.threshold = threshold;
    auto o = check_outcome(rule, m, v.profile, tb);
    if (!o || v.profile.total() != n || sat_par(rule, v.profile, tb).satisfied)
        throw std::logic_error("MRSE participation construction failed verification at n=" + std::to_string(n));
    v.abstainer = o->abstainer;
    v.winner_before = o->before;
    v.winner_after = o->after;
    v.cowinners = o->winners;
    return v;
}

} // namespace vsat::detail
