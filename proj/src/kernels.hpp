#pragma once

// Rule kernels templated on the weight type. Integer profiles run on
// long long; fractional or huge profiles fall back to Rational.

#include "vsat/error.hpp"
#include "vsat/rules.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace vsat::detail {

template <class W>
struct Ballots {
    int m = 0;
    std::vector<int> orders; // flat, row i holds ranking i
    std::vector<W> weights;

    std::size_t size() const { return weights.size(); }
    const int* order(std::size_t i) const { return orders.data() + i * static_cast<std::size_t>(m); }
};

inline Ballots<Rational> ballots_q(const Profile& p)
{
    Ballots<Rational> b;
    b.m = p.m();
    b.orders.reserve(p.distinct() * p.m());
    for (const auto& [r, w] : p.entries()) {
        b.orders.insert(b.orders.end(), r.order().begin(), r.order().end());
        b.weights.push_back(w);
    }
    return b;
}

// Integer weights whose absolute sum stays far from overflow even after
// multiplication by a scoring entry of magnitude below 2^24.
inline bool fits_int(const Profile& p)
{
    Rational s = 0;
    for (const auto& [r, w] : p.entries()) {
        if (!vsat::is_integer(w))
            return false;
        s += abs(w);
    }
    return s < Rational(1LL << 36);
}

inline Ballots<long long> ballots_i(const Profile& p)
{
    Ballots<long long> b;
    b.m = p.m();
    b.orders.reserve(p.distinct() * p.m());
    for (const auto& [r, w] : p.entries()) {
        b.orders.insert(b.orders.end(), r.order().begin(), r.order().end());
        b.weights.push_back(to_ll(w));
    }
    return b;
}

inline bool small_scores(const RuleSpec& rule, int m)
{
    auto ok = [](const std::vector<long long>& s) {
        return std::all_of(s.begin(), s.end(), [](long long x) { return x > -(1LL << 24) && x < (1LL << 24); });
    };
    switch (rule.kind) {
    case RuleKind::Scoring:
    case RuleKind::Condorcetified:
        return ok(rule.scoring_vector(m));
    case RuleKind::Mrse:
        for (int k = 2; k <= m; ++k)
            if (!ok(rule.component(k)))
                return false;
        return true;
    case RuleKind::Copeland:
        return boost::multiprecision::numerator(rule.alpha) < (1 << 20) &&
               boost::multiprecision::denominator(rule.alpha) < (1 << 20);
    default:
        return true;
    }
}

template <class F>
decltype(auto) dispatch(const Profile& p, const RuleSpec& rule, F&& f)
{
    if (fits_int(p) && small_scores(rule, p.m()))
        return f(ballots_i(p));
    return f(ballots_q(p));
}

inline AltSet mask_to_set(std::uint64_t mask)
{
    AltSet s;
    while (mask) {
        int b = std::countr_zero(mask);
        s.push_back(b + 1);
        mask &= mask - 1;
    }
    return s;
}

template <class W>
std::vector<W> margins(const Ballots<W>& b)
{
    const int m = b.m;
    std::vector<W> M(static_cast<std::size_t>(m) * m, W(0));
    for (std::size_t v = 0; v < b.size(); ++v) {
        const int* o = b.order(v);
        const W& w = b.weights[v];
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                M[(o[i] - 1) * m + (o[j] - 1)] += w;
                M[(o[j] - 1) * m + (o[i] - 1)] -= w;
            }
    }
    return M;
}

// Scores of alternatives restricted to the alive set, using s (length = #alive).
template <class W>
std::vector<W> scores_alive(const Ballots<W>& b, const std::vector<char>& alive, const std::vector<long long>& s)
{
    std::vector<W> sc(b.m + 1, W(0));
    for (std::size_t v = 0; v < b.size(); ++v) {
        const int* o = b.order(v);
        int pos = 0;
        for (int i = 0; i < b.m; ++i) {
            int a = o[i];
            if (!alive[a])
                continue;
            if (s[pos] != 0)
                sc[a] += b.weights[v] * s[pos];
            ++pos;
        }
    }
    return sc;
}

template <class W>
std::vector<W> scores_all(const Ballots<W>& b, const std::vector<long long>& s)
{
    std::vector<char> alive(b.m + 1, 1);
    alive[0] = 0;
    return scores_alive(b, alive, s);
}

// 1-based indexed value vector; best alternatives among candidates.
template <class W, class Better>
AltSet arg_best(const std::vector<W>& val, const AltSet& cand, Better better)
{
    AltSet out;
    for (int a : cand) {
        if (out.empty() || better(val[a], val[out.front()])) {
            out.assign(1, a);
        } else if (!better(val[out.front()], val[a])) {
            out.push_back(a);
        }
    }
    return out;
}

template <class W>
AltSet argmax(const std::vector<W>& val, const AltSet& cand)
{
    return arg_best(val, cand, std::greater<W>());
}

template <class W>
AltSet argmin(const std::vector<W>& val, const AltSet& cand)
{
    return arg_best(val, cand, std::less<W>());
}

inline AltSet all_alts(int m)
{
    AltSet s(m);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

template <class W>
int condorcet_winner(const std::vector<W>& M, int m)
{
    for (int a = 1; a <= m; ++a) {
        bool ok = true;
        for (int b = 1; b <= m && ok; ++b)
            if (b != a)
                ok = M[(a - 1) * m + (b - 1)] > 0;
        if (ok)
            return a;
    }
    return 0;
}

template <class W>
AltSet maximin_from_margins(const std::vector<W>& M, int m)
{
    if (m == 1)
        return {1};
    std::vector<W> ms(m + 1, W(0));
    for (int a = 1; a <= m; ++a) {
        bool first = true;
        for (int b = 1; b <= m; ++b) {
            if (b == a)
                continue;
            const W& w = M[(a - 1) * m + (b - 1)];
            if (first || w < ms[a])
                ms[a] = w;
            first = false;
        }
    }
    return argmax(ms, all_alts(m));
}

template <class W>
AltSet copeland_from_margins(const std::vector<W>& M, int m, const Rational& alpha)
{
    // q*wins + p*ties, alpha = p/q
    const long long p = boost::multiprecision::numerator(alpha).convert_to<long long>();
    const long long q = boost::multiprecision::denominator(alpha).convert_to<long long>();
    std::vector<long long> sc(m + 1, 0);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            if (b == a)
                continue;
            const W& w = M[(a - 1) * m + (b - 1)];
            if (w > 0)
                sc[a] += q;
            else if (w == 0)
                sc[a] += p;
        }
    return argmax(sc, all_alts(m));
}

template <class W>
std::vector<W> schulze_strengths(const std::vector<W>& M, int m)
{
    std::vector<W> P(static_cast<std::size_t>(m) * m, W(0));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && M[a * m + b] > 0)
                P[a * m + b] = M[a * m + b];
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i) {
            if (i == k)
                continue;
            for (int j = 0; j < m; ++j) {
                if (j == k || j == i)
                    continue;
                W via = std::min(P[i * m + k], P[k * m + j]);
                if (via > P[i * m + j])
                    P[i * m + j] = via;
            }
        }
    return P;
}

template <class W>
AltSet schulze_from_margins(const std::vector<W>& M, int m)
{
    auto P = schulze_strengths(M, m);
    AltSet out;
    for (int a = 0; a < m; ++a) {
        bool ok = true;
        for (int b = 0; b < m && ok; ++b)
            if (b != a)
                ok = P[a * m + b] >= P[b * m + a];
        if (ok)
            out.push_back(a + 1);
    }
    return out;
}

struct Edge {
    int a, b; // a -> b
};

// Positive-margin edges grouped by equal weight, heaviest group first.
template <class W>
std::vector<std::vector<Edge>> edge_groups(const std::vector<W>& M, int m)
{
    std::vector<std::pair<W, Edge>> es;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            if (a != b && M[(a - 1) * m + (b - 1)] > 0)
                es.push_back({M[(a - 1) * m + (b - 1)], Edge{a, b}});
    std::stable_sort(es.begin(), es.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<std::vector<Edge>> groups;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i == 0 || es[i].first != es[i - 1].first)
            groups.emplace_back();
        groups.back().push_back(es[i].second);
    }
    return groups;
}

// Locked graph as successor bitmasks, index a-1.
struct LockGraph {
    std::vector<std::uint64_t> succ;

    explicit LockGraph(int m) : succ(m, 0) {}
    bool reaches(int from, int to) const
    {
        std::uint64_t seen = 1ULL << (from - 1), frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= succ[std::countr_zero(f)];
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen & (1ULL << (to - 1));
    }
    // Locks a->b unless it closes a cycle.
    bool try_lock(int a, int b)
    {
        if (reaches(b, a))
            return false;
        succ[a - 1] |= 1ULL << (b - 1);
        return true;
    }
    AltSet sources() const
    {
        std::uint64_t has_in = 0;
        for (auto s : succ)
            has_in |= s;
        AltSet out;
        for (int a = 1; a <= static_cast<int>(succ.size()); ++a)
            if (!(has_in & (1ULL << (a - 1))))
                out.push_back(a);
        return out;
    }
};

template <class W>
AltSet ranked_pairs_put(const std::vector<W>& M, int m, int max_m)
{
    if (m > max_m)
        throw BoundExceeded("ranked pairs parallel-universes search needs m <= " + std::to_string(max_m) +
                            "; use the resolute mode");
    if (m > 11)
        throw BoundExceeded("ranked pairs parallel-universes search supports m <= 11");
    auto groups = edge_groups(M, m);
    std::set<std::string> visited;
    std::uint64_t winners = 0;

    std::function<void(std::size_t, std::uint64_t, const LockGraph&)> dfs =
        [&](std::size_t gi, std::uint64_t remaining, const LockGraph& g) {
            while (gi < groups.size() && remaining == 0) {
                ++gi;
                if (gi < groups.size())
                    remaining = (1ULL << groups[gi].size()) - 1;
            }
            if (gi >= groups.size()) {
                for (int a : g.sources())
                    winners |= 1ULL << (a - 1);
                return;
            }
            std::string key(reinterpret_cast<const char*>(&gi), sizeof gi);
            key.append(reinterpret_cast<const char*>(&remaining), sizeof remaining);
            key.append(reinterpret_cast<const char*>(g.succ.data()), g.succ.size() * sizeof(std::uint64_t));
            if (!visited.insert(std::move(key)).second)
                return;
            const auto& grp = groups[gi];
            for (std::uint64_t r = remaining; r; r &= r - 1) {
                int e = std::countr_zero(r);
                LockGraph next = g;
                next.try_lock(grp[e].a, grp[e].b);
                dfs(gi, remaining & ~(1ULL << e), next);
            }
        };

    LockGraph g(m);
    std::uint64_t first = groups.empty() ? 0 : ((1ULL << groups[0].size()) - 1);
    dfs(0, first, g);
    return mask_to_set(winners);
}

template <class W>
int ranked_pairs_resolute(const std::vector<W>& M, int m, const TieBreakOrder& tb)
{
    if (m > 64)
        throw BoundExceeded("ranked pairs supports m <= 64");
    auto groups = edge_groups(M, m);
    LockGraph g(m);
    for (auto& grp : groups) {
        std::sort(grp.begin(), grp.end(), [&](const Edge& x, const Edge& y) {
            if (tb.rank(x.a) != tb.rank(y.a))
                return tb.rank(x.a) < tb.rank(y.a);
            return tb.rank(x.b) < tb.rank(y.b);
        });
        for (const auto& e : grp)
            g.try_lock(e.a, e.b);
    }
    return tb.first(g.sources());
}

// Parallel-universes structure of an MRSE rule: reachable alive sets and
// their tied-loser sets.
template <class W>
std::map<std::uint64_t, std::uint64_t> pu_structure(const RuleSpec& rule, const Ballots<W>& b, int max_m)
{
    const int m = b.m;
    if (m > max_m)
        throw BoundExceeded("parallel-universes search needs m <= " + std::to_string(max_m) +
                            "; use the resolute mode");
    if (m > 63)
        throw BoundExceeded("parallel-universes search supports m <= 63");
    std::map<std::uint64_t, std::uint64_t> losers;
    std::vector<std::uint64_t> stack{(1ULL << m) - 1};
    while (!stack.empty()) {
        std::uint64_t s = stack.back();
        stack.pop_back();
        if (losers.count(s) || std::popcount(s) < 2)
            continue;
        std::vector<char> alive(m + 1, 0);
        AltSet cand = mask_to_set(s);
        for (int a : cand)
            alive[a] = 1;
        auto sc = scores_alive(b, alive, rule.component(static_cast<int>(cand.size())));
        std::uint64_t lm = 0;
        for (int a : argmin(sc, cand))
            lm |= 1ULL << (a - 1);
        losers[s] = lm;
        for (std::uint64_t r = lm; r; r &= r - 1)
            stack.push_back(s & ~(1ULL << std::countr_zero(r)));
    }
    return losers;
}

template <class W>
AltSet mrse_put_winners(const RuleSpec& rule, const Ballots<W>& b, int max_m)
{
    if (b.m == 1)
        return {1};
    auto pu = pu_structure(rule, b, max_m);
    std::uint64_t winners = 0;
    for (const auto& [s, lm] : pu)
        for (std::uint64_t r = lm; r; r &= r - 1) {
            std::uint64_t next = s & ~(1ULL << std::countr_zero(r));
            if (std::popcount(next) == 1)
                winners |= next;
        }
    return mask_to_set(winners);
}

template <class W>
int mrse_resolute(const RuleSpec& rule, const Ballots<W>& b, const TieBreakOrder& tb)
{
    const int m = b.m;
    std::vector<char> alive(m + 1, 1);
    alive[0] = 0;
    AltSet cand = all_alts(m);
    while (cand.size() > 1) {
        auto sc = scores_alive(b, alive, rule.component(static_cast<int>(cand.size())));
        int out = tb.last(argmin(sc, cand));
        alive[out] = 0;
        cand.erase(std::find(cand.begin(), cand.end(), out));
    }
    return cand.front();
}

template <class W>
AltSet cowinners_k(const RuleSpec& rule, const Ballots<W>& b, const PutOptions& opt)
{
    const int m = b.m;
    switch (rule.kind) {
    case RuleKind::Scoring:
        return argmax(scores_all(b, rule.scoring_vector(m)), all_alts(m));
    case RuleKind::Condorcetified: {
        if (int c = condorcet_winner(margins(b), m))
            return {c};
        return argmax(scores_all(b, rule.scoring_vector(m)), all_alts(m));
    }
    case RuleKind::Mrse:
        return mrse_put_winners(rule, b, opt.max_m);
    case RuleKind::Maximin:
        return maximin_from_margins(margins(b), m);
    case RuleKind::Copeland:
        return copeland_from_margins(margins(b), m, rule.alpha);
    case RuleKind::RankedPairs:
        return ranked_pairs_put(margins(b), m, opt.max_m);
    case RuleKind::Schulze:
        return schulze_from_margins(margins(b), m);
    }
    throw ValidationError("unknown rule kind");
}

template <class W>
int resolve_k(const RuleSpec& rule, const Ballots<W>& b, const TieBreakOrder& tb)
{
    const int m = b.m;
    switch (rule.kind) {
    case RuleKind::Mrse:
        return mrse_resolute(rule, b, tb);
    case RuleKind::RankedPairs:
        return ranked_pairs_resolute(margins(b), m, tb);
    case RuleKind::Scoring:
    case RuleKind::Condorcetified:
    case RuleKind::Maximin:
    case RuleKind::Copeland:
    case RuleKind::Schulze:
        return tb.first(cowinners_k(rule, b, PutOptions{}));
    }
    throw ValidationError("unknown rule kind");
}

} // namespace vsat::detail
