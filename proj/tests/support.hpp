#pragma once

// Shared helpers for tests: random profiles and naive per-voter oracles that
// share no code with the library kernels.

#include "vsat/profile.hpp"
#include "vsat/rational.hpp"
#include "vsat/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace vt {

using Vote = std::vector<int>;

inline Vote random_vote(int m, std::mt19937_64& rng)
{
    Vote v(m);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

inline std::vector<Vote> random_votes(int m, int n, std::mt19937_64& rng)
{
    std::vector<Vote> out;
    for (int i = 0; i < n; ++i)
        out.push_back(random_vote(m, rng));
    return out;
}

// Votes drawn from a small pool so ties and cycles are common.
inline std::vector<Vote> clustered_votes(int m, int n, std::mt19937_64& rng)
{
    std::vector<Vote> pool = random_votes(m, 1 + static_cast<int>(rng() % 4), rng);
    std::vector<Vote> out;
    for (int i = 0; i < n; ++i)
        out.push_back(pool[rng() % pool.size()]);
    return out;
}

inline vsat::Profile to_profile(int m, const std::vector<Vote>& votes)
{
    vsat::Profile p(m);
    for (const auto& v : votes)
        p.add(vsat::Ranking(v), 1);
    return p;
}

inline std::vector<Vote> expand(const vsat::Profile& p)
{
    std::vector<Vote> out;
    for (const auto& [r, w] : p.entries())
        for (long long i = 0; i < vsat::to_ll(w); ++i)
            out.push_back(r.order());
    return out;
}

inline int pos(const Vote& v, int a)
{
    return static_cast<int>(std::find(v.begin(), v.end(), a) - v.begin());
}

inline long long margin(const std::vector<Vote>& votes, int a, int b)
{
    long long w = 0;
    for (const auto& v : votes)
        w += pos(v, a) < pos(v, b) ? 1 : -1;
    return w;
}

inline int naive_cw(int m, const std::vector<Vote>& votes)
{
    for (int a = 1; a <= m; ++a) {
        bool all = true;
        for (int b = 1; b <= m; ++b)
            if (b != a && margin(votes, a, b) <= 0)
                all = false;
        if (all)
            return a;
    }
    return 0;
}

// Scores over an alive set: each voter gives s[k] to its (k+1)-th alive alternative.
inline std::vector<long long> naive_scores(int m, const std::vector<Vote>& votes, const std::vector<long long>& s,
                                           const std::vector<int>& alive)
{
    std::vector<long long> sc(m + 1, 0);
    for (const auto& v : votes) {
        int k = 0;
        for (int a : v)
            if (std::find(alive.begin(), alive.end(), a) != alive.end())
                sc[a] += s[k++];
    }
    return sc;
}

inline std::vector<int> all_alts(int m)
{
    std::vector<int> a(m);
    std::iota(a.begin(), a.end(), 1);
    return a;
}

inline std::vector<int> naive_scoring_winners(int m, const std::vector<Vote>& votes, const std::vector<long long>& s)
{
    auto sc = naive_scores(m, votes, s, all_alts(m));
    long long best = *std::max_element(sc.begin() + 1, sc.end());
    std::vector<int> w;
    for (int a = 1; a <= m; ++a)
        if (sc[a] == best)
            w.push_back(a);
    return w;
}

inline std::vector<int> random_perm(int m, std::mt19937_64& rng)
{
    return random_vote(m, rng);
}

} // namespace vt
