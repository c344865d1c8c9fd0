#pragma once

#include "vsat/rules.hpp"

#include <vector>

namespace vsat {

// Desired integer margins of a weighted majority graph.
struct TargetWMG {
    int m = 0;
    std::vector<long long> w; // row-major m x m

    explicit TargetWMG(int m = 0);
    static TargetWMG of(const Profile& p);

    long long at(int a, int b) const { return w[(a - 1) * m + (b - 1)]; }
    // Sets w(a,b) = v and w(b,a) = -v.
    void set(int a, int b, long long v);
    // Antisymmetric with zero diagonal and all off-diagonal entries of one
    // parity. Returns that parity (0 or 1).
    int validate() const;
    bool operator==(const TargetWMG&) const = default;
};

// Smallest n for which mcgarvey_profile succeeds; larger n of the same
// parity always succeed.
long long mcgarvey_min_n(const TargetWMG& t);
Profile mcgarvey_profile(const TargetWMG& t, long long n);

struct ParViolation {
    Profile profile;
    Ranking abstainer;
    int winner_before = 0;
    int winner_after = 0;
    AltSet cowinners; // irresolute winners of profile
    long long threshold = 0;
};

// Smallest n of the given parity accepted by par_violation_profile.
long long par_violation_threshold(const RuleSpec& rule, int m, int parity,
                                  const TieBreakOrder& tb);
long long par_violation_threshold(const RuleSpec& rule, int m, int parity);

// Supported families: maximin, ranked pairs, Schulze, Copeland, MRSE and
// Condorcetified scoring, m >= 4. The result is re-verified against the rule
// engine before it is returned.
ParViolation par_violation_profile(const RuleSpec& rule, int m, long long n,
                                   const TieBreakOrder& tb);
ParViolation par_violation_profile(const RuleSpec& rule, int m, long long n);

// n-profile whose Condorcet winner is a and whose unique s-winner is b.
Profile cw_scoring_gap_profile(const std::vector<long long>& s, int m, long long n, int a, int b);

namespace detail {
// head > remaining alternatives ascending > tail
Ranking vote(int m, const std::vector<int>& head, const std::vector<int>& tail = {});
ParViolation mrse_par_violation(const RuleSpec& rule, int m, long long n, const TieBreakOrder& tb);
long long mrse_par_threshold(const RuleSpec& rule, int m, int parity, const TieBreakOrder& tb);
} // namespace detail

} // namespace vsat
