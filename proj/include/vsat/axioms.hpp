#pragma once

#include "vsat/rules.hpp"

#include <optional>
#include <string>

namespace vsat {

struct AxiomWitness {
    // Par: the abstaining ranking and the winners before and after removal.
    std::optional<Ranking> ranking;
    int winner_before = 0;
    int winner_after = 0;
    // CC / CC* / CL: the Condorcet winner or loser and the winner set.
    int alternative = 0;
    AltSet winners;
};

struct AxiomVerdict {
    bool satisfied = true;
    std::optional<AxiomWitness> witness;
};

AxiomVerdict sat_cc(const RuleSpec& rule, const Profile& p, const PutOptions& opt = {});
AxiomVerdict sat_cc(const RuleSpec& rule, const Profile& p, const TieBreakOrder& tb);
AxiomVerdict sat_cc_star(const RuleSpec& rule, const Profile& p, const PutOptions& opt = {});
// Resolute rule; evaluated once per distinct ranking. r(empty) is tb's first.
AxiomVerdict sat_par(const RuleSpec& rule, const Profile& p, const TieBreakOrder& tb);
AxiomVerdict sat_cl_profile(const RuleSpec& rule, const Profile& p, const PutOptions& opt = {});

struct ClDecision {
    bool satisfied = true;
    std::optional<Profile> counterexample; // integer profile whose Condorcet loser co-wins
};

// Decides Condorcet-loser for the scoring rule s over k = |s| alternatives
// by an exact LP on the k!-simplex.
ClDecision rule_satisfies_cl(const std::vector<long long>& s, int max_k = 6);

enum class Axiom { CC, CCStar, Par, CL };

std::string to_string(Axiom a);
Axiom parse_axiom(std::string_view s);

struct EvalOptions {
    std::optional<TieBreakOrder> tiebreak; // identity when absent
    bool resolute_cc = false;              // CC against r(P) instead of the co-winners
    PutOptions put;
};

// Par always uses the resolute rule; the other axioms use co-winners unless
// resolute_cc is set.
AxiomVerdict evaluate_axiom(Axiom axiom, const RuleSpec& rule, const Profile& p, const EvalOptions& opt = {});

} // namespace vsat
