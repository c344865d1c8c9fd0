#pragma once

#include "vsat/profile.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vsat {

enum class RuleKind { Scoring, Mrse, Maximin, Copeland, RankedPairs, Schulze, Condorcetified };

// Named scoring vectors that adapt to the number of alternatives.
enum class ScoringPreset { Custom, Plurality, Borda, Veto };

std::vector<long long> preset_vector(ScoringPreset p, int m);
// Weakly decreasing with s1 > sm. Throws ValidationError.
void validate_scoring_vector(const std::vector<long long>& s);

struct RuleSpec {
    RuleKind kind = RuleKind::Scoring;
    // Scoring and Condorcetified use preset/scores directly; Mrse uses the
    // preset for every round, or the explicit components when Custom.
    ScoringPreset preset = ScoringPreset::Plurality;
    std::vector<long long> scores;
    std::vector<std::vector<long long>> components; // components[k-2] has length k
    Rational alpha = Rational(1, 2);

    static RuleSpec plurality();
    static RuleSpec borda();
    static RuleSpec veto();
    static RuleSpec scoring(std::vector<long long> s);
    static RuleSpec stv();
    static RuleSpec coombs();
    static RuleSpec baldwin();
    static RuleSpec mrse(std::vector<std::vector<long long>> components);
    static RuleSpec maximin();
    static RuleSpec copeland(Rational alpha);
    static RuleSpec ranked_pairs();
    static RuleSpec schulze();
    static RuleSpec black();
    static RuleSpec condorcetified(ScoringPreset p);
    static RuleSpec condorcetified(std::vector<long long> s);

    // Scoring/Condorcetified vector for m alternatives.
    std::vector<long long> scoring_vector(int m) const;
    // MRSE component used in a round with k alternatives alive.
    std::vector<long long> component(int k) const;
    void validate(int m) const;
    bool condorcet_consistent() const;
};

// plurality | borda | veto | stv | coombs | baldwin | maximin | copeland:1/2 |
// rankedpairs | schulze | black | scoring:[3,1,0,0] | mrse:[[1,0],[1,0,0],...] |
// condorcetified:borda | condorcetified:[...]
RuleSpec parse_rule(std::string_view text);
std::string to_string(const RuleSpec& r);

struct TieBreakOrder {
    std::vector<int> priority; // priority[0] is preferred first

    static TieBreakOrder identity(int m);
    // "3,1,2" or "3>1>2"; empty text means identity.
    static TieBreakOrder parse(std::string_view text, int m);
    void validate(int m) const;
    int rank(int a) const;
    int first(const AltSet& s) const;
    int last(const AltSet& s) const;
};

// order[0] is eliminated in round 1; order.back() is the winner.
struct EliminationOrder {
    std::vector<int> order;

    int winner() const { return order.back(); }
    // 1-based round in which a drops out (m for the winner).
    int round_of(int a) const;
    std::string str() const;
    auto operator<=>(const EliminationOrder&) const = default;
};

struct PutOptions {
    int max_m = 8; // guard for parallel-universes search
};

AltSet scoring_cowinners(const std::vector<long long>& s, const Profile& p);
AltSet mrse_cowinners(const RuleSpec& rule, const Profile& p, const PutOptions& opt = {});
std::vector<EliminationOrder> parallel_universes(const RuleSpec& rule, const Profile& p,
                                                 const PutOptions& opt = {});
// Rounds 1..m-1 in which a can be eliminated under some parallel universe.
std::vector<int> possible_losing_rounds(const RuleSpec& rule, const Profile& p, int a,
                                        const PutOptions& opt = {});
AltSet maximin_cowinners(const Profile& p);
AltSet copeland_cowinners(const Profile& p, const Rational& alpha);
AltSet ranked_pairs_cowinners(const Profile& p, const PutOptions& opt = {});
AltSet schulze_cowinners(const Profile& p);
AltSet condorcetified_cowinners(const std::vector<long long>& s, const Profile& p);

AltSet cowinners(const RuleSpec& rule, const Profile& p, const PutOptions& opt = {});

// Deterministic refinement. MRSE drops the lowest-priority tied loser each
// round; ranked pairs orders equal-weight edges by priority; all other rules
// take the priority-first co-winner.
int resolve(const RuleSpec& rule, const Profile& p, const TieBreakOrder& tb);

} // namespace vsat
