#pragma once

#include "vsat/profile.hpp"

#include <optional>
#include <vector>

namespace vsat {

struct WeightedMajorityGraph {
    int m = 0;
    std::vector<Rational> margin; // row-major m x m, margin[(a-1)*m + (b-1)] = w(a,b)

    const Rational& w(int a, int b) const { return margin[(a - 1) * m + (b - 1)]; }
    WeightedMajorityGraph operator+(const WeightedMajorityGraph& o) const;
};

// Pairwise relation of the unweighted majority graph: +1 a beats b, 0 tie, -1 loses.
struct Umg {
    int m = 0;
    std::vector<signed char> rel;

    int at(int a, int b) const { return rel[(a - 1) * m + (b - 1)]; }
    static Umg from_wmg(const WeightedMajorityGraph& g);
    std::size_t ties() const;
};

struct MajorityStructure {
    Umg umg;
    std::optional<int> cw;
    AltSet wcw;
    AltSet acw;
    std::optional<int> condorcet_loser;
};

WeightedMajorityGraph wmg(const Profile& p);
Umg umg(const Profile& p);
MajorityStructure majority_structure(const Profile& p);
MajorityStructure majority_structure(const Umg& g);

// All 3^(m(m-1)/2) unweighted majority graphs over m alternatives.
std::vector<Umg> all_umgs(int m);

} // namespace vsat
