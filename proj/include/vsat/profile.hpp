#pragma once

#include "vsat/rational.hpp"
#include "vsat/ranking.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vsat {

struct Histogram {
    int m = 0;
    std::vector<Rational> entries; // indexed by ranking_index
    Rational l1() const;
};

// Weighted multiset of rankings. Weights are nonnegative unless the profile
// was created in fractional mode, where any rational weight is allowed.
class Profile {
public:
    explicit Profile(int m = 0);
    static Profile fractional(int m);
    static Profile from_histogram(const Histogram& h, bool fractional_mode = false);
    // Weights listed in the m = 3 table column order (123,132,231,321,213,312).
    static Profile from_table_columns(const std::vector<Rational>& w);
    static Profile uniform(int m);

    int m() const { return m_; }
    bool fractional_mode() const { return fractional_; }

    void add(const Ranking& r, const Rational& w);
    Rational weight(const Ranking& r) const;
    const Rational& total() const { return total_; }
    const std::map<Ranking, Rational>& entries() const { return weights_; }
    std::size_t distinct() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }

    bool is_integer() const;
    bool is_nonnegative() const;
    void require_integer(const char* what) const;

    Profile operator+(const Profile& o) const;
    Profile scaled(const Rational& c) const;
    // One voter with ranking r abstains (weight w removed).
    Profile minus(const Ranking& r, const Rational& w = 1) const;
    Profile relabeled(const std::vector<int>& sigma) const;

    bool operator==(const Profile& o) const { return m_ == o.m_ && weights_ == o.weights_; }

private:
    int m_;
    bool fractional_ = false;
    std::map<Ranking, Rational> weights_;
    Rational total_ = 0;
};

Histogram histogram(const Profile& p);

// Projects every ranking onto alive and merges weights. Alternatives of the
// result are relabelled 1..|alive| in ascending id order.
Profile restrict(const Profile& p, const AltSet& alive);
Histogram project_histogram(const Histogram& h, const AltSet& alive);

// Text format: one "<weight>: a1>a2>...>am" line per ranking, '#' comments.
Profile parse_profile_text(std::string_view text);
std::string format_profile_text(const Profile& p);

} // namespace vsat
