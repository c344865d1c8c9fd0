#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vsat {

// Alternatives are 1..m. Sets of alternatives are kept sorted ascending.
using AltSet = std::vector<int>;

std::uint64_t factorial(int k);

// Lexicographic rank of a permutation word of 1..m (m <= 20).
std::uint64_t ranking_index(const std::vector<int>& order);
std::vector<int> ranking_from_index(int m, std::uint64_t index);

class Ranking {
public:
    Ranking() = default;
    explicit Ranking(std::vector<int> order);

    static Ranking identity(int m);
    static Ranking from_index(int m, std::uint64_t index);
    // "3>1>2" or "3,1,2"
    static Ranking parse(std::string_view text);

    int m() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    int at(int pos) const { return order_[pos]; }
    int top() const { return order_.front(); }
    std::uint64_t index() const;

    // 0-based position of a.
    int position(int a) const;
    bool prefers(int a, int b) const { return position(a) < position(b); }

    Ranking reversed() const;
    // Relabel: sigma[a-1] is the new name of alternative a.
    Ranking relabeled(const std::vector<int>& sigma) const;
    // Projection onto alive (sorted), relabelled to 1..|alive| by ascending id.
    Ranking restricted(const AltSet& alive) const;

    std::string str() const;

    auto operator<=>(const Ranking&) const = default;
    bool operator==(const Ranking&) const = default;

private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

std::vector<Ranking> all_rankings(int m);

// Table column order for m = 3: 123, 132, 231, 321, 213, 312.
const std::vector<Ranking>& table_columns_m3();

bool is_permutation_of_1_to_m(const std::vector<int>& v);

} // namespace vsat
