#include "vsat/ranking.hpp"
#include "vsat/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace vsat {

std::uint64_t factorial(int k)
{
    if (k < 0 || k > 20)
        throw BoundExceeded("factorial out of 64-bit range: " + std::to_string(k));
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

bool is_permutation_of_1_to_m(const std::vector<int>& v)
{
    std::vector<char> seen(v.size() + 1, 0);
    for (int a : v) {
        if (a < 1 || a > static_cast<int>(v.size()) || seen[a])
            return false;
        seen[a] = 1;
    }
    return true;
}

std::uint64_t ranking_index(const std::vector<int>& order)
{
    if (!is_permutation_of_1_to_m(order))
        throw ValidationError("ranking is not a permutation of 1..m");
    const int m = static_cast<int>(order.size());
    if (m > 20)
        throw BoundExceeded("ranking index needs m <= 20");
    std::uint64_t idx = 0;
    std::vector<char> used(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int a = 1; a < order[i]; ++a)
            if (!used[a])
                ++smaller;
        idx += static_cast<std::uint64_t>(smaller) * factorial(m - 1 - i);
        used[order[i]] = 1;
    }
    return idx;
}

std::vector<int> ranking_from_index(int m, std::uint64_t index)
{
    if (m < 1 || m > 20)
        throw BoundExceeded("ranking index needs 1 <= m <= 20");
    if (index >= factorial(m))
        throw ValidationError("ranking index out of range");
    std::vector<int> pool(m);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> order;
    order.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::uint64_t f = factorial(m - 1 - i);
        std::size_t k = static_cast<std::size_t>(index / f);
        index %= f;
        order.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return order;
}

Ranking::Ranking(std::vector<int> order) : order_(std::move(order))
{
    if (!is_permutation_of_1_to_m(order_))
        throw ValidationError("ranking is not a permutation of 1..m");
    pos_.assign(order_.size() + 1, -1);
    for (std::size_t i = 0; i < order_.size(); ++i)
        pos_[order_[i]] = static_cast<int>(i);
}

Ranking Ranking::identity(int m)
{
    std::vector<int> o(m);
    std::iota(o.begin(), o.end(), 1);
    return Ranking(std::move(o));
}

Ranking Ranking::from_index(int m, std::uint64_t index)
{
    return Ranking(ranking_from_index(m, index));
}

Ranking Ranking::parse(std::string_view text)
{
    std::vector<int> order;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw ValidationError("malformed ranking '" + std::string(text) + "'");
        order.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            cur.push_back(c);
        else if (c == '>' || c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw ValidationError("malformed ranking '" + std::string(text) + "'");
    }
    flush();
    return Ranking(std::move(order));
}

std::uint64_t Ranking::index() const
{
    return ranking_index(order_);
}

int Ranking::position(int a) const
{
    if (a < 1 || a > m())
        throw ValidationError("alternative out of range: " + std::to_string(a));
    return pos_[a];
}

Ranking Ranking::reversed() const
{
    return Ranking(std::vector<int>(order_.rbegin(), order_.rend()));
}

Ranking Ranking::relabeled(const std::vector<int>& sigma) const
{
    std::vector<int> o(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
        o[i] = sigma.at(order_[i] - 1);
    return Ranking(std::move(o));
}

Ranking Ranking::restricted(const AltSet& alive) const
{
    if (alive.empty())
        throw ValidationError("restriction to an empty alternative set");
    std::vector<int> rank_of(m() + 1, 0);
    for (std::size_t i = 0; i < alive.size(); ++i) {
        if (alive[i] < 1 || alive[i] > m())
            throw ValidationError("alternative out of range in restriction");
        rank_of[alive[i]] = static_cast<int>(i) + 1;
    }
    std::vector<int> o;
    o.reserve(alive.size());
    for (int a : order_)
        if (rank_of[a])
            o.push_back(rank_of[a]);
    return Ranking(std::move(o));
}

std::string Ranking::str() const
{
    std::string s;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i)
            s += '>';
        s += std::to_string(order_[i]);
    }
    return s;
}

std::vector<Ranking> all_rankings(int m)
{
    std::vector<Ranking> out;
    std::vector<int> o(m);
    std::iota(o.begin(), o.end(), 1);
    do {
        out.emplace_back(o);
    } while (std::next_permutation(o.begin(), o.end()));
    return out;
}

const std::vector<Ranking>& table_columns_m3()
{
    static const std::vector<Ranking> cols = {
        Ranking({1, 2, 3}), Ranking({1, 3, 2}), Ranking({2, 3, 1}),
        Ranking({3, 2, 1}), Ranking({2, 1, 3}), Ranking({3, 1, 2}),
    };
    return cols;
}

} // namespace vsat
