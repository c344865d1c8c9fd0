#include "vsat/lp.hpp"

#include <doctest.h>

#include <random>

using namespace vsat;
using namespace vsat::lp;

namespace {

std::vector<Rational> R(std::initializer_list<long long> v)
{
    std::vector<Rational> out;
    for (long long x : v)
        out.emplace_back(x);
    return out;
}

// Max of c.x over a bounded 2-variable polygon {a.x <= b}, by vertex enumeration.
std::optional<Rational> vertex_max(const std::vector<std::array<Rational, 3>>& rows, const std::array<Rational, 2>& c)
{
    std::optional<Rational> best;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto& p = rows[i];
            const auto& q = rows[j];
            const Rational det = p[0] * q[1] - p[1] * q[0];
            if (det == 0)
                continue;
            const Rational x = (p[2] * q[1] - p[1] * q[2]) / det;
            const Rational y = (p[0] * q[2] - p[2] * q[0]) / det;
            bool ok = true;
            for (const auto& r : rows)
                ok = ok && r[0] * x + r[1] * y <= r[2];
            if (!ok)
                continue;
            const Rational v = c[0] * x + c[1] * y;
            if (!best || v > *best)
                best = v;
        }
    return best;
}

} // namespace

TEST_CASE("maximize small problems")
{
    Problem p(2);
    p.add(R({1, 2}), Rel::Le, 4);
    p.add(R({3, 1}), Rel::Le, 6);
    const auto r = maximize(p, R({1, 1}));
    REQUIRE(r.status == Status::Optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});

    Problem inf(1);
    inf.add(R({1}), Rel::Ge, 2);
    inf.add(R({1}), Rel::Le, 1);
    CHECK(maximize(inf, R({1})).status == Status::Infeasible);

    Problem unb(2);
    unb.add(R({1, -1}), Rel::Le, 1);
    CHECK(maximize(unb, R({1, 0})).status == Status::Unbounded);

    Problem fr(2, true);
    fr.add(R({1, 1}), Rel::Eq, -3);
    fr.add(R({1, 0}), Rel::Le, -5);
    const auto f = maximize(fr, R({1, 0}));
    REQUIRE(f.status == Status::Optimal);
    CHECK(f.x == R({-5, 2}));
}

TEST_CASE("strict feasibility")
{
    Problem p(2);
    p.add(R({1, 0}), Rel::Gt, 0);
    p.add(R({0, 1}), Rel::Gt, 0);
    p.add(R({1, 1}), Rel::Lt, 1);
    const auto x = find_point(p);
    REQUIRE(x);
    CHECK(satisfies(p, *x));
    CHECK((*x)[0] > 0);
    CHECK((*x)[0] + (*x)[1] < 1);

    Problem q(2, true);
    q.add(R({1, -1}), Rel::Lt, 0);
    q.add(R({-1, 1}), Rel::Lt, 0);
    CHECK_FALSE(find_point(q));

    Problem z(1, true);
    z.add(R({1}), Rel::Gt, 0);
    z.add(R({1}), Rel::Le, 0);
    CHECK_FALSE(find_point(z));

    // closed version is feasible at the boundary only
    Problem w(1, true);
    w.add(R({1}), Rel::Ge, 0);
    w.add(R({1}), Rel::Le, 0);
    CHECK(find_point(w));
}

TEST_CASE("rank")
{
    CHECK(rank({}) == 0);
    CHECK(rank({R({1, 2, 3}), R({2, 4, 6})}) == 1);
    CHECK(rank({R({1, 0, 0}), R({0, 1, 0}), R({1, 1, 0})}) == 2);
    CHECK(rank({R({1, 0, 0}), R({0, 1, 0}), R({0, 0, 1})}) == 3);
}

TEST_CASE("property: optimum matches vertex enumeration in two variables")
{
    std::mt19937_64 rng(41);
    int compared = 0;
    for (int it = 0; it < 400; ++it) {
        std::vector<std::array<Rational, 3>> rows = {
            {1, 0, 10}, {-1, 0, 10}, {0, 1, 10}, {0, -1, 10}}; // box keeps it bounded
        const int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            const long long a = static_cast<long long>(rng() % 11) - 5, b = static_cast<long long>(rng() % 11) - 5;
            rows.push_back({a, b, static_cast<long long>(rng() % 13) - 4});
        }
        const std::array<Rational, 2> c = {static_cast<long long>(rng() % 9) - 4,
                                           static_cast<long long>(rng() % 9) - 4};
        Problem p(2, true);
        for (const auto& r : rows)
            p.add({r[0], r[1]}, Rel::Le, r[2]);
        const auto res = maximize(p, {c[0], c[1]});
        const auto want = vertex_max(rows, c);
        if (!want) {
            REQUIRE(res.status == Status::Infeasible);
            continue;
        }
        REQUIRE(res.status == Status::Optimal);
        REQUIRE(res.value == *want);
        REQUIRE(satisfies(p, res.x));
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("property: planted strict systems are found and verified")
{
    std::mt19937_64 rng(42);
    for (int it = 0; it < 300; ++it) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Rational> x0(n);
        for (auto& v : x0)
            v = Rational(static_cast<long long>(rng() % 9), 1 + static_cast<long long>(rng() % 4));
        Problem p(n);
        const int rows = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < rows; ++i) {
            std::vector<Rational> a(n);
            for (auto& v : a)
                v = static_cast<long long>(rng() % 7) - 3;
            Rational ax = 0;
            for (int j = 0; j < n; ++j)
                ax += a[j] * x0[j];
            switch (rng() % 4) {
            case 0: p.add(a, Rel::Le, ax + static_cast<long long>(rng() % 3)); break;
            case 1: p.add(a, Rel::Ge, ax - static_cast<long long>(rng() % 3)); break;
            case 2: p.add(a, Rel::Lt, ax + 1 + static_cast<long long>(rng() % 2)); break;
            default: p.add(a, Rel::Eq, ax); break;
            }
        }
        const auto x = find_point(p);
        REQUIRE(x);
        REQUIRE(satisfies(p, *x));

        // a strict pair contradiction on a random form makes it infeasible
        std::vector<Rational> a(n);
        for (auto& v : a)
            v = static_cast<long long>(rng() % 5) - 2;
        a[0] = 1;
        Problem q = p;
        q.add(a, Rel::Gt, 3);
        q.add(a, Rel::Lt, 3);
        REQUIRE_FALSE(find_point(q));
    }
}
