#include "support.hpp"

#include "vsat/error.hpp"
#include "vsat/majority.hpp"
#include "vsat/profile.hpp"

#include <doctest.h>

using namespace vsat;

namespace {

Profile pi_hat()
{
    Profile p(3);
    p.add(Ranking({1, 2, 3}), Rational(1, 4));
    p.add(Ranking({2, 1, 3}), Rational(1, 4));
    for (auto o : {std::vector<int>{1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}})
        p.add(Ranking(o), Rational(1, 8));
    return p;
}

Profile pi2()
{
    return Profile::from_table_columns(
        {Rational(1, 8), Rational(1, 8), Rational(3, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)});
}

} // namespace

TEST_CASE("ranking index is the lexicographic rank")
{
    CHECK(Ranking({1, 2, 3}).index() == 0);
    CHECK(Ranking({3, 2, 1}).index() == 5);
    CHECK(Ranking::from_index(3, 2).order() == std::vector<int>{2, 1, 3});

    const auto all = all_rankings(4);
    REQUIRE(all.size() == 24);
    for (std::uint64_t i = 0; i < 24; ++i) {
        CHECK(all[i].index() == i);
        CHECK(Ranking::from_index(4, i) == all[i]);
        if (i)
            CHECK(std::lexicographical_compare(all[i - 1].order().begin(), all[i - 1].order().end(),
                                               all[i].order().begin(), all[i].order().end()));
    }
}

TEST_CASE("ranking rejects non-permutations")
{
    CHECK_THROWS_AS(Ranking({1, 1, 2}), ValidationError);
    CHECK_THROWS_AS(Ranking({0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(Ranking::parse("1>2>4"), ValidationError);
    CHECK_THROWS_AS(Ranking::parse("1>x>2"), ValidationError);
    CHECK(Ranking::parse("3,1,2") == Ranking({3, 1, 2}));
    CHECK(Ranking::parse(" 3 > 1 > 2 ").str() == "3>1>2");
}

TEST_CASE("histogram")
{
    CHECK(histogram(Profile(3)).entries == std::vector<Rational>(6, 0));

    Profile p(3);
    p.add(Ranking({1, 2, 3}), 2);
    p.add(Ranking({3, 2, 1}), 1);
    const auto h = histogram(p);
    CHECK(h.entries == std::vector<Rational>{2, 0, 0, 0, 0, 1});
    CHECK(h.l1() == 3);

    for (const auto& e : histogram(Profile::uniform(3)).entries)
        CHECK(e == Rational(1, 6));
}

TEST_CASE("weighted majority graph examples")
{
    const auto g = wmg(pi_hat());
    CHECK(g.w(1, 2) == 0);
    CHECK(g.w(1, 3) == Rational(1, 4));
    CHECK(g.w(2, 3) == Rational(1, 4));

    const auto u = wmg(Profile::uniform(3));
    for (const auto& x : u.margin)
        CHECK(x == 0);
    CHECK(umg(Profile::uniform(3)).ties() == 3);

    Profile one(3);
    one.add(Ranking({1, 2, 3}), 1);
    const auto s = wmg(one);
    CHECK(s.w(1, 2) == 1);
    CHECK(s.w(1, 3) == 1);
    CHECK(s.w(2, 3) == 1);
}

TEST_CASE("majority structure examples")
{
    const auto hat = majority_structure(pi_hat());
    CHECK_FALSE(hat.cw);
    CHECK(hat.wcw == AltSet{1, 2});
    CHECK(hat.acw == AltSet{1, 2});

    const auto two = majority_structure(pi2());
    REQUIRE(two.cw);
    CHECK(*two.cw == 2);

    Profile p(3);
    p.add(Ranking({1, 2, 3}), 3);
    p.add(Ranking({2, 3, 1}), 2);
    p.add(Ranking({3, 2, 1}), 2);
    const auto ms = majority_structure(p);
    REQUIRE(ms.condorcet_loser);
    CHECK(*ms.condorcet_loser == 1);
    CHECK(vt::margin(vt::expand(p), 1, 2) == -1);
    CHECK(vt::margin(vt::expand(p), 1, 3) == -1);
}

TEST_CASE("restrict")
{
    const Profile r = restrict(pi_hat(), {1, 2});
    CHECK(r.m() == 2);
    CHECK(r.weight(Ranking({1, 2})) == Rational(1, 2));
    CHECK(r.weight(Ranking({2, 1})) == Rational(1, 2));

    CHECK(restrict(pi_hat(), {1, 2, 3}) == pi_hat());

    Profile one(3);
    one.add(Ranking({3, 1, 2}), 1);
    Profile want(2);
    want.add(Ranking({1, 2}), 1);
    CHECK(restrict(one, {1, 2}) == want);

    CHECK_THROWS_AS(restrict(one, {}), ValidationError);
}

TEST_CASE("profile text round trip and validation")
{
    const Profile p = parse_profile_text("# comment\n3: 1>2>3\n1/2: 3>1>2\n\n2: 1>2>3 # merged\n");
    CHECK(p.weight(Ranking({1, 2, 3})) == 5);
    CHECK(p.weight(Ranking({3, 1, 2})) == Rational(1, 2));
    CHECK(parse_profile_text(format_profile_text(p)) == p);
    CHECK_THROWS_AS(parse_profile_text("1 1>2>3\n"), ValidationError);
    CHECK_THROWS_AS(parse_profile_text("1: 1>2>3\n1: 1>2\n"), ValidationError);
    CHECK(parse_profile_text("-1: 1>2>3\n").fractional_mode());
    CHECK_THROWS_AS(Profile(3).add(Ranking({1, 2, 3}), -1), ValidationError);
}

TEST_CASE("property: margins against a per-voter oracle, antisymmetry and linearity")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 2000; ++it) {
        const int m = 3 + static_cast<int>(rng() % 3);
        const auto v1 = vt::random_votes(m, 1 + static_cast<int>(rng() % 15), rng);
        const auto v2 = vt::clustered_votes(m, 1 + static_cast<int>(rng() % 15), rng);
        const Profile p1 = vt::to_profile(m, v1), p2 = vt::to_profile(m, v2);
        const auto g1 = wmg(p1), g2 = wmg(p2), g12 = wmg(p1 + p2);
        for (int a = 1; a <= m; ++a) {
            CHECK(g1.w(a, a) == 0);
            for (int b = 1; b <= m; ++b) {
                if (a == b)
                    continue;
                REQUIRE(g1.w(a, b) == vt::margin(v1, a, b));
                REQUIRE(g1.w(a, b) == -g1.w(b, a));
                REQUIRE(g12.w(a, b) == g1.w(a, b) + g2.w(a, b));
            }
        }
        CHECK(histogram(p1).l1() == p1.total());
        if (v1.size() % 2 == 1)
            CHECK(umg(p1).ties() == 0);
    }
}

TEST_CASE("property: majority structure invariants on 10k random profiles")
{
    std::mt19937_64 rng(12);
    for (int it = 0; it < 10000; ++it) {
        const int m = 3 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto votes = it % 2 ? vt::clustered_votes(m, n, rng) : vt::random_votes(m, n, rng);
        const auto ms = majority_structure(vt::to_profile(m, votes));
        const int cw = vt::naive_cw(m, votes);
        REQUIRE(ms.cw.value_or(0) == cw);
        if (ms.cw)
            REQUIRE(std::find(ms.wcw.begin(), ms.wcw.end(), *ms.cw) != ms.wcw.end());
        REQUIRE((ms.acw.empty() || ms.acw.size() == 2));
        if (!ms.acw.empty()) {
            REQUIRE(ms.wcw == ms.acw);
            REQUIRE_FALSE(ms.cw);
        }
        for (int a = 1; a <= m; ++a) {
            bool weak = true, loser = true;
            for (int b = 1; b <= m; ++b)
                if (b != a) {
                    weak = weak && vt::margin(votes, a, b) >= 0;
                    loser = loser && vt::margin(votes, a, b) < 0;
                }
            REQUIRE(weak == (std::find(ms.wcw.begin(), ms.wcw.end(), a) != ms.wcw.end()));
            if (loser)
                REQUIRE(ms.condorcet_loser.value_or(0) == a);
        }
    }
}

TEST_CASE("property: restrict commutes with histogram projection")
{
    std::mt19937_64 rng(13);
    for (int it = 0; it < 500; ++it) {
        const int m = 3 + static_cast<int>(rng() % 3);
        const Profile p = vt::to_profile(m, vt::random_votes(m, 1 + static_cast<int>(rng() % 10), rng));
        AltSet alive;
        for (int a = 1; a <= m; ++a)
            if (rng() % 2)
                alive.push_back(a);
        if (alive.empty())
            alive.push_back(1 + static_cast<int>(rng() % m));
        const auto lhs = histogram(restrict(p, alive));
        const auto rhs = project_histogram(histogram(p), alive);
        REQUIRE(lhs.entries == rhs.entries);
    }
}

TEST_CASE("relabeling permutes margins")
{
    std::mt19937_64 rng(14);
    for (int it = 0; it < 200; ++it) {
        const int m = 4;
        const auto votes = vt::random_votes(m, 7, rng);
        const auto sigma = vt::random_perm(m, rng);
        const auto g = wmg(vt::to_profile(m, votes));
        const auto h = wmg(vt::to_profile(m, votes).relabeled(sigma));
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                REQUIRE(h.w(sigma[a - 1], sigma[b - 1]) == g.w(a, b));
    }
}
