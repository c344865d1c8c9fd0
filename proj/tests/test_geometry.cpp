#include "support.hpp"

#include "vsat/geometry.hpp"
#include "vsat/majority.hpp"
#include "vsat/model.hpp"

#include <doctest.h>

#include <set>

using namespace vsat;

namespace {

std::vector<Rational> hist_of(const Profile& p)
{
    return histogram(p).entries;
}

std::vector<Rational> pi_hat()
{
    Profile p(3);
    p.add(Ranking({1, 2, 3}), Rational(1, 4));
    p.add(Ranking({2, 1, 3}), Rational(1, 4));
    for (auto o : {std::vector<int>{1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}})
        p.add(Ranking(o), Rational(1, 8));
    return hist_of(p);
}

PreferenceModel pi2_model()
{
    return PreferenceModel::from_table_columns(
        {{Rational(1, 8), Rational(1, 8), Rational(3, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)}});
}

std::vector<Rational> as_q(const Form& f)
{
    return to_rationals(f);
}

std::vector<Signature> all_signatures(int k)
{
    std::vector<Signature> out;
    int total = 1;
    for (int i = 0; i < k; ++i)
        total *= 3;
    for (int code = 0; code < total; ++code) {
        Signature t;
        for (int i = 0, c = code; i < k; ++i, c /= 3)
            t.signs.push_back(static_cast<signed char>(c % 3 - 1));
        out.push_back(t);
    }
    return out;
}

Umg random_umg(int m, std::mt19937_64& rng)
{
    Umg g{m, std::vector<signed char>(static_cast<std::size_t>(m) * m, 0)};
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            const int s = static_cast<int>(rng() % 3) - 1;
            g.rel[(a - 1) * m + (b - 1)] = static_cast<signed char>(s);
            g.rel[(b - 1) * m + (a - 1)] = static_cast<signed char>(-s);
        }
    return g;
}

} // namespace

TEST_CASE("UMG region reproduces the four inequalities of the worked example")
{
    Umg g{3, std::vector<signed char>(9, 0)};
    auto set = [&](int a, int b, int s) {
        g.rel[(a - 1) * 3 + (b - 1)] = static_cast<signed char>(s);
        g.rel[(b - 1) * 3 + (a - 1)] = static_cast<signed char>(-s);
    };
    set(1, 2, 1);
    set(3, 1, 1);
    set(2, 3, 0);
    const Polyhedron poly = region_umg(g);
    // ranking index order for m = 3: 123 132 213 231 312 321
    const std::set<std::pair<Form, long long>> want = {
        {{-1, -1, 1, 1, -1, 1}, -1}, // 1 -> 2
        {{1, 1, 1, -1, -1, -1}, -1}, // 3 -> 1
        {{-1, 1, -1, -1, 1, 1}, 0},  // 2 ~ 3
        {{1, -1, 1, 1, -1, -1}, 0},
    };
    std::set<std::pair<Form, long long>> got;
    for (std::size_t i = 0; i < poly.A.size(); ++i)
        got.insert({poly.A[i], poly.b[i]});
    CHECK(got == want);
}

TEST_CASE("signatures")
{
    const auto eo = LinearFormSet::edge_order(3);
    const auto z = sign_signature(eo, hist_of(Profile::uniform(3)));
    for (auto s : z.signs)
        CHECK(s == 0);
    CHECK_FALSE(z.atomic());

    const auto cp = LinearFormSet::copeland(3);
    const auto t = sign_signature(cp, pi_hat());
    for (std::size_t i = 0; i < cp.size(); ++i) {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                if (a != b && cp.forms[i] == normalized(pair_form(3, a, b))) {
                    const int want = (a == 1 && b == 2) || (a == 2 && b == 1) ? 0 : (a < b ? 1 : -1);
                    CHECK(t.signs[i] == want);
                }
    }

    CHECK(Signature::parse("+-0").str() == "+-0");
    CHECK(Signature::parse("+-+").atomic());

    CHECK(oplus(Signature::parse("+-0"), Signature::parse("+00")) == Signature::parse("+00"));
}

TEST_CASE("property: refinement is a partial order and oplus is a semilattice")
{
    const auto sigs = all_signatures(3);
    for (const auto& a : sigs) {
        CHECK(refines(a, a));
        CHECK(oplus(a, a) == a);
        for (const auto& b : sigs) {
            CHECK(oplus(a, b) == oplus(b, a));
            CHECK(refines(a, oplus(a, b)));
            CHECK(refines(b, oplus(a, b)));
            if (refines(a, b) && refines(b, a))
                CHECK(a == b);
            for (const auto& c : sigs) {
                CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
                if (refines(a, b) && refines(b, c))
                    CHECK(refines(a, c));
            }
        }
    }
}

TEST_CASE("property: refinement matches cone containment on realized signatures")
{
    std::mt19937_64 rng(51);
    const auto h = LinearFormSet::copeland(3);
    std::vector<std::pair<Signature, std::vector<Rational>>> pts;
    for (int it = 0; it < 150; ++it) {
        const auto votes = vt::clustered_votes(3, 1 + static_cast<int>(rng() % 8), rng);
        const auto x = hist_of(vt::to_profile(3, votes));
        pts.push_back({sign_signature(h, x), x});
    }
    for (const auto& [t1, x1] : pts)
        for (const auto& [t2, x2] : pts)
            REQUIRE(refines(t1, t2) == region_signature(h, t1).cone_contains(x2));
}

TEST_CASE("property: region membership on integer profiles")
{
    std::mt19937_64 rng(52);
    for (int it = 0; it < 1000; ++it) {
        const int m = 3 + static_cast<int>(rng() % 2);
        const auto votes = vt::clustered_votes(m, 1 + static_cast<int>(rng() % 10), rng);
        const Profile p = vt::to_profile(m, votes);
        const auto x = hist_of(p);

        const Umg g = random_umg(m, rng);
        REQUIRE(region_umg(umg(p)).contains(x));
        REQUIRE(region_umg(g).contains(x) == (g.rel == umg(p).rel));

        const auto h = m == 3 ? LinearFormSet::copeland(3) : LinearFormSet::scoring({3, 2, 1, 0});
        const auto t = sign_signature(h, x);
        const auto other = sign_signature(h, hist_of(vt::to_profile(m, vt::random_votes(m, 3, rng))));
        REQUIRE(region_signature(h, t).contains(x));
        REQUIRE(region_signature(h, other).contains(x) == (other == t));

        const int a = 1 + static_cast<int>(rng() % m);
        REQUIRE(region_cw_and_signature(a, h, t).contains(x) == (vt::naive_cw(m, votes) == a));

        const Ranking r(votes[rng() % votes.size()]);
        const Ranking absent = Ranking(vt::random_vote(m, rng));
        const Profile q = p.minus(r);
        const auto t2 = sign_signature(h, hist_of(q));
        REQUIRE(region_par_pair(h, t, r, t2).contains(x));
        REQUIRE(region_par_pair(h, t, r, other).contains(x) == (other == t2));
        if (p.weight(absent) == 0)
            REQUIRE_FALSE(region_par_pair(h, t, absent, t2).contains(x));
    }
}

TEST_CASE("cone dimension")
{
    for (const auto& g : all_umgs(3))
        REQUIRE(cone_dimension(region_umg(g)) == 6 - static_cast<int>(g.ties()));

    std::mt19937_64 rng(53);
    for (int it = 0; it < 200; ++it) {
        const Umg g = random_umg(4, rng);
        REQUIRE(cone_dimension(region_umg(g)) == 24 - static_cast<int>(g.ties()));
    }

    Polyhedron line;
    line.m = 1;
    line.add_row({1}, 0);
    line.add_row({-1}, 0);
    CHECK(cone_dimension(line) == 0);

    const auto eo = LinearFormSet::edge_order(3);
    const Polyhedron tie = region_signature(eo, Signature{std::vector<signed char>(eo.size(), 0)});
    CHECK(tie.contains(hist_of(Profile::uniform(3))));
}

TEST_CASE("mixture feasibility")
{
    const auto ic = PreferenceModel::impartial_culture(3);
    std::vector<MixtureConstraint> zero;
    for (int a = 1; a <= 3; ++a)
        for (int b = a + 1; b <= 3; ++b)
            zero.push_back({as_q(pair_form(3, a, b)), Relation::Eq});
    const auto w = mixture_feasibility(ic, zero);
    REQUIRE(w);
    CHECK(w->lambda == std::vector<Rational>{1});

    const auto m2 = pi2_model();
    const auto beats = mixture_feasibility(
        m2, {{as_q(pair_form(3, 2, 1)), Relation::Gt}, {as_q(pair_form(3, 2, 3)), Relation::Gt}});
    REQUIRE(beats);
    CHECK(beats->lambda == std::vector<Rational>{1});
    CHECK_FALSE(mixture_feasibility(m2, {{as_q(pair_form(3, 1, 2)), Relation::Gt}}));

    PreferenceModel empty;
    empty.m = 3;
    CHECK_THROWS(mixture_feasibility(empty, zero));
}

TEST_CASE("property: mixture witnesses re-verify")
{
    std::mt19937_64 rng(54);
    for (int it = 0; it < 150; ++it) {
        PreferenceModel model;
        model.m = 3;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < k; ++j) {
            std::vector<Rational> d(6);
            long long tot = 0;
            std::vector<long long> c(6);
            for (auto& x : c)
                tot += (x = 1 + static_cast<long long>(rng() % 6));
            for (int i = 0; i < 6; ++i)
                d[i] = Rational(c[i], tot);
            model.distributions.push_back(d);
        }
        model.epsilon = model.min_entry();
        std::vector<MixtureConstraint> cs;
        const int nc = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < nc; ++j) {
            const int a = 1 + static_cast<int>(rng() % 3);
            const int b = a % 3 + 1;
            cs.push_back({as_q(pair_form(3, a, b)), static_cast<Relation>(rng() % 5)});
        }
        const auto w = mixture_feasibility(model, cs);
        if (!w)
            continue;
        Rational sum = 0;
        for (const auto& l : w->lambda) {
            REQUIRE(l >= 0);
            sum += l;
        }
        REQUIRE(sum == 1);
        REQUIRE(w->distribution == model.mixture(w->lambda));
        for (const auto& c : cs) {
            const Rational v = dot(c.form, w->distribution);
            switch (c.rel) {
            case Relation::Gt: REQUIRE(v > 0); break;
            case Relation::Lt: REQUIRE(v < 0); break;
            case Relation::Eq: REQUIRE(v == 0); break;
            case Relation::Ge: REQUIRE(v >= 0); break;
            case Relation::Le: REQUIRE(v <= 0); break;
            }
        }
    }
}

TEST_CASE("activation on small instances")
{
    Umg edgeless{3, std::vector<signed char>(9, 0)};
    const auto act = activity({region_umg(edgeless)}, 10);
    CHECK(act[0] == 1);
    CHECK(activity({region_umg(edgeless)}, 11)[0] == 0);
    CHECK(activity({region_umg(edgeless)}, 10, false) == act);

    Polyhedron empty;
    empty.m = 3;
    empty.add_row(pair_form(3, 1, 2), -1);
    empty.add_row(pair_form(3, 2, 1), -1);
    const auto rep = activation_and_case({empty}, {}, pi2_model(), 10);
    CHECK(rep.label == Label::Zero);

    const auto regions = cc_scoring_regions({1, 0, 0});
    for (int n : {7, 12})
        CHECK(activity(regions.c, n, true) == activity(regions.c, n, false));
}
