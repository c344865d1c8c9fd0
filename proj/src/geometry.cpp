#include "vsat/geometry.hpp"
#include "vsat/error.hpp"
#include "vsat/lp.hpp"

#include <numeric>

namespace vsat {

Form normalized(Form f)
{
    long long g = 0;
    for (long long v : f)
        g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1)
        for (auto& v : f)
            v /= g;
    return f;
}

Form pair_form(int m, int a, int b)
{
    const auto rs = all_rankings(m);
    Form f(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        f[i] = rs[i].prefers(a, b) ? 1 : -1;
    return f;
}

Form score_pair_form(int m, const AltSet& removed, int a, int b, const std::vector<long long>& s)
{
    if (static_cast<int>(s.size()) != m - static_cast<int>(removed.size()))
        throw ValidationError("score vector length does not match the alive alternatives");
    std::vector<char> gone(m + 1, 0);
    for (int x : removed)
        gone[x] = 1;
    const auto rs = all_rankings(m);
    Form f(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        int rank = 0, ra = -1, rb = -1;
        for (int x : rs[i].order()) {
            if (gone[x])
                continue;
            if (x == a)
                ra = rank;
            if (x == b)
                rb = rank;
            ++rank;
        }
        f[i] = s[ra] - s[rb];
    }
    return f;
}

LinearFormSet LinearFormSet::edge_order(int m)
{
    LinearFormSet h{m, {}, "H_EO"};
    std::vector<Form> edges;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            if (a != b)
                edges.push_back(pair_form(m, a, b));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            Form f(edges[i].size());
            for (std::size_t k = 0; k < f.size(); ++k)
                f[k] = edges[i][k] - edges[j][k];
            h.forms.push_back(normalized(std::move(f)));
        }
    return h;
}

LinearFormSet LinearFormSet::copeland(int m)
{
    LinearFormSet h{m, {}, "H_Copeland"};
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            h.forms.push_back(pair_form(m, a, b));
    return h;
}

LinearFormSet LinearFormSet::scoring(const std::vector<long long>& s)
{
    validate_scoring_vector(s);
    const int m = static_cast<int>(s.size());
    LinearFormSet h{m, {}, "H_scoring"};
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            h.forms.push_back(normalized(score_pair_form(m, {}, a, b, s)));
    return h;
}

LinearFormSet LinearFormSet::mrse(const RuleSpec& rule, int m)
{
    if (rule.kind != RuleKind::Mrse)
        throw ValidationError("MRSE hyperplanes need an MRSE rule");
    rule.validate(m);
    if (m > 6)
        throw BoundExceeded("MRSE hyperplanes need m <= 6");
    LinearFormSet h{m, {}, "H_MRSE(" + to_string(rule) + ")"};
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        AltSet removed;
        for (int x = 1; x <= m; ++x)
            if (mask >> (x - 1) & 1u)
                removed.push_back(x);
        const int k = m - static_cast<int>(removed.size());
        if (k < 2)
            continue;
        const auto s = rule.component(k);
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                if (!(mask >> (a - 1) & 1u) && !(mask >> (b - 1) & 1u))
                    h.forms.push_back(normalized(score_pair_form(m, removed, a, b, s)));
    }
    return h;
}

bool Signature::atomic() const
{
    return std::find(signs.begin(), signs.end(), 0) == signs.end();
}

std::string Signature::str() const
{
    std::string s;
    for (auto v : signs)
        s.push_back(v > 0 ? '+' : v < 0 ? '-' : '0');
    return s;
}

Signature Signature::parse(std::string_view s)
{
    Signature t;
    for (char c : s) {
        if (c == '+')
            t.signs.push_back(1);
        else if (c == '-')
            t.signs.push_back(-1);
        else if (c == '0')
            t.signs.push_back(0);
        else if (c != ',' && c != ' ' && c != '(' && c != ')')
            throw ValidationError("bad signature character '" + std::string(1, c) + "'");
    }
    return t;
}

Signature sign_signature(const LinearFormSet& h, const std::vector<Rational>& x)
{
    Signature t;
    for (const auto& f : h.forms)
        t.signs.push_back(static_cast<signed char>(sign(dot(f, x))));
    return t;
}

bool refines(const Signature& t1, const Signature& t2)
{
    if (t1.signs.size() != t2.signs.size())
        throw ValidationError("signatures differ in length");
    for (std::size_t i = 0; i < t1.signs.size(); ++i)
        if (t2.signs[i] != 0 && t1.signs[i] != t2.signs[i])
            return false;
    return true;
}

Signature oplus(const Signature& t1, const Signature& t2)
{
    if (t1.signs.size() != t2.signs.size())
        throw ValidationError("signatures differ in length");
    Signature t;
    for (std::size_t i = 0; i < t1.signs.size(); ++i)
        t.signs.push_back(t1.signs[i] == t2.signs[i] ? t1.signs[i] : 0);
    return t;
}

std::size_t Polyhedron::dim_ambient() const
{
    return factorial(m);
}

void Polyhedron::add_row(Form a, long long rhs)
{
    long long g = 0;
    for (long long v : a)
        g = std::gcd(g, v < 0 ? -v : v);
    if (g > 1) {
        for (auto& v : a)
            v /= g;
        // floor division keeps the same integer points
        rhs = rhs >= 0 ? rhs / g : -((-rhs + g - 1) / g);
    }
    A.push_back(std::move(a));
    b.push_back(rhs);
}

bool Polyhedron::contains(const std::vector<Rational>& x) const
{
    for (std::size_t i = 0; i < A.size(); ++i)
        if (dot(A[i], x) > b[i])
            return false;
    return true;
}

bool Polyhedron::contains(const std::vector<long long>& x) const
{
    for (std::size_t i = 0; i < A.size(); ++i) {
        long long v = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            v += A[i][j] * x[j];
        if (v > b[i])
            return false;
    }
    return true;
}

bool Polyhedron::cone_contains(const std::vector<Rational>& x) const
{
    for (const auto& row : A)
        if (dot(row, x) > 0)
            return false;
    return true;
}

namespace {

Form negated(Form f)
{
    for (auto& v : f)
        v = -v;
    return f;
}

void add_signature_rows(Polyhedron& p, const LinearFormSet& h, const Signature& t, int shift_index = -1)
{
    if (t.signs.size() != h.forms.size())
        throw ValidationError("signature length does not match the hyperplane set");
    auto add = [&](Form a, long long rhs) {
        if (shift_index >= 0)
            rhs += a[shift_index];
        p.add_row(std::move(a), rhs);
    };
    for (std::size_t i = 0; i < h.forms.size(); ++i) {
        const Form& f = h.forms[i];
        if (t.signs[i] > 0) {
            add(negated(f), -1);
        } else if (t.signs[i] < 0) {
            add(f, -1);
        } else {
            add(f, 0);
            add(negated(f), 0);
        }
    }
}

} // namespace

Polyhedron region_umg(const Umg& g)
{
    Polyhedron p;
    p.m = g.m;
    p.label = "H_G";
    for (int a = 1; a <= g.m; ++a)
        for (int b = a + 1; b <= g.m; ++b) {
            int r = g.at(a, b);
            if (r > 0) {
                p.add_row(pair_form(g.m, b, a), -1);
            } else if (r < 0) {
                p.add_row(pair_form(g.m, a, b), -1);
            } else {
                p.add_row(pair_form(g.m, b, a), 0);
                p.add_row(pair_form(g.m, a, b), 0);
            }
        }
    return p;
}

Polyhedron region_signature(const LinearFormSet& h, const Signature& t)
{
    Polyhedron p;
    p.m = h.m;
    p.label = "H_t";
    add_signature_rows(p, h, t);
    return p;
}

Polyhedron region_cw_and_signature(int a, const LinearFormSet& h, const Signature& t)
{
    Polyhedron p;
    p.m = h.m;
    p.label = "H_a,t";
    for (int b = 1; b <= h.m; ++b)
        if (b != a)
            p.add_row(pair_form(h.m, b, a), -1);
    add_signature_rows(p, h, t);
    return p;
}

Polyhedron region_par_pair(const LinearFormSet& h, const Signature& t1, const Ranking& r, const Signature& t2)
{
    if (r.m() != h.m)
        throw ValidationError("ranking size does not match the hyperplane set");
    Polyhedron p;
    p.m = h.m;
    p.label = "H_par";
    const int ri = static_cast<int>(r.index());
    Form e(factorial(h.m), 0);
    e[ri] = -1;
    p.add_row(e, -1);
    add_signature_rows(p, h, t1);
    add_signature_rows(p, h, t2, ri);
    return p;
}

int cone_dimension(const Polyhedron& poly)
{
    const int d = static_cast<int>(poly.dim_ambient());
    std::vector<std::vector<Rational>> essential;
    for (std::size_t i = 0; i < poly.A.size(); ++i) {
        // a.x <= 0 on the cone; the row is an implicit equality iff -a.x cannot leave 0.
        const auto ai = to_rationals(poly.A[i]);
        std::vector<Rational> neg(ai.size());
        for (std::size_t j = 0; j < ai.size(); ++j)
            neg[j] = -ai[j];
        lp::Problem prob(d, true);
        for (const auto& row : poly.A)
            prob.add(to_rationals(row), lp::Rel::Le, 0);
        prob.add(neg, lp::Rel::Le, 1);
        auto res = lp::maximize(prob, neg);
        if (res.status == lp::Status::Optimal && res.value == 0)
            essential.push_back(ai);
    }
    return d - lp::rank(std::move(essential));
}

std::optional<MixtureWitness> mixture_feasibility(const PreferenceModel& model,
                                                  const std::vector<MixtureConstraint>& constraints)
{
    const int k = static_cast<int>(model.distributions.size());
    if (k == 0)
        throw ValidationError("mixture feasibility needs a nonempty model");
    lp::Problem prob(k);
    prob.add(std::vector<Rational>(k, 1), lp::Rel::Eq, 1);
    for (const auto& c : constraints) {
        std::vector<Rational> row(k);
        for (int j = 0; j < k; ++j)
            row[j] = dot(c.form, model.distributions[j]);
        lp::Rel rel = lp::Rel::Eq;
        switch (c.rel) {
        case Relation::Gt: rel = lp::Rel::Gt; break;
        case Relation::Lt: rel = lp::Rel::Lt; break;
        case Relation::Ge: rel = lp::Rel::Ge; break;
        case Relation::Le: rel = lp::Rel::Le; break;
        case Relation::Eq: rel = lp::Rel::Eq; break;
        }
        prob.add(std::move(row), rel, 0);
    }
    auto x = lp::find_point(prob);
    if (!x)
        return std::nullopt;
    MixtureWitness w{*x, model.mixture(*x)};
    for (const auto& c : constraints) {
        int sg = sign(dot(c.form, w.distribution));
        bool ok = (c.rel == Relation::Gt && sg > 0) || (c.rel == Relation::Lt && sg < 0) ||
                  (c.rel == Relation::Eq && sg == 0) || (c.rel == Relation::Ge && sg >= 0) ||
                  (c.rel == Relation::Le && sg <= 0);
        if (!ok)
            throw std::logic_error("mixture witness failed verification");
    }
    return w;
}

RegionPair cc_scoring_regions(const std::vector<long long>& s)
{
    validate_scoring_vector(s);
    const int m = static_cast<int>(s.size());
    RegionPair out;
    for (const auto& g : all_umgs(m))
        if (!majority_structure(g).cw)
            out.c.push_back(region_umg(g));
    for (int a = 1; a <= m; ++a) {
        Polyhedron win;
        win.m = m;
        win.label = "CW wins";
        for (int b = 1; b <= m; ++b)
            if (b != a)
                win.add_row(pair_form(m, b, a), -1);
        Polyhedron base = win;
        for (int b = 1; b <= m; ++b)
            if (b != a)
                win.add_row(score_pair_form(m, {}, b, a, s), 0);
        out.c.push_back(std::move(win));
        for (int b = 1; b <= m; ++b) {
            if (b == a)
                continue;
            Polyhedron lose = base;
            lose.label = "CW beaten";
            lose.add_row(score_pair_form(m, {}, a, b, s), -1);
            out.c_star.push_back(std::move(lose));
        }
    }
    return out;
}

} // namespace vsat
