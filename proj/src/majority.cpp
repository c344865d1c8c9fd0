#include "vsat/majority.hpp"
#include "vsat/error.hpp"

namespace vsat {

WeightedMajorityGraph WeightedMajorityGraph::operator+(const WeightedMajorityGraph& o) const
{
    if (o.m != m)
        throw ValidationError("adding majority graphs of different size");
    WeightedMajorityGraph g = *this;
    for (std::size_t i = 0; i < margin.size(); ++i)
        g.margin[i] += o.margin[i];
    return g;
}

Umg Umg::from_wmg(const WeightedMajorityGraph& g)
{
    Umg u;
    u.m = g.m;
    u.rel.resize(g.margin.size());
    for (std::size_t i = 0; i < g.margin.size(); ++i)
        u.rel[i] = static_cast<signed char>(g.margin[i].sign());
    return u;
}

std::size_t Umg::ties() const
{
    std::size_t t = 0;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (at(a, b) == 0)
                ++t;
    return t;
}

WeightedMajorityGraph wmg(const Profile& p)
{
    const int m = p.m();
    WeightedMajorityGraph g;
    g.m = m;
    g.margin.assign(static_cast<std::size_t>(m) * m, Rational(0));
    for (const auto& [r, w] : p.entries()) {
        const auto& o = r.order();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                g.margin[(o[i] - 1) * m + (o[j] - 1)] += w;
                g.margin[(o[j] - 1) * m + (o[i] - 1)] -= w;
            }
    }
    return g;
}

Umg umg(const Profile& p)
{
    return Umg::from_wmg(wmg(p));
}

MajorityStructure majority_structure(const Umg& g)
{
    MajorityStructure s;
    s.umg = g;
    const int m = g.m;
    for (int a = 1; a <= m; ++a) {
        bool beats_all = true, loses_none = true, loses_all = true;
        for (int b = 1; b <= m; ++b) {
            if (b == a)
                continue;
            int r = g.at(a, b);
            beats_all = beats_all && r > 0;
            loses_none = loses_none && r >= 0;
            loses_all = loses_all && r < 0;
        }
        if (m >= 2 && beats_all)
            s.cw = a;
        if (loses_none)
            s.wcw.push_back(a);
        if (m >= 2 && loses_all)
            s.condorcet_loser = a;
    }
    for (int a = 1; a <= m && s.acw.empty(); ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (g.at(a, b) != 0)
                continue;
            bool ok = true;
            for (int c = 1; c <= m && ok; ++c)
                if (c != a && c != b)
                    ok = g.at(a, c) > 0 && g.at(b, c) > 0;
            if (ok) {
                s.acw = {a, b};
                break;
            }
        }
    return s;
}

MajorityStructure majority_structure(const Profile& p)
{
    return majority_structure(umg(p));
}

std::vector<Umg> all_umgs(int m)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            pairs.emplace_back(a, b);
    if (pairs.size() > 20)
        throw BoundExceeded("too many majority graphs to enumerate");
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        total *= 3;
    std::vector<Umg> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        Umg g;
        g.m = m;
        g.rel.assign(static_cast<std::size_t>(m) * m, 0);
        std::size_t c = code;
        for (auto [a, b] : pairs) {
            int v = static_cast<int>(c % 3) - 1;
            c /= 3;
            g.rel[(a - 1) * m + (b - 1)] = static_cast<signed char>(v);
            g.rel[(b - 1) * m + (a - 1)] = static_cast<signed char>(-v);
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace vsat
