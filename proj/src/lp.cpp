#include "vsat/lp.hpp"
#include "vsat/error.hpp"

namespace vsat::lp {

void Problem::add(std::vector<Rational> a, Rel rel, Rational b)
{
    if (static_cast<int>(a.size()) != n)
        throw ValidationError("LP row has wrong width");
    rows.push_back({std::move(a), rel, std::move(b)});
}

namespace {

struct Tableau {
    int rows = 0, cols = 0; // cols excludes the rhs column
    std::vector<std::vector<Rational>> t; // rows + 1 lines, last is the objective
    std::vector<int> basis;

    Rational& rhs(int i) { return t[i][cols]; }

    void pivot(int r, int c)
    {
        Rational inv = 1 / t[r][c];
        for (auto& v : t[r])
            if (v != 0)
                v *= inv;
        for (int i = 0; i <= rows; ++i) {
            if (i == r || t[i][c] == 0)
                continue;
            Rational f = t[i][c];
            for (int j = 0; j <= cols; ++j)
                if (t[r][j] != 0)
                    t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Returns false on unboundedness. Only columns below limit may enter.
    bool run(int limit)
    {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (t[rows][j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0)
                    continue;
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }

    void set_objective(const std::vector<Rational>& c)
    {
        auto& obj = t[rows];
        for (int j = 0; j <= cols; ++j)
            obj[j] = j < static_cast<int>(c.size()) ? Rational(-c[j]) : Rational(0);
        for (int i = 0; i < rows; ++i) {
            Rational f = obj[basis[i]];
            if (f == 0)
                continue;
            for (int j = 0; j <= cols; ++j)
                if (t[i][j] != 0)
                    obj[j] -= f * t[i][j];
        }
    }
};

} // namespace

Result maximize(const Problem& p, const std::vector<Rational>& c)
{
    if (static_cast<int>(c.size()) != p.n)
        throw ValidationError("LP objective has wrong width");
    // Column layout: x+ (n), x- for free vars, slack/surplus, artificials.
    std::vector<int> neg_col(p.n, -1);
    int cols = p.n;
    for (int j = 0; j < p.n; ++j)
        if (p.free_var[j])
            neg_col[j] = cols++;
    const int structural = cols;
    int slacks = 0;
    for (const auto& r : p.rows) {
        if (r.rel == Rel::Lt || r.rel == Rel::Gt)
            throw ValidationError("strict rows need find_point");
        if (r.rel != Rel::Eq)
            ++slacks;
    }
    const int art_start = structural + slacks;
    const int m = static_cast<int>(p.rows.size());
    const int total = art_start + m;

    Tableau tb;
    tb.rows = m;
    tb.cols = total;
    tb.t.assign(m + 1, std::vector<Rational>(total + 1));
    tb.basis.assign(m, -1);
    int s = structural;
    for (int i = 0; i < m; ++i) {
        const auto& r = p.rows[i];
        auto& row = tb.t[i];
        for (int j = 0; j < p.n; ++j) {
            row[j] = r.a[j];
            if (neg_col[j] >= 0)
                row[neg_col[j]] = -r.a[j];
        }
        if (r.rel == Rel::Le)
            row[s++] = 1;
        else if (r.rel == Rel::Ge)
            row[s++] = -1;
        row[total] = r.b;
        if (row[total] < 0)
            for (auto& v : row)
                v = -v;
        row[art_start + i] = 1;
        tb.basis[i] = art_start + i;
    }

    // Phase 1: maximize -sum(artificials).
    std::vector<Rational> c1(total, 0);
    for (int i = 0; i < m; ++i)
        c1[art_start + i] = -1;
    tb.set_objective(c1);
    tb.run(total);
    if (tb.t[m][total] != 0)
        return {Status::Infeasible, 0, {}};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int i = 0; i < tb.rows; ++i) {
        if (tb.basis[i] < art_start)
            continue;
        int j = 0;
        while (j < art_start && tb.t[i][j] == 0)
            ++j;
        if (j < art_start) {
            tb.pivot(i, j);
        } else {
            tb.t.erase(tb.t.begin() + i);
            tb.basis.erase(tb.basis.begin() + i);
            --tb.rows;
            --i;
        }
    }
    for (auto& row : tb.t) {
        Rational r = row[total];
        row.resize(art_start + 1);
        row[art_start] = r;
    }
    tb.cols = art_start;

    std::vector<Rational> c2(art_start, 0);
    for (int j = 0; j < p.n; ++j) {
        c2[j] = c[j];
        if (neg_col[j] >= 0)
            c2[neg_col[j]] = -c[j];
    }
    tb.set_objective(c2);
    if (!tb.run(art_start))
        return {Status::Unbounded, 0, {}};

    std::vector<Rational> val(art_start, 0);
    for (int i = 0; i < tb.rows; ++i)
        val[tb.basis[i]] = tb.t[i][art_start];
    Result res{Status::Optimal, tb.t[tb.rows][art_start], std::vector<Rational>(p.n)};
    for (int j = 0; j < p.n; ++j)
        res.x[j] = neg_col[j] >= 0 ? Rational(val[j] - val[neg_col[j]]) : val[j];
    return res;
}

std::optional<std::vector<Rational>> find_point(const Problem& p)
{
    bool strict = false;
    for (const auto& r : p.rows)
        strict = strict || r.rel == Rel::Lt || r.rel == Rel::Gt;
    if (!strict) {
        auto r = maximize(p, std::vector<Rational>(p.n, 0));
        if (r.status != Status::Optimal)
            return std::nullopt;
        return r.x;
    }
    // Extra variable t: a.x + t <= b for '<', a.x - t >= b for '>'.
    Problem q(p.n + 1);
    q.free_var = p.free_var;
    q.free_var.push_back(0);
    for (const auto& r : p.rows) {
        auto a = r.a;
        a.push_back(0);
        Rel rel = r.rel;
        if (r.rel == Rel::Lt) {
            a.back() = 1;
            rel = Rel::Le;
        } else if (r.rel == Rel::Gt) {
            a.back() = -1;
            rel = Rel::Ge;
        }
        q.add(std::move(a), rel, r.b);
    }
    std::vector<Rational> cap(p.n + 1, 0);
    cap.back() = 1;
    q.add(cap, Rel::Le, 1);
    auto r = maximize(q, cap);
    if (r.status != Status::Optimal || r.value <= 0)
        return std::nullopt;
    r.x.pop_back();
    if (!satisfies(p, r.x))
        throw std::logic_error("LP point failed verification");
    return r.x;
}

bool satisfies(const Problem& p, const std::vector<Rational>& x)
{
    for (int j = 0; j < p.n; ++j)
        if (!p.free_var[j] && x[j] < 0)
            return false;
    for (const auto& r : p.rows) {
        Rational v = dot(r.a, x);
        bool ok = false;
        switch (r.rel) {
        case Rel::Le: ok = v <= r.b; break;
        case Rel::Ge: ok = v >= r.b; break;
        case Rel::Eq: ok = v == r.b; break;
        case Rel::Lt: ok = v < r.b; break;
        case Rel::Gt: ok = v > r.b; break;
        }
        if (!ok)
            return false;
    }
    return true;
}

int rank(std::vector<std::vector<Rational>> rows)
{
    int r = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[r], rows[piv]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c] == 0)
                continue;
            Rational f = rows[i][c] / rows[r][c];
            for (int j = c; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace vsat::lp
