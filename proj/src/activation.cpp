#include "vsat/error.hpp"
#include "vsat/geometry.hpp"

#include <set>

namespace vsat {

std::string ActivationWeight::str() const
{
    switch (kind) {
    case NegInf: return "-inf";
    case Sentinel: return "-n/log n";
    case Dim: return std::to_string(dim);
    }
    return "?";
}

bool operator<(const ActivationWeight& x, const ActivationWeight& y)
{
    if (x.kind != y.kind)
        return x.kind < y.kind;
    return x.kind == ActivationWeight::Dim && x.dim < y.dim;
}

namespace {

constexpr int kMaxN = 30;

// Lattice points of {x >= 0, sum x = n} in R^6, x0 fixed.
template <class Visit>
void slice(int n, int x0, Visit&& visit)
{
    std::vector<long long> x(6, 0);
    x[0] = x0;
    const int r0 = n - x0;
    for (int a = 0; a <= r0; ++a)
        for (int b = 0; a + b <= r0; ++b)
            for (int c = 0; a + b + c <= r0; ++c)
                for (int d = 0; a + b + c + d <= r0; ++d) {
                    x[1] = a;
                    x[2] = b;
                    x[3] = c;
                    x[4] = d;
                    x[5] = r0 - a - b - c - d;
                    visit(x);
                }
}

void check_bounds(const std::vector<Polyhedron>& polys, int n)
{
    if (n < 0 || n > kMaxN)
        throw BoundExceeded("lattice enumeration needs 0 <= n <= " + std::to_string(kMaxN));
    for (const auto& p : polys)
        if (p.m != 3)
            throw BoundExceeded("lattice enumeration supports m = 3 only");
}

// Serial reference: recursive enumeration, independent of the slice loop.
void enumerate_rec(std::vector<long long>& x, int pos, int left, const std::vector<Polyhedron>& polys,
                   std::vector<char>& active)
{
    if (pos + 1 == static_cast<int>(x.size())) {
        x[pos] = left;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (!active[i] && polys[i].contains(x))
                active[i] = 1;
        return;
    }
    for (int v = 0; v <= left; ++v) {
        x[pos] = v;
        enumerate_rec(x, pos + 1, left - v, polys, active);
    }
}

bool in_hull_cone(const PreferenceModel& model, const Polyhedron& p)
{
    std::vector<MixtureConstraint> cs;
    for (const auto& row : p.A)
        cs.push_back({to_rationals(row), Relation::Le});
    return mixture_feasibility(model, cs).has_value();
}

// Is there a mixture outside every listed cone? Each cone is escaped through
// one of its rows being strictly positive.
bool avoid_all(const PreferenceModel& model, const std::vector<const Polyhedron*>& cones, std::size_t idx,
               std::vector<MixtureConstraint>& cs, const std::vector<Rational>& current)
{
    if (idx == cones.size())
        return true;
    if (model.distributions.size() == 1) {
        // single-point hull: escape is a direct evaluation
        for (std::size_t i = idx; i < cones.size(); ++i)
            if (cones[i]->cone_contains(current))
                return false;
        return true;
    }
    const Polyhedron& p = *cones[idx];
    std::vector<std::size_t> order;
    for (std::size_t r = 0; r < p.A.size(); ++r)
        if (dot(p.A[r], current) > 0)
            order.push_back(r);
    const std::size_t escaping = order.size();
    for (std::size_t r = 0; r < p.A.size(); ++r)
        if (dot(p.A[r], current) <= 0)
            order.push_back(r);
    for (std::size_t k = 0; k < order.size(); ++k) {
        cs.push_back({to_rationals(p.A[order[k]]), Relation::Gt});
        bool ok = false;
        if (k < escaping) {
            ok = avoid_all(model, cones, idx + 1, cs, current);
        } else if (auto w = mixture_feasibility(model, cs)) {
            ok = avoid_all(model, cones, idx + 1, cs, w->distribution);
        }
        cs.pop_back();
        if (ok)
            return true;
    }
    return false;
}

struct Side {
    ActivationWeight alpha, beta;
};

Side weights(const std::vector<Polyhedron>& polys, const std::vector<char>& active, const std::vector<int>& dims,
             const PreferenceModel& model)
{
    Side s;
    std::set<int> dim_values;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (!active[i])
            continue;
        dim_values.insert(dims[i]);
        ActivationWeight w{ActivationWeight::Sentinel, 0};
        if (in_hull_cone(model, polys[i]))
            w = {ActivationWeight::Dim, dims[i]};
        if (s.alpha < w)
            s.alpha = w;
    }
    if (dim_values.empty())
        return s;
    auto try_threshold = [&](int v) {
        std::vector<const Polyhedron*> cones;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (active[i] && dims[i] > v)
                cones.push_back(&polys[i]);
        std::vector<MixtureConstraint> cs;
        return avoid_all(model, cones, 0, cs, model.distributions.front());
    };
    if (try_threshold(-1)) {
        s.beta = {ActivationWeight::Sentinel, 0};
        return s;
    }
    for (int v : dim_values)
        if (try_threshold(v)) {
            s.beta = {ActivationWeight::Dim, v};
            return s;
        }
    throw std::logic_error("activation threshold search did not terminate");
}

} // namespace

std::vector<char> activity(const std::vector<Polyhedron>& polys, int n, bool parallel)
{
    check_bounds(polys, n);
    std::vector<char> active(polys.size(), 0);
    if (!parallel) {
        std::vector<long long> x(6, 0);
        enumerate_rec(x, 0, n, polys, active);
        return active;
    }
#pragma omp parallel for schedule(dynamic)
    for (int x0 = 0; x0 <= n; ++x0) {
        std::vector<char> local(polys.size(), 0);
        slice(n, x0, [&](const std::vector<long long>& x) {
            for (std::size_t i = 0; i < polys.size(); ++i)
                if (!local[i] && polys[i].contains(x))
                    local[i] = 1;
        });
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (local[i]) {
#pragma omp atomic write
                active[i] = 1;
            }
    }
    return active;
}

ActivationReport activation_and_case(const std::vector<Polyhedron>& c, const std::vector<Polyhedron>& c_star,
                                     const PreferenceModel& model, int n)
{
    model.validate();
    if (model.m != 3)
        throw BoundExceeded("activation analysis supports m = 3 only");
    ActivationReport rep;
    rep.active = activity(c, n);
    rep.active_star = activity(c_star, n);
    for (std::size_t i = 0; i < c.size(); ++i)
        rep.dims.push_back(rep.active[i] ? cone_dimension(c[i]) : -1);
    for (std::size_t i = 0; i < c_star.size(); ++i)
        rep.dims_star.push_back(rep.active_star[i] ? cone_dimension(c_star[i]) : -1);
    auto main = weights(c, rep.active, rep.dims, model);
    auto star = weights(c_star, rep.active_star, rep.dims_star, model);
    rep.alpha = main.alpha;
    rep.beta = main.beta;
    rep.alpha_star = star.alpha;
    rep.beta_star = star.beta;

    const int q = 6;
    const ActivationWeight full{ActivationWeight::Dim, q};
    if (rep.beta.kind == ActivationWeight::NegInf)
        rep.label = Label::Zero;
    else if (rep.beta.kind == ActivationWeight::Sentinel)
        rep.label = Label::VeryUnlikely;
    else if (rep.beta.dim < q)
        rep.label = Label::Unlikely;
    else if (rep.alpha_star == full && rep.beta == full)
        rep.label = Label::Medium;
    else if (rep.alpha_star.kind == ActivationWeight::Dim && rep.alpha_star.dim < q)
        rep.label = Label::Likely;
    else if (rep.alpha_star.kind == ActivationWeight::Sentinel)
        rep.label = Label::VeryLikely;
    else if (rep.alpha_star.kind == ActivationWeight::NegInf)
        rep.label = Label::One;
    return rep;
}

} // namespace vsat
