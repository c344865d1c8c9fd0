#include "vsat/sampling.hpp"
#include "vsat/classifier.hpp"
#include "vsat/error.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

namespace vsat {

namespace {

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t voter)
    : key_(splitmix(splitmix(splitmix(seed) ^ trial) ^ (voter * 0xd1342543de82ef95ULL)))
{
}

std::uint64_t CounterRng::next()
{
    return splitmix(key_ ^ splitmix(++counter_));
}

std::uint64_t CounterRng::below(std::uint64_t bound)
{
    // Lemire's multiply-shift with rejection.
    unsigned __int128 prod = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < bound) {
        const std::uint64_t floor = -bound % bound;
        while (low < floor) {
            prod = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(prod);
        }
    }
    return static_cast<std::uint64_t>(prod >> 64);
}

RankingSampler::RankingSampler(int m, const std::vector<Rational>& dist)
{
    if (dist.size() != factorial(m))
        throw ValidationError("distribution length does not match m!");
    const Integer two64 = Integer(1) << 64;
    Rational c = 0;
    for (const auto& p : dist) {
        if (p < 0)
            throw ValidationError("distribution has a negative entry");
        c += p;
        Rational scaled = c * Rational(two64);
        Integer t = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
        if (Rational(t) < scaled)
            t += 1;
        unsigned __int128 v = static_cast<unsigned long long>(t >> 64);
        v = (v << 64) | static_cast<unsigned long long>(t & ((Integer(1) << 64) - 1));
        thresholds_.push_back(v);
    }
    if (c != 1)
        throw ValidationError("distribution does not sum to 1");
}

std::size_t RankingSampler::draw(CounterRng& rng) const
{
    const unsigned __int128 u = rng.next();
    auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), u);
    return static_cast<std::size_t>(it - thresholds_.begin());
}

SamplerPlan SamplerPlan::iid(int m, int n, std::vector<Rational> dist, std::uint64_t seed, std::uint64_t trials)
{
    SamplerPlan p;
    p.m = m;
    p.n = n;
    p.distributions.push_back(std::move(dist));
    p.seed = seed;
    p.trials = trials;
    return p;
}

SamplerPlan SamplerPlan::ic(int m, int n, std::uint64_t seed, std::uint64_t trials)
{
    const auto k = static_cast<long long>(factorial(m));
    SamplerPlan p = iid(m, n, std::vector<Rational>(k, Rational(1, k)), seed, trials);
    p.impartial = true;
    return p;
}

void SamplerPlan::validate() const
{
    if (m < 2 || m > 10)
        throw ValidationError("sampling needs 2 <= m <= 10");
    if (n < 1)
        throw ValidationError("sampling needs n >= 1");
    if (distributions.empty())
        throw ValidationError("sampling plan has no distribution");
    if (!assignment.empty()) {
        if (assignment.size() != static_cast<std::size_t>(n))
            throw ValidationError("per-voter assignment must have length n");
        for (auto a : assignment)
            if (a >= distributions.size())
                throw ValidationError("per-voter assignment refers to a missing distribution");
    }
}

ProfileSampler::ProfileSampler(SamplerPlan plan) : plan_(std::move(plan))
{
    plan_.validate();
    if (!plan_.impartial)
        for (const auto& d : plan_.distributions)
            samplers_.emplace_back(plan_.m, d);
}

std::vector<long long> ProfileSampler::counts(std::uint64_t trial) const
{
    const int m = plan_.m;
    std::vector<long long> c(factorial(m), 0);
    std::vector<int> perm(m);
    for (int j = 0; j < plan_.n; ++j) {
        CounterRng rng(plan_.seed, trial, static_cast<std::uint64_t>(j));
        if (plan_.impartial) {
            std::iota(perm.begin(), perm.end(), 1);
            for (int i = m - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
            ++c[ranking_index(perm)];
        } else {
            const std::size_t d = plan_.assignment.empty() ? 0 : plan_.assignment[j];
            ++c[samplers_[d].draw(rng)];
        }
    }
    return c;
}

Profile ProfileSampler::profile(std::uint64_t trial) const
{
    const auto c = counts(trial);
    Profile p(plan_.m);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i])
            p.add(Ranking::from_index(plan_.m, i), c[i]);
    return p;
}

Profile sample_profile(const SamplerPlan& plan, std::uint64_t trial)
{
    return ProfileSampler(plan).profile(trial);
}

ExactDistribution exact_small_probability(const SamplerPlan& plan)
{
    plan.validate();
    if (plan.n > 8 || plan.m > 4)
        throw BoundExceeded("exact convolution needs n <= 8 and m <= 4");
    const std::size_t k = factorial(plan.m);
    ExactDistribution cur{{std::vector<int>(k, 0), Rational(1)}};
    for (int j = 0; j < plan.n; ++j) {
        const auto& d = plan.distributions[plan.assignment.empty() ? 0 : plan.assignment[j]];
        ExactDistribution next;
        for (const auto& [h, pr] : cur)
            for (std::size_t i = 0; i < k; ++i) {
                if (d[i] == 0)
                    continue;
                auto h2 = h;
                ++h2[i];
                next[h2] += pr * d[i];
            }
        cur = std::move(next);
    }
    return cur;
}

Rational exact_satisfaction(const SamplerPlan& plan, Axiom axiom, const RuleSpec& rule, const EvalOptions& opt)
{
    Rational total = 0;
    for (const auto& [h, pr] : exact_small_probability(plan)) {
        Profile p(plan.m);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i])
                p.add(Ranking::from_index(plan.m, i), h[i]);
        if (evaluate_axiom(axiom, rule, p, opt).satisfied)
            total += pr;
    }
    return total;
}

void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& lo, double& hi)
{
    if (trials == 0) {
        lo = 0;
        hi = 1;
        return;
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kWilsonZ * kWilsonZ;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = kWilsonZ / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
    // keep the point estimate inside despite rounding
    lo = std::min(lo, p);
    hi = std::max(hi, p);
}

SatisfactionEstimate estimate_satisfaction(const RuleSpec& rule, Axiom axiom, const SamplerPlan& plan,
                                           const EvalOptions& opt, bool parallel)
{
    const auto start = std::chrono::steady_clock::now();
    const ProfileSampler sampler(plan);
    rule.validate(plan.m);
    const auto trials = static_cast<long long>(plan.trials);
    long long ok = 0;
    if (parallel) {
#pragma omp parallel for reduction(+ : ok) schedule(static)
        for (long long t = 0; t < trials; ++t)
            ok += evaluate_axiom(axiom, rule, sampler.profile(static_cast<std::uint64_t>(t)), opt).satisfied ? 1 : 0;
    } else {
        for (long long t = 0; t < trials; ++t)
            ok += evaluate_axiom(axiom, rule, sampler.profile(static_cast<std::uint64_t>(t)), opt).satisfied ? 1 : 0;
    }
    SatisfactionEstimate e;
    e.successes = static_cast<std::uint64_t>(ok);
    e.trials = plan.trials;
    e.estimate = trials ? static_cast<double>(ok) / static_cast<double>(trials) : 0.0;
    wilson_interval(e.successes, e.trials, e.ci_lo, e.ci_hi);
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return e;
}

AdversaryReport adversarial_estimate(const PreferenceModel& model, const RuleSpec& rule, Axiom axiom, int n,
                                     std::uint64_t trials, std::uint64_t seed, const EvalOptions& opt)
{
    model.validate();
    AdversaryReport rep;
    rep.caveat = "heuristic lower-bound search over i.i.d. plans at hull points; not the infimum over all "
                 "adversary choices";
    auto add = [&](std::string name, const std::vector<Rational>& d) {
        for (const auto& c : rep.candidates)
            if (c.distribution == d)
                return;
        auto plan = SamplerPlan::iid(model.m, n, d, seed, trials);
        rep.candidates.push_back({std::move(name), d, estimate_satisfaction(rule, axiom, plan, opt)});
    };
    for (std::size_t j = 0; j < model.distributions.size(); ++j)
        add("vertex " + std::to_string(j), model.distributions[j]);
    if (model.distributions.size() > 1) {
        std::vector<AsymptoticCase> cases;
        try {
            if (axiom == Axiom::CC && (rule.kind == RuleKind::Scoring || rule.kind == RuleKind::Mrse)) {
                cases.push_back(classify_cc(model, rule, Parity::Even));
                cases.push_back(classify_cc(model, rule, Parity::Odd));
            } else if (axiom == Axiom::Par && model.m >= 4 && rule.kind != RuleKind::Scoring) {
                cases.push_back(classify_par(model, rule));
            }
        } catch (const BoundExceeded&) {
        }
        for (const auto& c : cases)
            if (c.witness)
                add("witness (" + c.clause + ")", c.witness->distribution);
    }
    for (std::size_t i = 1; i < rep.candidates.size(); ++i)
        if (rep.candidates[i].estimate.estimate < rep.candidates[rep.minimum].estimate.estimate)
            rep.minimum = i;
    return rep;
}

} // namespace vsat
