#pragma once

#include "vsat/axioms.hpp"
#include "vsat/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vsat {

// Counter-based generator: the stream is a pure function of (seed, trial, voter).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t voter);
    std::uint64_t next();
    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Per-distribution table of ceil(C_i * 2^64) for the cumulative sums C_i.
class RankingSampler {
public:
    RankingSampler(int m, const std::vector<Rational>& dist);
    std::size_t draw(CounterRng& rng) const;

private:
    std::vector<unsigned __int128> thresholds_;
};

struct SamplerPlan {
    int m = 0;
    int n = 0;
    std::vector<std::vector<Rational>> distributions;
    // voter j draws from distributions[assignment[j]]; empty means all use 0.
    std::vector<std::size_t> assignment;
    bool impartial = false; // uniform permutation fast path
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;

    static SamplerPlan iid(int m, int n, std::vector<Rational> dist, std::uint64_t seed, std::uint64_t trials);
    static SamplerPlan ic(int m, int n, std::uint64_t seed, std::uint64_t trials);
    void validate() const;
};

class ProfileSampler {
public:
    explicit ProfileSampler(SamplerPlan plan);
    // Histogram counts (length m!) of trial t.
    std::vector<long long> counts(std::uint64_t trial) const;
    Profile profile(std::uint64_t trial) const;
    const SamplerPlan& plan() const { return plan_; }

private:
    SamplerPlan plan_;
    std::vector<RankingSampler> samplers_;
};

Profile sample_profile(const SamplerPlan& plan, std::uint64_t trial);

using ExactDistribution = std::map<std::vector<int>, Rational>;

// Exact PMV law by sequential convolution. n <= 8, m <= 4.
ExactDistribution exact_small_probability(const SamplerPlan& plan);
// Expected axiom satisfaction under the exact law.
Rational exact_satisfaction(const SamplerPlan& plan, Axiom axiom, const RuleSpec& rule, const EvalOptions& opt = {});

struct SatisfactionEstimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double estimate = 0;
    double ci_lo = 0;
    double ci_hi = 0;
    double seconds = 0;
};

constexpr double kWilsonZ = 1.959963984540054;

void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& lo, double& hi);

SatisfactionEstimate estimate_satisfaction(const RuleSpec& rule, Axiom axiom, const SamplerPlan& plan,
                                           const EvalOptions& opt = {}, bool parallel = true);

struct AdversaryCandidate {
    std::string name;
    std::vector<Rational> distribution;
    SatisfactionEstimate estimate;
};

struct AdversaryReport {
    std::vector<AdversaryCandidate> candidates;
    std::size_t minimum = 0;
    std::string caveat;
};

// Heuristic: i.i.d. plans at each vertex of the model and at each classifier witness.
AdversaryReport adversarial_estimate(const PreferenceModel& model, const RuleSpec& rule, Axiom axiom, int n,
                                     std::uint64_t trials, std::uint64_t seed, const EvalOptions& opt = {});

} // namespace vsat
