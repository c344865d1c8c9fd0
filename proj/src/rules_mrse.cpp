#include "vsat/rules.hpp"
#include "kernels.hpp"

namespace vsat {

namespace {

void require_mrse(const RuleSpec& rule)
{
    if (rule.kind != RuleKind::Mrse)
        throw ValidationError("rule '" + to_string(rule) + "' is not an MRSE rule");
}

void collect_orders(const std::map<std::uint64_t, std::uint64_t>& pu, std::uint64_t s, std::vector<int>& prefix,
                    std::vector<EliminationOrder>& out)
{
    if (std::popcount(s) == 1) {
        EliminationOrder e{prefix};
        e.order.push_back(std::countr_zero(s) + 1);
        out.push_back(std::move(e));
        return;
    }
    for (std::uint64_t r = pu.at(s); r; r &= r - 1) {
        int a = std::countr_zero(r);
        prefix.push_back(a + 1);
        collect_orders(pu, s & ~(1ULL << a), prefix, out);
        prefix.pop_back();
    }
}

} // namespace

AltSet mrse_cowinners(const RuleSpec& rule, const Profile& p, const PutOptions& opt)
{
    require_mrse(rule);
    return cowinners(rule, p, opt);
}

std::vector<EliminationOrder> parallel_universes(const RuleSpec& rule, const Profile& p, const PutOptions& opt)
{
    require_mrse(rule);
    rule.validate(p.m());
    if (p.m() == 1)
        return {EliminationOrder{{1}}};
    auto pu = detail::dispatch(p, rule, [&](const auto& b) { return detail::pu_structure(rule, b, opt.max_m); });
    std::vector<EliminationOrder> out;
    std::vector<int> prefix;
    collect_orders(pu, (1ULL << p.m()) - 1, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> possible_losing_rounds(const RuleSpec& rule, const Profile& p, int a, const PutOptions& opt)
{
    require_mrse(rule);
    rule.validate(p.m());
    const int m = p.m();
    if (a < 1 || a > m)
        throw ValidationError("alternative " + std::to_string(a) + " out of range");
    if (m == 1)
        return {};
    auto pu = detail::dispatch(p, rule, [&](const auto& b) { return detail::pu_structure(rule, b, opt.max_m); });
    const std::uint64_t bit = 1ULL << (a - 1);
    std::vector<int> rounds;
    for (const auto& [s, lm] : pu)
        if (lm & bit)
            rounds.push_back(m - std::popcount(s) + 1);
    std::sort(rounds.begin(), rounds.end());
    rounds.erase(std::unique(rounds.begin(), rounds.end()), rounds.end());
    return rounds;
}

} // namespace vsat
