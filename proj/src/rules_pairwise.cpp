#include "vsat/rules.hpp"
#include "kernels.hpp"

namespace vsat {

AltSet maximin_cowinners(const Profile& p)
{
    return cowinners(RuleSpec::maximin(), p);
}

AltSet copeland_cowinners(const Profile& p, const Rational& alpha)
{
    return cowinners(RuleSpec::copeland(alpha), p);
}

AltSet ranked_pairs_cowinners(const Profile& p, const PutOptions& opt)
{
    return cowinners(RuleSpec::ranked_pairs(), p, opt);
}

AltSet schulze_cowinners(const Profile& p)
{
    return cowinners(RuleSpec::schulze(), p);
}

} // namespace vsat
