#include "vsat/rules.hpp"
#include "kernels.hpp"

#include <cctype>
#include <sstream>

namespace vsat {

std::vector<long long> preset_vector(ScoringPreset p, int m)
{
    if (m < 1)
        throw ValidationError("scoring vector needs m >= 1");
    std::vector<long long> s(m, 0);
    switch (p) {
    case ScoringPreset::Plurality:
        s[0] = 1;
        break;
    case ScoringPreset::Borda:
        for (int i = 0; i < m; ++i)
            s[i] = m - 1 - i;
        break;
    case ScoringPreset::Veto:
        for (int i = 0; i + 1 < m; ++i)
            s[i] = 1;
        break;
    case ScoringPreset::Custom:
        throw ValidationError("custom scoring vector has no preset form");
    }
    return s;
}

void validate_scoring_vector(const std::vector<long long>& s)
{
    if (s.size() < 2)
        throw ValidationError("scoring vector needs at least two entries");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] > s[i - 1])
            throw ValidationError("scoring vector must be weakly decreasing");
    if (s.front() == s.back())
        throw ValidationError("scoring vector needs s1 > sm");
}

RuleSpec RuleSpec::plurality() { return RuleSpec{}; }

RuleSpec RuleSpec::borda()
{
    RuleSpec r;
    r.preset = ScoringPreset::Borda;
    return r;
}

RuleSpec RuleSpec::veto()
{
    RuleSpec r;
    r.preset = ScoringPreset::Veto;
    return r;
}

RuleSpec RuleSpec::scoring(std::vector<long long> s)
{
    validate_scoring_vector(s);
    RuleSpec r;
    r.preset = ScoringPreset::Custom;
    r.scores = std::move(s);
    return r;
}

RuleSpec RuleSpec::stv()
{
    RuleSpec r;
    r.kind = RuleKind::Mrse;
    r.preset = ScoringPreset::Plurality;
    return r;
}

RuleSpec RuleSpec::coombs()
{
    RuleSpec r = stv();
    r.preset = ScoringPreset::Veto;
    return r;
}

RuleSpec RuleSpec::baldwin()
{
    RuleSpec r = stv();
    r.preset = ScoringPreset::Borda;
    return r;
}

RuleSpec RuleSpec::mrse(std::vector<std::vector<long long>> components)
{
    if (components.empty())
        throw ValidationError("MRSE rule needs at least one component");
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].size() != i + 2)
            throw ValidationError("MRSE component " + std::to_string(i + 1) + " must have length " +
                                  std::to_string(i + 2));
        validate_scoring_vector(components[i]);
    }
    RuleSpec r;
    r.kind = RuleKind::Mrse;
    r.preset = ScoringPreset::Custom;
    r.components = std::move(components);
    return r;
}

RuleSpec RuleSpec::maximin()
{
    RuleSpec r;
    r.kind = RuleKind::Maximin;
    return r;
}

RuleSpec RuleSpec::copeland(Rational alpha)
{
    if (alpha < 0 || alpha > 1)
        throw ValidationError("Copeland alpha must lie in [0,1]");
    RuleSpec r;
    r.kind = RuleKind::Copeland;
    r.alpha = std::move(alpha);
    return r;
}

RuleSpec RuleSpec::ranked_pairs()
{
    RuleSpec r;
    r.kind = RuleKind::RankedPairs;
    return r;
}

RuleSpec RuleSpec::schulze()
{
    RuleSpec r;
    r.kind = RuleKind::Schulze;
    return r;
}

RuleSpec RuleSpec::black()
{
    return condorcetified(ScoringPreset::Borda);
}

RuleSpec RuleSpec::condorcetified(ScoringPreset p)
{
    RuleSpec r;
    r.kind = RuleKind::Condorcetified;
    r.preset = p;
    return r;
}

RuleSpec RuleSpec::condorcetified(std::vector<long long> s)
{
    RuleSpec r = scoring(std::move(s));
    r.kind = RuleKind::Condorcetified;
    return r;
}

std::vector<long long> RuleSpec::scoring_vector(int m) const
{
    if (preset != ScoringPreset::Custom)
        return preset_vector(preset, m);
    if (static_cast<int>(scores.size()) != m)
        throw ValidationError("scoring vector has length " + std::to_string(scores.size()) + " but the profile has " +
                              std::to_string(m) + " alternatives");
    return scores;
}

std::vector<long long> RuleSpec::component(int k) const
{
    if (preset != ScoringPreset::Custom)
        return preset_vector(preset, k);
    if (k < 2 || k > static_cast<int>(components.size()) + 1)
        throw ValidationError("MRSE rule has no component for " + std::to_string(k) + " alternatives");
    return components[k - 2];
}

void RuleSpec::validate(int m) const
{
    switch (kind) {
    case RuleKind::Scoring:
    case RuleKind::Condorcetified:
        if (m >= 2)
            validate_scoring_vector(scoring_vector(m));
        break;
    case RuleKind::Mrse:
        if (preset == ScoringPreset::Custom && static_cast<int>(components.size()) != m - 1)
            throw ValidationError("MRSE rule needs exactly m-1 components");
        break;
    default:
        break;
    }
}

bool RuleSpec::condorcet_consistent() const
{
    switch (kind) {
    case RuleKind::Maximin:
    case RuleKind::Copeland:
    case RuleKind::RankedPairs:
    case RuleKind::Schulze:
    case RuleKind::Condorcetified:
        return true;
    default:
        return false;
    }
}

namespace {

std::string lower(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

// "[3,1,0]" -> {3,1,0}
std::vector<long long> parse_int_list(std::string_view s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ValidationError("expected a bracketed integer list, got '" + std::string(s) + "'");
    std::vector<long long> out;
    std::string cur;
    for (char c : s.substr(1, s.size() - 2)) {
        if (c == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur.push_back(c);
        } else {
            throw ValidationError("bad character in integer list '" + std::string(s) + "'");
        }
    }
    if (!cur.empty())
        out.push_back(std::stoll(cur));
    return out;
}

std::vector<std::vector<long long>> parse_nested_list(std::string_view s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ValidationError("expected a nested list, got '" + std::string(s) + "'");
    std::vector<std::vector<long long>> out;
    std::string_view body = s.substr(1, s.size() - 2);
    std::size_t i = 0;
    while (i < body.size()) {
        if (body[i] == ',') {
            ++i;
            continue;
        }
        auto close = body.find(']', i);
        if (body[i] != '[' || close == std::string_view::npos)
            throw ValidationError("malformed nested list '" + std::string(s) + "'");
        out.push_back(parse_int_list(body.substr(i, close - i + 1)));
        i = close + 1;
    }
    return out;
}

ScoringPreset preset_from_name(const std::string& n)
{
    if (n == "plurality")
        return ScoringPreset::Plurality;
    if (n == "borda")
        return ScoringPreset::Borda;
    if (n == "veto")
        return ScoringPreset::Veto;
    return ScoringPreset::Custom;
}

std::string list_str(const std::vector<long long>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string preset_name(ScoringPreset p)
{
    switch (p) {
    case ScoringPreset::Plurality:
        return "plurality";
    case ScoringPreset::Borda:
        return "borda";
    case ScoringPreset::Veto:
        return "veto";
    default:
        return "custom";
    }
}

} // namespace

RuleSpec parse_rule(std::string_view text)
{
    const std::string t = lower(text);
    if (t == "plurality")
        return RuleSpec::plurality();
    if (t == "borda")
        return RuleSpec::borda();
    if (t == "veto")
        return RuleSpec::veto();
    if (t == "stv")
        return RuleSpec::stv();
    if (t == "coombs")
        return RuleSpec::coombs();
    if (t == "baldwin")
        return RuleSpec::baldwin();
    if (t == "maximin")
        return RuleSpec::maximin();
    if (t == "rankedpairs" || t == "ranked_pairs" || t == "rp")
        return RuleSpec::ranked_pairs();
    if (t == "schulze")
        return RuleSpec::schulze();
    if (t == "black")
        return RuleSpec::black();
    auto colon = t.find(':');
    if (colon != std::string::npos) {
        std::string head = t.substr(0, colon), arg = t.substr(colon + 1);
        if (head == "copeland")
            return RuleSpec::copeland(parse_rational(arg));
        if (head == "scoring")
            return RuleSpec::scoring(parse_int_list(arg));
        if (head == "mrse")
            return RuleSpec::mrse(parse_nested_list(arg));
        if (head == "condorcetified") {
            auto p = preset_from_name(arg);
            if (p != ScoringPreset::Custom)
                return RuleSpec::condorcetified(p);
            return RuleSpec::condorcetified(parse_int_list(arg));
        }
    }
    throw ValidationError("unknown rule '" + std::string(text) + "'");
}

std::string to_string(const RuleSpec& r)
{
    switch (r.kind) {
    case RuleKind::Scoring:
        return r.preset == ScoringPreset::Custom ? "scoring:" + list_str(r.scores) : preset_name(r.preset);
    case RuleKind::Condorcetified:
        if (r.preset == ScoringPreset::Borda)
            return "black";
        return "condorcetified:" + (r.preset == ScoringPreset::Custom ? list_str(r.scores) : preset_name(r.preset));
    case RuleKind::Mrse: {
        if (r.preset == ScoringPreset::Plurality)
            return "stv";
        if (r.preset == ScoringPreset::Veto)
            return "coombs";
        if (r.preset == ScoringPreset::Borda)
            return "baldwin";
        std::string s = "mrse:[";
        for (std::size_t i = 0; i < r.components.size(); ++i)
            s += (i ? "," : "") + list_str(r.components[i]);
        return s + "]";
    }
    case RuleKind::Maximin:
        return "maximin";
    case RuleKind::Copeland:
        return "copeland:" + to_string(r.alpha);
    case RuleKind::RankedPairs:
        return "rankedpairs";
    case RuleKind::Schulze:
        return "schulze";
    }
    return "unknown";
}

TieBreakOrder TieBreakOrder::identity(int m)
{
    return TieBreakOrder{detail::all_alts(m)};
}

TieBreakOrder TieBreakOrder::parse(std::string_view text, int m)
{
    if (lower(text).empty() || lower(text) == "lex" || lower(text) == "identity")
        return identity(m);
    TieBreakOrder t{Ranking::parse(text).order()};
    t.validate(m);
    return t;
}

void TieBreakOrder::validate(int m) const
{
    if (static_cast<int>(priority.size()) != m || !is_permutation_of_1_to_m(priority))
        throw ValidationError("tie-breaking order must be a permutation of 1.." + std::to_string(m));
}

int TieBreakOrder::rank(int a) const
{
    for (std::size_t i = 0; i < priority.size(); ++i)
        if (priority[i] == a)
            return static_cast<int>(i);
    throw ValidationError("alternative " + std::to_string(a) + " missing from tie-breaking order");
}

int TieBreakOrder::first(const AltSet& s) const
{
    if (s.empty())
        throw ValidationError("tie-breaking over an empty set");
    int best = s.front();
    for (int a : s)
        if (rank(a) < rank(best))
            best = a;
    return best;
}

int TieBreakOrder::last(const AltSet& s) const
{
    if (s.empty())
        throw ValidationError("tie-breaking over an empty set");
    int worst = s.front();
    for (int a : s)
        if (rank(a) > rank(worst))
            worst = a;
    return worst;
}

int EliminationOrder::round_of(int a) const
{
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == a)
            return static_cast<int>(i) + 1;
    throw ValidationError("alternative not in elimination order");
}

std::string EliminationOrder::str() const
{
    std::string s;
    for (std::size_t i = 0; i < order.size(); ++i)
        s += (i ? "|>" : "") + std::to_string(order[i]);
    return s;
}

AltSet scoring_cowinners(const std::vector<long long>& s, const Profile& p)
{
    return cowinners(RuleSpec::scoring(s), p);
}

AltSet condorcetified_cowinners(const std::vector<long long>& s, const Profile& p)
{
    return cowinners(RuleSpec::condorcetified(s), p);
}

AltSet cowinners(const RuleSpec& rule, const Profile& p, const PutOptions& opt)
{
    if (p.m() < 1)
        throw ValidationError("profile has no alternatives");
    rule.validate(p.m());
    return detail::dispatch(p, rule, [&](const auto& b) { return detail::cowinners_k(rule, b, opt); });
}

int resolve(const RuleSpec& rule, const Profile& p, const TieBreakOrder& tb)
{
    if (p.m() < 1)
        throw ValidationError("profile has no alternatives");
    rule.validate(p.m());
    tb.validate(p.m());
    return detail::dispatch(p, rule, [&](const auto& b) { return detail::resolve_k(rule, b, tb); });
}

} // namespace vsat
