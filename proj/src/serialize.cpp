#include "vsat/serialize.hpp"
#include "vsat/error.hpp"

#include <string>

namespace vsat {

namespace {

Rational decimal_rational(const std::string& s)
{
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos)
        return parse_rational(s);
    std::string mant = s.substr(0, exp);
    long long e = 0;
    if (exp != std::string::npos) {
        try {
            e = std::stoll(s.substr(exp + 1));
        } catch (const std::exception&) {
            throw ValidationError("not a number: '" + s + "'");
        }
    }
    if (dot != std::string::npos && dot < mant.size()) {
        e -= static_cast<long long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+")
        throw ValidationError("not a number: '" + s + "'");
    Rational q = parse_rational(mant);
    Rational ten = 10;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i)
        q = e < 0 ? Rational(q / ten) : Rational(q * ten);
    return q;
}

} // namespace

Json rational_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return decimal_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_number())
        return decimal_rational(j.dump());
    throw ValidationError("expected a number, got " + j.dump());
}

Json to_json(const Profile& p)
{
    Json votes = Json::array();
    for (const auto& [r, w] : p.entries())
        votes.push_back({{"ranking", r.str()}, {"weight", rational_json(w)}});
    return {{"m", p.m()}, {"votes", votes}};
}

Profile profile_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("votes"))
        throw ValidationError("profile JSON needs m and votes");
    const int m = j.at("m").get<int>();
    Profile p(m);
    for (const auto& v : j.at("votes")) {
        Ranking r = Ranking::parse(v.at("ranking").get<std::string>());
        if (r.m() != m)
            throw ValidationError("ranking " + r.str() + " does not have " + std::to_string(m) + " alternatives");
        p.add(r, rational_from_json(v.at("weight")));
    }
    return p;
}

Json to_json(const Histogram& h)
{
    Json e = Json::array();
    for (const auto& q : h.entries)
        e.push_back(rational_json(q));
    return {{"m", h.m}, {"entries", e}};
}

Json to_json(const AxiomWitness& w)
{
    Json j = Json::object();
    if (w.ranking) {
        j["ranking"] = w.ranking->str();
        j["winner_before"] = w.winner_before;
        j["winner_after"] = w.winner_after;
    } else {
        j["alternative"] = w.alternative;
        j["winners"] = w.winners;
    }
    return j;
}

Json verdict_json(Axiom axiom, const RuleSpec& rule, const AxiomVerdict& v)
{
    return {{"axiom", to_string(axiom)},
            {"rule", to_string(rule)},
            {"satisfied", v.satisfied},
            {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

Json to_json(const Signature& s)
{
    return s.str();
}

Signature signature_from_json(const Json& j)
{
    return Signature::parse(j.get<std::string>());
}

Json to_json(const Polyhedron& p)
{
    return {{"m", p.m}, {"label", p.label}, {"A", p.A}, {"b", p.b}};
}

Polyhedron polyhedron_from_json(const Json& j)
{
    Polyhedron p;
    p.m = j.at("m").get<int>();
    p.label = j.value("label", std::string());
    const auto rows = j.at("A").get<std::vector<Form>>();
    const auto rhs = j.at("b").get<std::vector<long long>>();
    if (rows.size() != rhs.size())
        throw ValidationError("polyhedron rows and right-hand sides differ in length");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != factorial(p.m))
            throw ValidationError("polyhedron row has the wrong length");
        p.A.push_back(rows[i]);
        p.b.push_back(rhs[i]);
    }
    return p;
}

namespace {

Json distribution_json(int m, const std::vector<Rational>& d)
{
    Json o = Json::object();
    for (std::size_t i = 0; i < d.size(); ++i)
        o[Ranking::from_index(m, i).str()] = rational_json(d[i]);
    return o;
}

} // namespace

Json to_json(const PreferenceModel& model)
{
    Json ds = Json::array();
    for (const auto& d : model.distributions)
        ds.push_back(distribution_json(model.m, d));
    return {{"m", model.m}, {"epsilon", rational_json(model.epsilon)}, {"distributions", ds}};
}

PreferenceModel model_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("m") || !j.contains("distributions"))
        throw ValidationError("model JSON needs m and distributions");
    PreferenceModel model;
    model.m = j.at("m").get<int>();
    if (model.m < 2 || model.m > 8)
        throw ValidationError("model needs 2 <= m <= 8");
    for (const auto& d : j.at("distributions")) {
        std::vector<Rational> v(factorial(model.m), Rational(0));
        std::vector<bool> seen(v.size(), false);
        for (const auto& [key, w] : d.items()) {
            Ranking r = Ranking::parse(key);
            if (r.m() != model.m)
                throw ValidationError("ranking " + key + " does not have " + std::to_string(model.m) + " alternatives");
            if (seen[r.index()])
                throw ValidationError("ranking " + key + " listed twice");
            seen[r.index()] = true;
            v[r.index()] = rational_from_json(w);
        }
        model.distributions.push_back(std::move(v));
    }
    model.epsilon = j.contains("epsilon") ? rational_from_json(j.at("epsilon")) : model.min_entry();
    model.validate();
    return model;
}

Json to_json(const MixtureWitness& w, int m)
{
    Json l = Json::array();
    for (const auto& q : w.lambda)
        l.push_back(rational_json(q));
    return {{"lambda", l}, {"distribution", distribution_json(m, w.distribution)}};
}

Json to_json(const AsymptoticCase& c, int m)
{
    Json j = {{"label", to_string(c.label)},
              {"parity", to_string(c.parity)},
              {"witness", c.witness ? to_json(*c.witness, m) : Json(nullptr)},
              {"clause", c.clause}};
    if (c.label == Label::Likely)
        j["ell"] = c.ell;
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

Json to_json(const ParViolation& v)
{
    return {{"profile", to_json(v.profile)},
            {"n", to_string(v.profile.total())},
            {"abstainer", v.abstainer.str()},
            {"winner_before", v.winner_before},
            {"winner_after", v.winner_after},
            {"cowinners", v.cowinners},
            {"threshold", v.threshold}};
}

Json to_json(const SatisfactionEstimate& e)
{
    return {{"successes", e.successes}, {"trials", e.trials}, {"estimate", e.estimate},
            {"ci_lo", e.ci_lo},         {"ci_hi", e.ci_hi},   {"seconds", e.seconds}};
}

} // namespace vsat
