#include "vsat/model.hpp"
#include "vsat/error.hpp"

namespace vsat {

PreferenceModel PreferenceModel::impartial_culture(int m)
{
    PreferenceModel pm;
    pm.m = m;
    const auto k = static_cast<long long>(factorial(m));
    pm.epsilon = Rational(1, k);
    pm.distributions.push_back(std::vector<Rational>(k, pm.epsilon));
    return pm;
}

PreferenceModel PreferenceModel::from_table_columns(const std::vector<std::vector<Rational>>& cols)
{
    PreferenceModel pm;
    pm.m = 3;
    for (const auto& c : cols)
        pm.distributions.push_back(histogram(Profile::from_table_columns(c)).entries);
    pm.epsilon = pm.min_entry();
    pm.validate();
    return pm;
}

Rational PreferenceModel::min_entry() const
{
    Rational best = 1;
    for (const auto& d : distributions)
        for (const auto& v : d)
            if (v < best)
                best = v;
    return best;
}

void PreferenceModel::validate() const
{
    if (m < 2)
        throw ValidationError("model needs m >= 2");
    if (distributions.empty())
        throw ValidationError("model has no distributions");
    if (epsilon <= 0)
        throw ValidationError("model epsilon must be positive");
    const auto k = factorial(m);
    for (const auto& d : distributions) {
        if (d.size() != k)
            throw ValidationError("distribution has " + std::to_string(d.size()) + " entries, expected " +
                                  std::to_string(k));
        Rational s = 0;
        for (const auto& v : d) {
            if (v < epsilon)
                throw ValidationError("distribution entry " + to_string(v) + " is below epsilon " +
                                      to_string(epsilon));
            s += v;
        }
        if (s != 1)
            throw ValidationError("distribution sums to " + to_string(s) + ", not 1");
    }
}

std::vector<Rational> PreferenceModel::mixture(const std::vector<Rational>& lambda) const
{
    if (lambda.size() != distributions.size())
        throw ValidationError("mixture weights do not match the model");
    std::vector<Rational> out(factorial(m), 0);
    for (std::size_t j = 0; j < lambda.size(); ++j)
        if (lambda[j] != 0)
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] += lambda[j] * distributions[j][i];
    return out;
}

Profile as_profile(int m, const std::vector<Rational>& dist)
{
    Histogram h{m, dist};
    return Profile::from_histogram(h, true);
}

std::string to_string(Label l)
{
    switch (l) {
    case Label::One: return "One";
    case Label::VeryLikely: return "VeryLikely";
    case Label::Likely: return "Likely";
    case Label::Medium: return "Medium";
    case Label::Unlikely: return "Unlikely";
    case Label::VeryUnlikely: return "VeryUnlikely";
    case Label::Zero: return "Zero";
    case Label::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

Label parse_label(std::string_view s)
{
    for (Label l : {Label::One, Label::VeryLikely, Label::Likely, Label::Medium, Label::Unlikely, Label::VeryUnlikely,
                    Label::Zero, Label::Indeterminate})
        if (to_string(l) == s)
            return l;
    throw ValidationError("unknown label '" + std::string(s) + "'");
}

} // namespace vsat
