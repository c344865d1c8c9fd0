#pragma once

#include "vsat/profile.hpp"

#include <string>
#include <vector>

namespace vsat {

// Finite set of strictly positive distributions over rankings; each
// distribution is a length-m! vector in ranking-index order.
struct PreferenceModel {
    int m = 0;
    Rational epsilon = 0;
    std::vector<std::vector<Rational>> distributions;

    static PreferenceModel impartial_culture(int m);
    // Single-distribution models given in the (123,132,231,321,213,312) column order.
    static PreferenceModel from_table_columns(const std::vector<std::vector<Rational>>& cols);
    // Smallest entry over all distributions.
    Rational min_entry() const;
    // Sums to 1, every entry >= epsilon > 0.
    void validate() const;
    std::vector<Rational> mixture(const std::vector<Rational>& lambda) const;
};

// Mixture of the model's distributions with exact convex weights.
struct MixtureWitness {
    std::vector<Rational> lambda;
    std::vector<Rational> distribution;
};

Profile as_profile(int m, const std::vector<Rational>& dist);

enum class Label { One, VeryLikely, Likely, Medium, Unlikely, VeryUnlikely, Zero, Indeterminate };

std::string to_string(Label l);
Label parse_label(std::string_view s);

} // namespace vsat
