#pragma once

#include "vsat/geometry.hpp"
#include "vsat/model.hpp"
#include "vsat/rules.hpp"

#include <optional>
#include <string>

namespace vsat {

enum class Parity { Even, Odd };

std::string to_string(Parity p);

struct AsymptoticCase {
    Label label = Label::Indeterminate;
    Parity parity = Parity::Even;
    std::optional<MixtureWitness> witness;
    std::string clause; // which condition decided the label
    int ell = 0;        // exponent for Likely: 1 - Theta(n^(-ell/2))
    std::string note;
};

AsymptoticCase classify_cc_scoring(const PreferenceModel& model, const std::vector<long long>& s, Parity parity);
AsymptoticCase classify_cc_mrse(const PreferenceModel& model, const RuleSpec& rule, Parity parity);
// Dispatches on the rule kind (scoring or MRSE).
AsymptoticCase classify_cc(const PreferenceModel& model, const RuleSpec& rule, Parity parity);
AsymptoticCase classify_par(const PreferenceModel& model, const RuleSpec& rule);

struct GisrReport {
    bool as = false;  // rule-level: every profile satisfies CC for large n
    bool rs = false;  // robust satisfaction
    bool rd = false;  // robust dissatisfaction
    bool nrs = false; // non-robust satisfaction
};

GisrReport gisr_conditions(const PreferenceModel& model, const RuleSpec& rule, const MixtureWitness& pi);

} // namespace vsat
