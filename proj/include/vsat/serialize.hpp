#pragma once

#include "vsat/axioms.hpp"
#include "vsat/classifier.hpp"
#include "vsat/constructions.hpp"
#include "vsat/geometry.hpp"
#include "vsat/model.hpp"
#include "vsat/sampling.hpp"

#include <json.hpp>

namespace vsat {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("3/8"); readers also accept JSON numbers
// and decimal strings, converted exactly.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Profile& p);
Profile profile_from_json(const Json& j);
Json to_json(const Histogram& h);

Json to_json(const AxiomWitness& w);
// {axiom, rule, satisfied, witness}
Json verdict_json(Axiom axiom, const RuleSpec& rule, const AxiomVerdict& v);

Json to_json(const Signature& s);
Signature signature_from_json(const Json& j);
Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

// {m, epsilon, distributions: [{ranking: weight}]}
Json to_json(const PreferenceModel& model);
PreferenceModel model_from_json(const Json& j);

Json to_json(const MixtureWitness& w, int m);
// {label, parity, witness, clause, ell, note}
Json to_json(const AsymptoticCase& c, int m);

Json to_json(const ParViolation& v);
Json to_json(const SatisfactionEstimate& e);

} // namespace vsat
