#pragma once

#include "vsat/majority.hpp"
#include "vsat/model.hpp"
#include "vsat/rules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vsat {

using Form = std::vector<long long>; // length m!, indexed by ranking index

Form normalized(Form f);
// Pair_{a,b}[R] = +1 if a is above b in R, else -1.
Form pair_form(int m, int a, int b);
// Score difference of a and b with B removed, using the k = m-|B| vector s.
Form score_pair_form(int m, const AltSet& removed, int a, int b, const std::vector<long long>& s);

struct LinearFormSet {
    int m = 0;
    std::vector<Form> forms;
    std::string label;

    static LinearFormSet edge_order(int m);
    static LinearFormSet copeland(int m);
    static LinearFormSet scoring(const std::vector<long long>& s);
    static LinearFormSet mrse(const RuleSpec& rule, int m);
    std::size_t size() const { return forms.size(); }
};

struct Signature {
    std::vector<signed char> signs;

    bool atomic() const;
    std::string str() const; // e.g. "+-0"
    static Signature parse(std::string_view s);
    bool operator==(const Signature&) const = default;
};

Signature sign_signature(const LinearFormSet& h, const std::vector<Rational>& x);
// t1 refines t2: t1 agrees with t2 wherever t2 is nonzero.
bool refines(const Signature& t1, const Signature& t2);
Signature oplus(const Signature& t1, const Signature& t2);

// {x : A x <= b} in R^{m!}; rows are coprime integer vectors.
struct Polyhedron {
    int m = 0;
    std::vector<Form> A;
    std::vector<long long> b;
    std::string label;

    std::size_t dim_ambient() const;
    void add_row(Form a, long long rhs);
    bool contains(const std::vector<Rational>& x) const;
    bool contains(const std::vector<long long>& x) const;
    bool cone_contains(const std::vector<Rational>& x) const;
};

Polyhedron region_umg(const Umg& g);
Polyhedron region_signature(const LinearFormSet& h, const Signature& t);
Polyhedron region_cw_and_signature(int a, const LinearFormSet& h, const Signature& t);
// Histograms x with an R-vote, Sign(x) = t1 and Sign(x - e_R) = t2.
Polyhedron region_par_pair(const LinearFormSet& h, const Signature& t1, const Ranking& r, const Signature& t2);

// Dimension of the characteristic cone {x : A x <= 0}.
int cone_dimension(const Polyhedron& poly);

enum class Relation { Gt, Eq, Lt, Ge, Le };

struct MixtureConstraint {
    std::vector<Rational> form;
    Relation rel;
};

std::optional<MixtureWitness> mixture_feasibility(const PreferenceModel& model,
                                                  const std::vector<MixtureConstraint>& constraints);

// Satisfaction regions for CC under a scoring rule: C (CW absent or co-winning)
// and its almost complement C* (CW present and beaten on score).
struct RegionPair {
    std::vector<Polyhedron> c;
    std::vector<Polyhedron> c_star;
};
RegionPair cc_scoring_regions(const std::vector<long long>& s);

// Activation-graph edge weight: -inf, the symbolic -n/log n sentinel, or a dimension.
struct ActivationWeight {
    enum Kind { NegInf, Sentinel, Dim } kind = NegInf;
    int dim = 0;

    bool operator==(const ActivationWeight&) const = default;
    std::string str() const;
};
bool operator<(const ActivationWeight& x, const ActivationWeight& y);

struct ActivationReport {
    std::vector<char> active, active_star;
    std::vector<int> dims, dims_star;
    ActivationWeight alpha, beta, alpha_star, beta_star;
    Label label = Label::Indeterminate; // infimum side of the categorization
};

// Lattice-point activity on the L1 = n slice. m = 3, n <= 30.
std::vector<char> activity(const std::vector<Polyhedron>& polys, int n, bool parallel = true);

ActivationReport activation_and_case(const std::vector<Polyhedron>& c, const std::vector<Polyhedron>& c_star,
                                     const PreferenceModel& model, int n);

} // namespace vsat
