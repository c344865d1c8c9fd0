#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace vsat {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "7", "-3", "2/5", surrounding blanks. Throws ValidationError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
// Requires an integer value that fits in long long.
long long to_ll(const Rational& q);
int sign(const Rational& q);

std::vector<Rational> to_rationals(const std::vector<long long>& v);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
Rational dot(const std::vector<long long>& a, const std::vector<Rational>& b);

} // namespace vsat
