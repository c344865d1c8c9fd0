#include "vsat/rational.hpp"
#include "vsat/error.hpp"

#include <cctype>
#include <limits>

namespace vsat {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool valid_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_text(s))
            throw ValidationError("not a rational number: '" + std::string(text) + "'");
        return Rational(parse_integer(s));
    }
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!valid_integer_text(num) || !valid_integer_text(den))
        throw ValidationError("not a rational number: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& q)
{
    return q.str();
}

bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

long long to_ll(const Rational& q)
{
    if (!is_integer(q))
        throw ValidationError("expected an integer, got " + q.str());
    Integer n = boost::multiprecision::numerator(q);
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw BoundExceeded("integer out of 64-bit range: " + n.str());
    return n.convert_to<long long>();
}

int sign(const Rational& q)
{
    return q.sign();
}

std::vector<Rational> to_rationals(const std::vector<long long>& v)
{
    return std::vector<Rational>(v.begin(), v.end());
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

Rational dot(const std::vector<long long>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

} // namespace vsat
