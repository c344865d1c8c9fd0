#include "vsat/profile.hpp"
#include "vsat/error.hpp"

#include <sstream>

namespace vsat {

Rational Histogram::l1() const
{
    Rational s = 0;
    for (const auto& e : entries)
        s += abs(e);
    return s;
}

Profile::Profile(int m) : m_(m)
{
    if (m < 0)
        throw ValidationError("negative alternative count");
}

Profile Profile::fractional(int m)
{
    Profile p(m);
    p.fractional_ = true;
    return p;
}

Profile Profile::from_histogram(const Histogram& h, bool fractional_mode)
{
    Profile p = fractional_mode ? fractional(h.m) : Profile(h.m);
    for (std::size_t i = 0; i < h.entries.size(); ++i)
        if (h.entries[i] != 0)
            p.add(Ranking::from_index(h.m, i), h.entries[i]);
    return p;
}

Profile Profile::from_table_columns(const std::vector<Rational>& w)
{
    if (w.size() != 6)
        throw ValidationError("table column order needs 6 weights");
    Profile p(3);
    for (std::size_t i = 0; i < 6; ++i)
        p.add(table_columns_m3()[i], w[i]);
    return p;
}

Profile Profile::uniform(int m)
{
    Profile p(m);
    Rational w(1, static_cast<long long>(factorial(m)));
    for (const auto& r : all_rankings(m))
        p.add(r, w);
    return p;
}

void Profile::add(const Ranking& r, const Rational& w)
{
    if (r.m() != m_)
        throw ValidationError("ranking over " + std::to_string(r.m()) + " alternatives added to a profile over " +
                              std::to_string(m_));
    if (w == 0)
        return;
    auto it = weights_.find(r);
    Rational nw = (it == weights_.end()) ? w : it->second + w;
    if (!fractional_ && nw < 0)
        throw ValidationError("negative weight for " + r.str());
    total_ += w;
    if (nw == 0) {
        if (it != weights_.end())
            weights_.erase(it);
    } else if (it == weights_.end()) {
        weights_.emplace(r, nw);
    } else {
        it->second = nw;
    }
}

Rational Profile::weight(const Ranking& r) const
{
    auto it = weights_.find(r);
    return it == weights_.end() ? Rational(0) : it->second;
}

bool Profile::is_integer() const
{
    for (const auto& [r, w] : weights_)
        if (!vsat::is_integer(w))
            return false;
    return true;
}

bool Profile::is_nonnegative() const
{
    for (const auto& [r, w] : weights_)
        if (w < 0)
            return false;
    return true;
}

void Profile::require_integer(const char* what) const
{
    if (!is_integer() || !is_nonnegative())
        throw ValidationError(std::string(what) + " needs an integer profile");
}

Profile Profile::operator+(const Profile& o) const
{
    if (o.m_ != m_)
        throw ValidationError("adding profiles over different alternative counts");
    Profile p = *this;
    p.fractional_ = fractional_ || o.fractional_;
    for (const auto& [r, w] : o.weights_)
        p.add(r, w);
    return p;
}

Profile Profile::scaled(const Rational& c) const
{
    Profile p = (fractional_ || c < 0) ? fractional(m_) : Profile(m_);
    for (const auto& [r, w] : weights_)
        p.add(r, w * c);
    return p;
}

Profile Profile::minus(const Ranking& r, const Rational& w) const
{
    Profile p = *this;
    p.add(r, -w);
    return p;
}

Profile Profile::relabeled(const std::vector<int>& sigma) const
{
    Profile p = fractional_ ? fractional(m_) : Profile(m_);
    for (const auto& [r, w] : weights_)
        p.add(r.relabeled(sigma), w);
    return p;
}

Histogram histogram(const Profile& p)
{
    if (p.m() > 10)
        throw BoundExceeded("dense histogram needs m <= 10");
    Histogram h;
    h.m = p.m();
    h.entries.assign(factorial(p.m()), Rational(0));
    for (const auto& [r, w] : p.entries())
        h.entries[r.index()] = w;
    return h;
}

Profile restrict(const Profile& p, const AltSet& alive)
{
    if (alive.empty())
        throw ValidationError("restriction to an empty alternative set");
    Profile q = p.fractional_mode() ? Profile::fractional(static_cast<int>(alive.size()))
                                    : Profile(static_cast<int>(alive.size()));
    for (const auto& [r, w] : p.entries())
        q.add(r.restricted(alive), w);
    return q;
}

Histogram project_histogram(const Histogram& h, const AltSet& alive)
{
    if (alive.empty())
        throw ValidationError("restriction to an empty alternative set");
    Histogram out;
    out.m = static_cast<int>(alive.size());
    out.entries.assign(factorial(out.m), Rational(0));
    for (std::size_t i = 0; i < h.entries.size(); ++i)
        if (h.entries[i] != 0)
            out.entries[Ranking::from_index(h.m, i).restricted(alive).index()] += h.entries[i];
    return out;
}

Profile parse_profile_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<std::pair<Ranking, Rational>> rows;
    int m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ValidationError("line " + std::to_string(lineno) + ": expected '<weight>: a1>a2>...'");
        try {
            Rational w = parse_rational(std::string_view(line).substr(0, colon));
            Ranking r = Ranking::parse(std::string_view(line).substr(colon + 1));
            if (m < 0)
                m = r.m();
            else if (r.m() != m)
                throw ValidationError("inconsistent number of alternatives");
            rows.emplace_back(std::move(r), std::move(w));
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (m < 0)
        throw ValidationError("profile text contains no rankings");
    bool negative = false;
    for (const auto& row : rows)
        negative = negative || row.second < 0;
    Profile p = negative ? Profile::fractional(m) : Profile(m);
    for (const auto& [r, w] : rows)
        p.add(r, w);
    return p;
}

std::string format_profile_text(const Profile& p)
{
    std::ostringstream out;
    for (const auto& [r, w] : p.entries())
        out << to_string(w) << ": " << r.str() << "\n";
    return out.str();
}

} // namespace vsat
