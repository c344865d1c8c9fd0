#include "vsat/preflib.hpp"
#include "vsat/error.hpp"
#include "vsat/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

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

std::string upper(std::string_view s)
{
    std::string o(s);
    for (auto& c : o)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return o;
}

[[noreturn]] void fail(int line, const std::string& what)
{
    throw ValidationError("line " + std::to_string(line) + ": " + what);
}

long long parse_count(std::string_view s, int line, const char* what)
{
    s = trim(s);
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        fail(line, std::string("expected an integer ") + what + ", got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

struct Line {
    int number;
    std::string_view text;
};

struct RawVote {
    int line;
    long long count;
    std::vector<long long> ids;
};

std::vector<long long> parse_order(std::string_view s, int line)
{
    if (s.find('{') != std::string_view::npos || s.find('}') != std::string_view::npos)
        fail(line, "ties are not allowed in strict complete orders");
    std::vector<long long> ids;
    for (auto tok : split(s, ','))
        ids.push_back(parse_count(tok, line, "alternative id"));
    return ids;
}

// Maps file ids to 1..m; ids declared first keep their declaration order.
struct IdMap {
    std::vector<long long> ids;
    std::map<long long, int> index;

    void add(long long id, int line)
    {
        if (index.count(id))
            fail(line, "alternative " + std::to_string(id) + " declared twice");
        index[id] = static_cast<int>(ids.size()) + 1;
        ids.push_back(id);
    }
};

PreflibRecord finish(PreflibRecord rec, IdMap ids, const std::vector<RawVote>& votes,
                     std::optional<long long> declared_n, std::optional<long long> declared_unique, int header_line)
{
    if (votes.empty())
        throw ValidationError("no votes in SOC data");
    if (ids.ids.empty()) {
        std::vector<long long> seen = votes.front().ids;
        std::sort(seen.begin(), seen.end());
        for (long long id : seen)
            if (!ids.index.count(id))
                ids.add(id, votes.front().line);
    }
    rec.m = static_cast<int>(ids.ids.size());
    if (rec.names.size() < ids.ids.size())
        for (std::size_t i = rec.names.size(); i < ids.ids.size(); ++i)
            rec.names.push_back(std::to_string(ids.ids[i]));
    rec.original_ids = ids.ids;
    rec.profile = Profile(rec.m);
    long long total = 0;
    for (const auto& v : votes) {
        if (v.count < 1)
            fail(v.line, "vote count must be positive");
        if (static_cast<int>(v.ids.size()) != rec.m)
            fail(v.line, "incomplete order: " + std::to_string(v.ids.size()) + " of " + std::to_string(rec.m) +
                             " alternatives ranked");
        std::vector<int> order;
        std::vector<bool> used(rec.m + 1, false);
        for (long long id : v.ids) {
            auto it = ids.index.find(id);
            if (it == ids.index.end())
                fail(v.line, "unknown alternative " + std::to_string(id));
            if (used[it->second])
                fail(v.line, "alternative " + std::to_string(id) + " ranked twice");
            used[it->second] = true;
            order.push_back(it->second);
        }
        rec.profile.add(Ranking(order), v.count);
        total += v.count;
    }
    rec.n = total;
    if (declared_n && *declared_n != total)
        fail(header_line, "declared " + std::to_string(*declared_n) + " voters but the orders sum to " +
                              std::to_string(total));
    if (declared_unique && *declared_unique != static_cast<long long>(votes.size()))
        fail(header_line, "declared " + std::to_string(*declared_unique) + " unique orders but found " +
                              std::to_string(votes.size()));
    return rec;
}

PreflibRecord parse_legacy(const std::vector<Line>& lines, PreflibRecord rec)
{
    std::size_t i = 0;
    const long long m = parse_count(lines[i].text, lines[i].number, "alternative count");
    if (m < 1 || m > 64)
        fail(lines[i].number, "alternative count out of range");
    ++i;
    IdMap ids;
    for (long long k = 0; k < m; ++k, ++i) {
        if (i >= lines.size())
            throw ValidationError("file ends inside the alternative list");
        auto comma = lines[i].text.find(',');
        if (comma == std::string_view::npos)
            fail(lines[i].number, "expected 'id,name'");
        ids.add(parse_count(lines[i].text.substr(0, comma), lines[i].number, "alternative id"), lines[i].number);
        rec.names.emplace_back(trim(lines[i].text.substr(comma + 1)));
    }
    if (i >= lines.size())
        throw ValidationError("file ends before the voter count line");
    auto head = split(lines[i].text, ',');
    const int header_line = lines[i].number;
    if (head.size() != 3)
        fail(header_line, "expected 'voters,sum,unique'");
    const long long n = parse_count(head[0], header_line, "voter count");
    const long long sum = parse_count(head[1], header_line, "count sum");
    const long long unique = parse_count(head[2], header_line, "unique order count");
    if (sum != n)
        fail(header_line, "voter count " + std::to_string(n) + " differs from count sum " + std::to_string(sum));
    ++i;
    std::vector<RawVote> votes;
    for (; i < lines.size(); ++i) {
        auto comma = lines[i].text.find(',');
        if (comma == std::string_view::npos)
            fail(lines[i].number, "expected 'count,order'");
        RawVote v{lines[i].number, parse_count(lines[i].text.substr(0, comma), lines[i].number, "vote count"),
                  parse_order(lines[i].text.substr(comma + 1), lines[i].number)};
        votes.push_back(std::move(v));
    }
    rec.metadata["NUMBER ALTERNATIVES"] = std::to_string(m);
    rec.metadata["NUMBER VOTERS"] = std::to_string(n);
    return finish(std::move(rec), std::move(ids), votes, n, unique, header_line);
}

PreflibRecord parse_current(const std::vector<Line>& lines, PreflibRecord rec)
{
    std::vector<RawVote> votes;
    std::map<long long, std::string> named;
    std::map<long long, int> named_line;
    int header_line = lines.empty() ? 1 : lines.front().number;
    for (const auto& l : lines) {
        if (l.text.front() == '#') {
            auto body = trim(l.text.substr(1));
            auto colon = body.find(':');
            if (colon == std::string_view::npos)
                continue;
            std::string key = upper(trim(body.substr(0, colon)));
            std::string value(trim(body.substr(colon + 1)));
            if (key.rfind("ALTERNATIVE NAME", 0) == 0) {
                long long id = parse_count(std::string_view(key).substr(16), l.number, "alternative id");
                named[id] = value;
                named_line[id] = l.number;
            } else {
                rec.metadata[key] = value;
                if (key == "NUMBER VOTERS")
                    header_line = l.number;
            }
            continue;
        }
        auto colon = l.text.find(':');
        if (colon == std::string_view::npos)
            fail(l.number, "expected 'count: order'");
        votes.push_back({l.number, parse_count(l.text.substr(0, colon), l.number, "vote count"),
                         parse_order(l.text.substr(colon + 1), l.number)});
    }
    if (auto it = rec.metadata.find("DATA TYPE"); it != rec.metadata.end()) {
        std::string t = upper(it->second);
        if (t != "SOC")
            throw ValidationError("data type " + it->second + " is not strict order complete (soc)");
    }
    if (auto it = rec.metadata.find("TITLE"); it != rec.metadata.end())
        rec.title = it->second;
    IdMap ids;
    for (const auto& [id, name] : named) {
        ids.add(id, named_line[id]);
        rec.names.push_back(name);
    }
    auto declared = [&](const char* key) -> std::optional<long long> {
        auto it = rec.metadata.find(key);
        if (it == rec.metadata.end())
            return std::nullopt;
        return parse_count(it->second, header_line, key);
    };
    if (auto m = declared("NUMBER ALTERNATIVES"); m && !named.empty() && *m != static_cast<long long>(named.size()))
        throw ValidationError("declared " + std::to_string(*m) + " alternatives but named " +
                              std::to_string(named.size()));
    return finish(std::move(rec), std::move(ids), votes, declared("NUMBER VOTERS"), declared("NUMBER UNIQUE ORDERS"),
                  header_line);
}

} // namespace

PreflibRecord parse_soc(std::string_view content, std::string source)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        auto pos = content.find('\n', start);
        auto text = trim(content.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        ++number;
        if (!text.empty())
            lines.push_back({number, text});
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    if (lines.empty())
        throw ValidationError("empty SOC data");
    PreflibRecord rec;
    rec.source = std::move(source);
    const bool has_meta = std::any_of(lines.begin(), lines.end(), [](const Line& l) { return l.text.front() == '#'; });
    const auto& first = lines.front().text;
    const bool legacy = !has_meta && first.find(',') == std::string_view::npos && first.find(':') == std::string_view::npos;
    return legacy ? parse_legacy(lines, std::move(rec)) : parse_current(lines, std::move(rec));
}

PreflibRecord read_soc_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_soc(ss.str(), path.string());
    } catch (const ValidationError& e) {
        throw ValidationError(path.filename().string() + ": " + e.what());
    }
}

std::string format_soc(const PreflibRecord& rec)
{
    std::ostringstream o;
    const std::string file = rec.source.empty() ? "profile.soc" : std::filesystem::path(rec.source).filename().string();
    o << "# FILE NAME: " << file << "\n";
    if (!rec.title.empty())
        o << "# TITLE: " << rec.title << "\n";
    o << "# DATA TYPE: soc\n";
    o << "# NUMBER ALTERNATIVES: " << rec.m << "\n";
    o << "# NUMBER VOTERS: " << to_string(rec.profile.total()) << "\n";
    o << "# NUMBER UNIQUE ORDERS: " << rec.profile.distinct() << "\n";
    for (int a = 1; a <= rec.m; ++a)
        o << "# ALTERNATIVE NAME " << a << ": "
          << (a - 1 < static_cast<int>(rec.names.size()) ? rec.names[a - 1] : std::to_string(a)) << "\n";
    std::vector<std::pair<Rational, Ranking>> rows;
    for (const auto& [r, w] : rec.profile.entries())
        rows.push_back({w, r});
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [w, r] : rows) {
        o << to_string(w) << ":";
        for (int i = 0; i < r.m(); ++i)
            o << (i ? "," : " ") << r.at(i);
        o << "\n";
    }
    return o.str();
}

double CorpusCell::percent() const
{
    return evaluated ? 100.0 * static_cast<double>(satisfied) / static_cast<double>(evaluated) : std::nan("");
}

bool CorpusReport::any_skipped() const
{
    if (!unreadable.empty())
        return true;
    return std::any_of(cells.begin(), cells.end(), [](const CorpusCell& c) { return c.skipped > 0; });
}

std::vector<FileVerdict> evaluate_record(const PreflibRecord& rec, const CorpusOptions& opt)
{
    std::vector<FileVerdict> out;
    for (const auto& rule : opt.rules)
        for (Axiom axiom : opt.axioms) {
            FileVerdict v;
            v.file = rec.source;
            v.m = rec.m;
            v.n = rec.n;
            v.rule = to_string(rule);
            v.axiom = axiom;
            EvalOptions eo;
            eo.resolute_cc = opt.resolute_cc;
            eo.put = opt.put;
            try {
                eo.tiebreak = opt.tiebreak && static_cast<int>(opt.tiebreak->size()) == rec.m
                                  ? TieBreakOrder{*opt.tiebreak}
                                  : TieBreakOrder::identity(rec.m);
                v.verdict = evaluate_axiom(axiom, rule, rec.profile, eo);
            } catch (const BoundExceeded& e) {
                // A Condorcet-consistent rule elects the Condorcet winner whenever
                // there is one, so CC needs no winner computation.
                if ((axiom == Axiom::CC || axiom == Axiom::CCStar) && rule.condorcet_consistent())
                    v.verdict = AxiomVerdict{};
                else
                    v.skipped = e.what();
            } catch (const ValidationError& e) {
                v.skipped = e.what();
            }
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<CorpusCell> aggregate(const std::vector<FileVerdict>& verdicts, const CorpusOptions& opt)
{
    std::vector<CorpusCell> cells;
    for (Axiom axiom : opt.axioms)
        for (const auto& rule : opt.rules) {
            CorpusCell c;
            c.rule = to_string(rule);
            c.axiom = axiom;
            for (const auto& v : verdicts) {
                if (v.rule != c.rule || v.axiom != axiom)
                    continue;
                if (!v.verdict) {
                    ++c.skipped;
                    continue;
                }
                ++c.evaluated;
                c.satisfied += v.verdict->satisfied;
            }
            cells.push_back(c);
        }
    return cells;
}

CorpusReport evaluate_corpus(const std::vector<PreflibRecord>& records, const CorpusOptions& opt)
{
    if (records.empty())
        throw ValidationError("empty corpus");
    std::vector<std::vector<FileVerdict>> per(records.size());
    std::vector<std::string> errors(records.size());
    const long long count = static_cast<long long>(records.size());
    auto one = [&](long long i) {
        try {
            per[i] = evaluate_record(records[i], opt);
        } catch (const std::exception& e) {
            errors[i] = records[i].source + ": " + e.what();
        }
    };
    if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i)
            one(i);
    } else {
        for (long long i = 0; i < count; ++i)
            one(i);
    }
    CorpusReport r;
    r.files = count;
    for (long long i = 0; i < count; ++i) {
        if (!errors[i].empty())
            r.unreadable.push_back(errors[i]);
        for (auto& v : per[i])
            r.verdicts.push_back(std::move(v));
    }
    r.cells = aggregate(r.verdicts, opt);
    return r;
}

CorpusReport evaluate_corpus(const std::filesystem::path& dir, const CorpusOptions& opt)
{
    if (!std::filesystem::is_directory(dir))
        throw ValidationError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".soc")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<PreflibRecord> records;
    std::vector<std::string> unreadable;
    for (const auto& f : files) {
        try {
            records.push_back(read_soc_file(f));
            records.back().source = f.filename().string();
        } catch (const ValidationError& e) {
            unreadable.push_back(e.what());
        }
    }
    if (records.empty())
        throw ValidationError("no readable .soc files in " + dir.string());
    CorpusReport r = evaluate_corpus(records, opt);
    r.files += static_cast<long long>(unreadable.size());
    r.unreadable.insert(r.unreadable.begin(), unreadable.begin(), unreadable.end());
    return r;
}

std::string corpus_csv(const CorpusReport& r)
{
    std::vector<std::string> rules;
    std::vector<Axiom> axioms;
    for (const auto& c : r.cells) {
        if (std::find(rules.begin(), rules.end(), c.rule) == rules.end())
            rules.push_back(c.rule);
        if (std::find(axioms.begin(), axioms.end(), c.axiom) == axioms.end())
            axioms.push_back(c.axiom);
    }
    std::ostringstream o;
    o << "axiom";
    for (const auto& rule : rules)
        o << ',' << rule;
    o << '\n';
    char buf[32];
    for (Axiom a : axioms) {
        o << to_string(a);
        for (const auto& rule : rules) {
            auto it = std::find_if(r.cells.begin(), r.cells.end(),
                                   [&](const CorpusCell& c) { return c.axiom == a && c.rule == rule; });
            if (it->evaluated == 0) {
                o << ",";
                continue;
            }
            std::snprintf(buf, sizeof buf, "%.1f", it->percent());
            o << ',' << buf;
        }
        o << '\n';
    }
    return o.str();
}

std::string corpus_jsonl(const CorpusReport& r)
{
    std::ostringstream o;
    for (const auto& v : r.verdicts) {
        Json j = {{"file", v.file}, {"m", v.m}, {"n", v.n}};
        if (v.verdict) {
            Json body = verdict_json(v.axiom, parse_rule(v.rule), *v.verdict);
            for (auto& [k, val] : body.items())
                j[k] = val;
        } else {
            j["axiom"] = to_string(v.axiom);
            j["rule"] = v.rule;
            j["satisfied"] = nullptr;
            j["skipped"] = v.skipped;
        }
        o << j.dump() << '\n';
    }
    for (const auto& u : r.unreadable)
        o << Json{{"unreadable", u}}.dump() << '\n';
    return o.str();
}

} // namespace vsat
