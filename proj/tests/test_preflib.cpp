#include "support.hpp"

#include "vsat/error.hpp"
#include "vsat/preflib.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>

using namespace vsat;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(VSAT_FIXTURES) / "preflib";

std::string error_of(std::string_view text)
{
    try {
        parse_soc(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

CorpusOptions manifest_options()
{
    CorpusOptions opt;
    for (const char* r : {"plurality", "borda", "veto", "stv", "maximin", "copeland:1/2", "black", "schulze",
                          "rankedpairs"})
        opt.rules.push_back(parse_rule(r));
    opt.axioms = {Axiom::CC, Axiom::Par};
    return opt;
}

} // namespace

TEST_CASE("minimal current-format file")
{
    const auto rec = parse_soc("2: 1,2,3\n1: 3,2,1\n");
    CHECK(rec.m == 3);
    CHECK(rec.n == 3);
    CHECK(rec.profile.weight(Ranking({1, 2, 3})) == 2);
    CHECK(rec.profile.weight(Ranking({3, 2, 1})) == 1);
    CHECK(rec.profile.distinct() == 2);
}

TEST_CASE("legacy format with sparse ids")
{
    const char* text = "3\n7,alpha\n3,beta\n9,gamma\n5,5,2\n4,9,7,3\n1,3,9,7\n";
    const auto rec = parse_soc(text);
    CHECK(rec.m == 3);
    CHECK(rec.n == 5);
    CHECK(rec.names == std::vector<std::string>{"alpha", "beta", "gamma"});
    CHECK(rec.original_ids == std::vector<long long>{7, 3, 9});
    // ids map to 1..m in file order
    CHECK(rec.profile.weight(Ranking({3, 1, 2})) == 4);
    CHECK(rec.profile.weight(Ranking({2, 3, 1})) == 1);
}

TEST_CASE("metadata")
{
    const char* text = "# FILE NAME: x.soc\n# TITLE: A Title\n# DATA TYPE: soc\n# NUMBER ALTERNATIVES: 3\n"
                       "# NUMBER VOTERS: 4\n# NUMBER UNIQUE ORDERS: 2\n# ALTERNATIVE NAME 1: a\n"
                       "# ALTERNATIVE NAME 2: b\n# ALTERNATIVE NAME 3: c\n3: 2,1,3\n1: 1,3,2\n";
    const auto rec = parse_soc(text, "x.soc");
    CHECK(rec.title == "A Title");
    CHECK(rec.metadata.at("DATA TYPE") == "soc");
    CHECK(rec.names == std::vector<std::string>{"a", "b", "c"});
    CHECK(rec.source == "x.soc");
}

TEST_CASE("rejections carry line numbers")
{
    CHECK(error_of("2: 1,2,3\n1: 3,2\n").find("line 2") != std::string::npos);
    CHECK(error_of("2: 1,2,3\n1: {3,2},1\n").find("line 2") != std::string::npos);
    CHECK(error_of("2: 1,2,3\n1: 3,3,1\n").find("line 2") != std::string::npos);
    CHECK(error_of("1: 1,2,3\n1: 3,2,1\n1: 1,2,4\n").find("line 3") != std::string::npos);
    CHECK_FALSE(error_of("# NUMBER VOTERS: 5\n2: 1,2,3\n2: 3,2,1\n").empty());
    CHECK_FALSE(error_of("3\n1,a\n2,b\n3,c\n5,5,2\n2,1,2,3\n2,3,2,1\n").empty());
    CHECK_FALSE(error_of("3\n1,a\n2,b\n3,c\n4,5,2\n2,1,2,3\n2,3,2,1\n").empty());
    CHECK_FALSE(error_of("# DATA TYPE: toc\n1: 1,2,3\n").empty());
    CHECK_FALSE(error_of("").empty());
    CHECK_FALSE(error_of("0: 1,2,3\n").empty());
}

TEST_CASE("property: parse, format, parse is the identity")
{
    std::mt19937_64 rng(91);
    for (int it = 0; it < 300; ++it) {
        const int m = 2 + static_cast<int>(rng() % 5);
        PreflibRecord rec;
        rec.m = m;
        rec.profile = vt::to_profile(m, vt::clustered_votes(m, 1 + static_cast<int>(rng() % 40), rng));
        rec.n = static_cast<long long>(rec.profile.total());
        rec.title = "t" + std::to_string(it);
        const auto back = parse_soc(format_soc(rec));
        REQUIRE(back.profile == rec.profile);
        REQUIRE(back.n == rec.n);
        REQUIRE(back.title == rec.title);
        REQUIRE(parse_soc(format_soc(back)).profile == back.profile);
    }
}

TEST_CASE("files on disk reconcile with their declared totals")
{
    int files = 0;
    for (const auto& e : fs::directory_iterator(kCorpus)) {
        if (e.path().extension() != ".soc")
            continue;
        const auto rec = read_soc_file(e.path());
        CHECK(rec.profile.total() == rec.n);
        CHECK(rec.profile.is_integer());
        ++files;
    }
    CHECK(files == 10);
    CHECK_THROWS_AS(read_soc_file(kCorpus / "missing.soc"), ValidationError);
}

TEST_CASE("mini-corpus verdicts match the manifest")
{
    std::ifstream in(kCorpus / "manifest.json");
    REQUIRE(in);
    const auto manifest = nlohmann::json::parse(in);
    REQUIRE(manifest.size() == 10);

    for (bool parallel : {false, true}) {
        auto opt = manifest_options();
        opt.parallel = parallel;
        const auto rep = evaluate_corpus(kCorpus, opt);
        CHECK(rep.files == 10);
        CHECK(rep.unreadable.empty());
        CHECK_FALSE(rep.any_skipped());

        std::map<std::string, bool> got;
        for (const auto& v : rep.verdicts) {
            REQUIRE(v.verdict);
            got[fs::path(v.file).filename().string() + "|" + to_string(v.axiom) + "/" + v.rule] = v.verdict->satisfied;
        }
        std::map<std::string, std::pair<long long, long long>> tally;
        for (const auto& f : manifest) {
            const auto rec = read_soc_file(kCorpus / f["file"].get<std::string>());
            CHECK(rec.m == f["m"].get<int>());
            CHECK(rec.n == f["n"].get<long long>());
            for (const auto& [key, sat] : f["verdicts"].items()) {
                const auto slash = key.find('/');
                const Axiom ax = key.substr(0, slash) == "CC" ? Axiom::CC : Axiom::Par;
                const std::string cell = to_string(ax) + "/" + to_string(parse_rule(key.substr(slash + 1)));
                const std::string k = f["file"].get<std::string>() + "|" + cell;
                INFO(k);
                REQUIRE(got.count(k));
                CHECK(got[k] == sat.get<bool>());
                tally[cell].first += sat.get<bool>();
                tally[cell].second += 1;
            }
        }
        // percentages recompute from the per-file verdicts
        for (const auto& c : rep.cells) {
            const auto& [s, n] = tally[to_string(c.axiom) + "/" + c.rule];
            if (n == 0)
                continue; // CC for ranked pairs has no oracle entry
            CHECK(c.satisfied == s);
            CHECK(c.evaluated == n);
        }
        CHECK(aggregate(rep.verdicts, opt).size() == rep.cells.size());
    }
}

TEST_CASE("corpus output")
{
    auto opt = manifest_options();
    opt.rules.resize(2);
    opt.axioms = {Axiom::CC};
    const auto rep = evaluate_corpus(kCorpus, opt);
    // plurality fails CC in three files, Borda in two
    CHECK(corpus_csv(rep) == "axiom,plurality,borda\n" + to_string(Axiom::CC) + ",70.0,80.0\n");
    const auto lines = corpus_jsonl(rep);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 20);

    CHECK_THROWS_AS(evaluate_corpus(std::vector<PreflibRecord>{}, opt), ValidationError);

    const fs::path tmp = fs::temp_directory_path() / "vsat_bad_corpus";
    fs::create_directories(tmp);
    fs::copy_file(kCorpus / "mini-01.soc", tmp / "a.soc", fs::copy_options::overwrite_existing);
    std::ofstream(tmp / "b.soc") << "1: 1,2\n2: 1,2,3\n";
    const auto bad = evaluate_corpus(tmp, opt);
    CHECK(bad.files == 2);
    CHECK(bad.verdicts.size() == 2);
    CHECK(bad.unreadable.size() == 1);
    CHECK(bad.any_skipped());
    fs::remove_all(tmp);
}
