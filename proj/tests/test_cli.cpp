#include "support.hpp"

#include "vsat/axioms.hpp"
#include "vsat/majority.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace vsat;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = VSAT_FIXTURES;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(VSAT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0)
        r.out.append(buf, k);
    const int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fx(const std::string& rel)
{
    return (kFixtures / rel).string();
}

std::vector<std::string> lines_of(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

std::vector<std::string> csv_split(const std::string& line)
{
    std::vector<std::string> out(1);
    bool quoted = false;
    for (char c : line) {
        if (c == '"')
            quoted = !quoted;
        else if (c == ',' && !quoted)
            out.emplace_back();
        else
            out.back() += c;
    }
    return out;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("evaluate")
{
    auto r = run("evaluate --rule plurality --axiom CC --profile " + fx("profiles/cc_plurality_corrected.txt"));
    CHECK(r.code == 0);
    CHECK(r.out == "rule=plurality axiom=cc satisfied=false alternative=2\n");

    r = run("evaluate --rule plurality --rule black --axiom CC --profile " + fx("profiles/cc_plurality_corrected.txt"));
    CHECK(lines_of(r.out).size() == 2);
    CHECK(lines_of(r.out)[1] == "rule=black axiom=cc satisfied=true");

    r = run("evaluate --rule maximin --axiom Par --format json --profile " + fx("constructions/maximin-m4-n58.txt"));
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(lines_of(r.out).front());
    CHECK(j["satisfied"] == false);

    r = run("evaluate --rule stv --axiom CC --profile " + fx("preflib/mini-08.soc"));
    CHECK(r.code == 0);
    CHECK(r.out.find("satisfied=false") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("evaluate --rule nonsense --axiom CC --profile " + fx("profiles/pi_hat.txt")).code == 2);
    CHECK(run("evaluate --rule plurality --axiom CC --profile /nonexistent.txt").code == 2);
    CHECK(run("estimate --rule plurality --axiom CC --ic 3 --n 10 --trials 0").code == 2);
    CHECK(run("estimate --rule plurality --axiom CC --n 10 --trials 5").code == 2);
    CHECK(run("estimate --rule plurality --axiom CC --ic 3 --model x.json --n 10 --trials 5").code == 2);
    CHECK(run("construct --family gap --rule plurality --m 3 --n 10").code == 2);
    CHECK(run("construct --family maximin --m 4 --n 3").code == 2);

    const fs::path bad = fs::temp_directory_path() / "vsat_cli_bad.txt";
    std::ofstream(bad) << "3: 1>2>3\nx: 2>1>3\n";
    CHECK(run("evaluate --rule plurality --axiom CC --profile " + bad.string()).code != 0);
    fs::remove(bad);

    // PUT guard at m = 9
    const fs::path big = fs::temp_directory_path() / "vsat_cli_big.txt";
    std::ofstream(big) << "1: 1>2>3>4>5>6>7>8>9\n1: 9>8>7>6>5>4>3>2>1\n";
    CHECK(run("evaluate --rule stv --axiom CC --profile " + big.string()).code == 3);
    fs::remove(big);
}

TEST_CASE("estimate is reproducible and echoes its seed")
{
    const std::string args = "estimate --rule borda --axiom CC --ic 4 --n 21 --n 40 --trials 400 --seed 1234";
    const auto a = run(args);
    REQUIRE(a.code == 0);
    const auto rows = lines_of(a.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "rule,axiom,model,n,trials,seed,estimate,ci_lo,ci_hi");
    const auto f = csv_split(rows[1]);
    CHECK(f[0] == "borda");
    CHECK(f[2] == "ic4");
    CHECK(f[3] == "21");
    CHECK(f[4] == "400");
    CHECK(f[5] == "1234");
    CHECK(std::stod(f[7]) <= std::stod(f[6]));
    CHECK(std::stod(f[6]) <= std::stod(f[8]));

    CHECK(run(args).out == a.out);
    CHECK(run(args + " --serial").out == a.out);
    CHECK(run(args + " --jobs 2").out == a.out);
    CHECK(run("estimate --rule borda --axiom CC --ic 4 --n 21 --n 40 --trials 400 --seed 1235").out != a.out);

    const auto js = run(args + " --format json");
    const auto j = nlohmann::json::parse(lines_of(js.out).front());
    CHECK(j["seed"] == 1234);
    CHECK(j["n"] == 21);

    const auto model = run("estimate --rule plurality --axiom CC --model " + fx("models/straddle.json") +
                           " --n 60 --trials 200 --seed 3");
    CHECK(model.code == 0);
    CHECK(csv_split(lines_of(model.out)[1])[2] == "straddle");
}

TEST_CASE("classify")
{
    auto r = run("classify --rule plurality --axiom CC --model " + fx("models/pi2.json") + " --parity even");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["label"] == "VeryLikely");

    r = run("classify --rule plurality --axiom CC --model " + fx("models/acw_unlikely.json") + " --parity odd");
    j = nlohmann::json::parse(r.out);
    CHECK(j["label"] == "VeryUnlikely");
    CHECK(j.contains("witness"));

    r = run("classify --rule maximin --axiom Par --ic 4");
    j = nlohmann::json::parse(r.out);
    CHECK(j["label"] == "Likely");

    CHECK(run("classify --rule plurality --axiom CL --ic 3").code == 2);
}

TEST_CASE("sweep resumes from its checkpoint")
{
    const fs::path out = fs::temp_directory_path() / "vsat_cli_sweep.csv";
    fs::remove(out);
    const std::string base = "sweep --rule plurality --axiom CC --ic 3 --trials 200 --seed 9 --out " + out.string();
    auto r = run(base + " --n 10 --n 20");
    REQUIRE(r.code == 0);
    CHECK(lines_of(slurp(out)).size() == 3);
    const std::string first = slurp(out);

    r = run(base + " --n 10 --n 20 --n 30");
    CHECK(r.out.find("1 new rows, 2 resumed") != std::string::npos);
    const auto rows = lines_of(slurp(out));
    CHECK(rows.size() == 4);
    CHECK(slurp(out).rfind(first, 0) == 0);
    fs::remove(out);
}

TEST_CASE("corpus")
{
    auto r = run("corpus --rule plurality --rule borda --axiom CC --dir " + fx("preflib"));
    CHECK(r.code == 0);
    CHECK(lines_of(r.out).size() == 2);
    CHECK(lines_of(r.out)[1].find(",70.0,80.0") != std::string::npos);

    const fs::path dir = fs::temp_directory_path() / "vsat_cli_corpus";
    fs::create_directories(dir);
    fs::copy_file(kFixtures / "preflib/mini-02.soc", dir / "a.soc", fs::copy_options::overwrite_existing);
    std::ofstream(dir / "b.soc") << "broken\n";
    r = run("corpus --rule plurality --axiom CC --dir " + dir.string());
    CHECK(r.code == 3);
    fs::remove_all(dir);
}

TEST_CASE("construct output matches the committed fixtures")
{
    auto r = run("construct --family maximin --m 4 --n 58");
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(kFixtures / "constructions/maximin-m4-n58.txt"));

    r = run("construct --family black --m 4 --n 1058 --format json");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["winner_before"] == 2);
    CHECK(j["winner_after"] == 1);
}

TEST_CASE("construction fixtures re-verify")
{
    const auto rows = lines_of(slurp(kFixtures / "constructions/manifest.csv"));
    REQUIRE(rows.size() == 14);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = csv_split(rows[i]);
        INFO(rows[i]);
        const Profile p = parse_profile_text(slurp(kFixtures / "constructions" / f[0]));
        CHECK(p.total() == std::stoll(f[3]));
        CHECK(p.m() == std::stoi(f[2]));
        const auto votes = vt::expand(p);
        const int m = p.m();
        if (f[1].rfind("gap:", 0) == 0) {
            const RuleSpec rule = parse_rule(f[1].substr(4));
            CHECK(vt::naive_cw(m, votes) == 1);
            CHECK(vt::naive_scoring_winners(m, votes, rule.scoring_vector(m)) == std::vector<int>{std::stoi(f[4])});
            continue;
        }
        const RuleSpec rule = parse_rule(f[1]);
        const auto tb = TieBreakOrder::identity(m);
        const Ranking abstainer = Ranking::parse(f[7]);
        const int before = std::stoi(f[5]), after = std::stoi(f[6]);
        CHECK(resolve(rule, p, tb) == before);
        CHECK(resolve(rule, p.minus(abstainer), tb) == after);
        CHECK(abstainer.prefers(after, before));
        CHECK_FALSE(sat_par(rule, p, tb).satisfied);
    }
}
