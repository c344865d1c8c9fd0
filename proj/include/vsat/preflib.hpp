#pragma once

#include "vsat/axioms.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vsat {

struct PreflibRecord {
    std::string source;
    std::string title;
    std::map<std::string, std::string> metadata; // "# KEY: value" lines, keys upper-cased
    int m = 0;
    long long n = 0;
    Profile profile;
    std::vector<std::string> names;    // names[i] belongs to alternative i+1
    std::vector<long long> original_ids; // file id of alternative i+1
};

// Legacy (counts header) or current ("# KEY: value", "count: a,b,c") SOC text.
PreflibRecord parse_soc(std::string_view content, std::string source = {});
PreflibRecord read_soc_file(const std::filesystem::path& path);
// Current format.
std::string format_soc(const PreflibRecord& rec);

struct CorpusOptions {
    std::vector<RuleSpec> rules;
    std::vector<Axiom> axioms;
    std::optional<std::vector<int>> tiebreak; // priority over 1..m; identity when absent
    bool resolute_cc = false;
    PutOptions put;
    bool parallel = true;
};

struct FileVerdict {
    std::string file;
    int m = 0;
    long long n = 0;
    std::string rule;
    Axiom axiom = Axiom::CC;
    std::optional<AxiomVerdict> verdict; // empty when skipped
    std::string skipped;                 // reason
};

struct CorpusCell {
    std::string rule;
    Axiom axiom = Axiom::CC;
    long long satisfied = 0;
    long long evaluated = 0;
    long long skipped = 0;
    double percent() const;
};

struct CorpusReport {
    std::vector<FileVerdict> verdicts; // file-major, then rule, then axiom
    std::vector<CorpusCell> cells;     // axiom-major, then rule
    std::vector<std::string> unreadable;
    long long files = 0;
    bool any_skipped() const;
};

// One record's verdicts in rule/axiom order.
std::vector<FileVerdict> evaluate_record(const PreflibRecord& rec, const CorpusOptions& opt);
CorpusReport evaluate_corpus(const std::vector<PreflibRecord>& records, const CorpusOptions& opt);
// Reads every *.soc file (sorted by name); unparsable files go to unreadable.
CorpusReport evaluate_corpus(const std::filesystem::path& dir, const CorpusOptions& opt);
// Recomputes the cells from the verdict list.
std::vector<CorpusCell> aggregate(const std::vector<FileVerdict>& verdicts, const CorpusOptions& opt);

// axiom,<rule>,... rows with percentages to one decimal.
std::string corpus_csv(const CorpusReport& r);
std::string corpus_jsonl(const CorpusReport& r);

} // namespace vsat
