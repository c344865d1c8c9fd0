#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace vsat::cli {

struct ExperimentConfig {
    std::string command;
    std::vector<std::string> rules;
    std::vector<std::string> axioms;
    std::string model_file;
    int ic_m = 0;
    std::vector<long long> n;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string parity = "even";
    std::string tiebreak;
    std::string out;
    std::string format;
    int jobs = 0;

    std::string profile_file; // evaluate
    std::string dir;          // corpus
    std::string audit;        // corpus JSON-lines path
    bool resolute_cc = false;
    std::string family; // construct
    int m = 0;
    int a = 1, b = 2; // construct gap
    bool serial = false;

    void validate() const;
};

// Each command writes only to out and returns the process exit code.
int cmd_evaluate(const ExperimentConfig& c, std::ostream& out);
int cmd_classify(const ExperimentConfig& c, std::ostream& out);
int cmd_estimate(const ExperimentConfig& c, std::ostream& out);
int cmd_sweep(const ExperimentConfig& c, std::ostream& out);
int cmd_corpus(const ExperimentConfig& c, std::ostream& out);
int cmd_construct(const ExperimentConfig& c, std::ostream& out);

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBound = 3;

} // namespace vsat::cli
