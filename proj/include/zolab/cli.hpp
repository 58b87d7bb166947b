#pragma once

// Command-line front end: name resolution, config files, presets.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zolab/estimator.hpp"
#include "zolab/probseq.hpp"

namespace zolab::cli {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitThresholdFail = 2;

// Accepts inline JSON ("{...}"), "@path" or a path to a JSON file, or a named
// sequence such as "constant:0.5", "ones_powers:4", "random_binary:7",
// "thm6_half", "thm1_default", "thm2_default", "example2_default",
// "thm3_default", "lemma_edge".
ProbSeq resolve_sequence(const std::string& spec);
std::vector<std::string> named_sequences();

// Library names ("triangle", "extension_Ak:2"), native predicates
// ("psi:<f_r>", "kclique:<l>", "copies:<c>", "triangle_native",
// "ex2_path4_native") or a
// formula "fo:<text>" parsed in `vocab` (default L_PLUS for fo:, the
// sentence's own vocabulary for library names).
Target resolve_target(const std::string& spec, std::optional<Vocabulary> vocab = std::nullopt);

std::vector<int> parse_int_list(const std::string& text);

struct ExperimentConfig {
    std::optional<std::string> preset;
    std::string sequence;
    std::string target;
    ModelKind model_kind = ModelKind::Line;
    std::vector<int> n_list;
    std::optional<std::uint64_t> trials;  // 1000 for explicit runs when unset
    std::uint64_t master_seed = 1;
    std::string output;
    std::optional<Vocabulary> vocab;
};

// "key = value" lines, '#' starts a comment. Throws InvalidArgument with the
// offending line number.
ExperimentConfig parse_config(const std::string& text);

// Rows for an explicit config. trials = 0 selects an exact oracle:
// exact_path2 for path2 on the line, exact_triangle_circle for triangle on
// the circle, brute force otherwise.
std::vector<EstimateResult> run_experiment(const ExperimentConfig& config);

void write_rows(std::ostream& out, const std::vector<EstimateResult>& rows, bool json);

struct PresetInfo {
    std::string name;
    std::string anchor;
};
const std::vector<PresetInfo>& presets();

struct PresetOptions {
    std::uint64_t master_seed = 1;
    std::filesystem::path out_dir = "out";
    std::uint64_t trials = 0;  // 0 keeps the preset default
};

// Writes <out_dir>/<name>.csv and <out_dir>/<name>.json and prints a summary.
// Returns kExitOk, or kExitThresholdFail when a check fails. Throws
// InvalidArgument for an unknown preset.
int run_preset(const std::string& name, const PresetOptions& options, std::ostream& log);

// Full command line; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zolab::cli
