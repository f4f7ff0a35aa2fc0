#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cohortforge/baseline.hpp"
#include "cohortforge/dates.hpp"
#include "cohortforge/labeler.hpp"
#include "cohortforge/synthgen.hpp"
#include "cohortforge/vector_merger.hpp"

namespace cohortforge {

/// Everything a run needs, loaded from one INI-style file. Relative paths
/// resolve against the config file's directory; the five resource files
/// must exist at load time.
struct PipelineConfig {
    // [paths]
    std::string schema_path;
    std::string lexicon_path;
    std::string patterns_path;
    std::string code_map_path;
    std::string headers_path;
    std::string data_dir;  // corpus in (synth writes here, later stages read)
    std::string out_dir;   // pipeline artifacts

    GenConfig synth;                  // [synth]
    std::optional<Date> study_start;  // [cohort]
    MergePolicy merge_policy;         // [merge]
    ProgressionWindow window;         // [label]
    int score_threshold = 2;          // [score]
    FitOptions baseline;              // [baseline]
    double train_fraction = 0.73;
    std::uint64_t split_seed = 7;

    static PipelineConfig load(const std::string& path);

    /// Fixed-order key=value rendering of every content knob (resource
    /// paths excluded, so relocating a checkout keeps the hash); the
    /// config_hash input.
    std::string canonical() const;
    /// FNV-1a(64) of canonical(), in hex.
    std::string config_hash() const;
    /// Manifest line embedded in every artifact: "config_hash=<h> seed=<s>".
    std::string manifest() const;
};

/// Stage entry points. Stages communicate only via files; each is
/// independently runnable and byte-deterministic for a given config.
void run_synth(const PipelineConfig& config);
void run_cohort(const PipelineConfig& config);
void run_extract_reports(const PipelineConfig& config, int jobs = 1);
void run_extract_structured(const PipelineConfig& config, int jobs = 1);
void run_merge(const PipelineConfig& config);
void run_label(const PipelineConfig& config);
void run_score(const PipelineConfig& config);
void run_train_baseline(const PipelineConfig& config);
void run_evaluate(const PipelineConfig& config);
void run_report(const PipelineConfig& config);
void run_all(const PipelineConfig& config, int jobs = 1);

/// Dispatch a subcommand by name with error-to-exit-code mapping:
/// 0 success, 1 validation error, 2 I/O error. Failures are reported on
/// stderr with the stage name prefixed.
int run_stage(const std::string& name, const PipelineConfig& config, int jobs = 1);

}  // namespace cohortforge
