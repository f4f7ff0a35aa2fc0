#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohortforge/io.hpp"
#include "cohortforge/labeler.hpp"
#include "cohortforge/schema.hpp"

namespace cohortforge {

/// Knobs for the deterministic corpus generator. Defaults mirror the
/// Train-Silver cohort shape (1023 patients, 65.4% positive).
struct GenConfig {
    int n_patients = 1023;
    double positive_rate = 0.654;
    /// Fraction of cohort patients planted with label −1 (no usable
    /// follow-up). Kept at 0 so default shapes match the target rates.
    double excluded_rate = 0.0;
    /// Per-category probability of dropping a feature from the structured
    /// tables (all rows of that feature for that patient). Categories
    /// absent from the map default to 0. Demographics birth/sex and the
    /// onset AF code itself are never dropped — they anchor the cohort;
    /// af_related missingness instead downgrades the subtyped onset code
    /// to a plain af_any code.
    std::map<std::string, double> structured_missingness;
    /// Probability a feature fact is rendered into report text.
    double report_coverage = 1.0;
    /// Probability an Absent fact is rendered as a negated sentence
    /// (otherwise it is simply omitted from the text).
    double negation_rate = 1.0;
    /// Probability each follow-up report is dropped (onset reports never
    /// are). Degrades label agreement monotonically.
    double report_dropout_rate = 0.0;
    /// Extra non-cohort patients per cohort patient, cycling through the
    /// rejection paths (never coded, prior history, no textual evidence).
    double distractor_rate = 0.06;
    /// Label/feature coupling set by plant_signal; 0 = independent.
    double signal_strength = 0.0;
    std::uint64_t seed = 42;

    void validate() const;  // throws InvalidConfig

    /// Preset shapes: "silver" (1023/65.40%), "gold" (541/66.17%),
    /// "test" (278/64.03%).
    static GenConfig profile(const std::string& name);
};

/// Returns a copy of `config` with the label coupled to the planted marker
/// features (nt_probnp, crp, sleep_apnea, dyslipidemia — none of which any
/// clinical score reads) at the given strength in [0,1].
GenConfig plant_signal(GenConfig config, double strength);

/// Marker rule the planted signal follows: at least two of
/// nt_probnp ≥ 900, crp ≥ 10, sleep_apnea, dyslipidemia.
bool signal_rule(const std::map<std::string, FeatureValue>& features);

/// One fact actually rendered into a report's text.
struct ReportFact {
    std::string report_id;
    std::string feature_id;
    FeatureValue value;
    bool negated = false;
};

struct GroundTruthRecord {
    std::string patient_id;
    /// "cohort" or one of the distractor kinds below.
    std::string status;
    std::optional<Date> onset_date;
    std::optional<int> label;  // cohort patients only
    /// True values for the 84 predictive features (cohort patients only).
    std::map<std::string, FeatureValue> features;
    /// Planted AF/sinus events realizing the label.
    std::vector<DatedStatus> timeline;
    std::vector<ReportFact> report_facts;
};

inline constexpr const char* kStatusCohort = "cohort";
inline constexpr const char* kStatusNeverAf = "distractor_never_af";
inline constexpr const char* kStatusPriorAf = "distractor_prior_af";
inline constexpr const char* kStatusNoReport = "distractor_no_report";

struct SynthCorpus {
    std::vector<ReportDocument> reports;
    StructuredStore store;
    std::vector<GroundTruthRecord> truth;
};

/// Deterministically generate the corpus in memory. Per-patient sub-seeded
/// streams make generation order-independent and reproducible.
SynthCorpus generate(const GenConfig& config, const FeatureSchema& schema);

/// Write reports.jsonl, the five structured CSVs, and ground_truth.jsonl
/// into `out_dir` (created if needed). `manifest` is embedded as a comment
/// / header line in every artifact when non-empty.
void write_corpus(const SynthCorpus& corpus, const std::string& out_dir,
                  const FeatureSchema& schema, const std::string& manifest = "");

std::vector<GroundTruthRecord> read_ground_truth(const std::string& path,
                                                 const FeatureSchema& schema);

}  // namespace cohortforge
