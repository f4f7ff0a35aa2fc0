#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohortforge/schema.hpp"

namespace cohortforge {

enum class MergePrecedence { StructuredFirst, ReportFirst };

struct MergePolicy {
    MergePrecedence precedence = MergePrecedence::StructuredFirst;
    double numeric_conflict_tolerance = 0.05;  // relative, ≥ 0
};

/// Recorded when both sources know a feature and disagree: tri-state or
/// categorical mismatch, or relative numeric difference above tolerance
/// (|s−r| / max(|s|,|r|), so the conflict set is source-symmetric).
struct Conflict {
    std::string patient_id;
    std::string feature_id;
    FeatureValue structured_value;
    FeatureValue report_value;
    Provenance resolution = Provenance::None;
};

/// Per-feature merge: one known source fills; two agreeing sources keep the
/// precedence value with the union of their provenances (so re-merging is a
/// no-op); two disagreeing sources keep the precedence value and log a
/// Conflict. Throws SchemaMismatch / PatientMismatch.
std::pair<PatientVector, std::vector<Conflict>> merge(const PatientVector& structured_vec,
                                                      const PatientVector& report_vec,
                                                      const FeatureSchema& schema,
                                                      const MergePolicy& policy = {});

}  // namespace cohortforge
