#pragma once

#include <string>
#include <vector>

#include "cohortforge/dates.hpp"
#include "cohortforge/io.hpp"
#include "cohortforge/scale.hpp"
#include "cohortforge/schema.hpp"

namespace cohortforge {

/// Reserved concept id for "any AF diagnosis code" rows consumed by the
/// cohort selector rather than the vectorizer.
inline constexpr const char* kAfAnyConcept = "af_any";

/// Declarative code-to-feature map. One line per rule, tab-separated:
///   DX  <code_system> <code_prefix> <feature_id> [categorical_value]
///   RX  <atc_prefix>  <feature_id>
///   PX  <code>        <feature_id>
///   LAB <test_code>   <feature_id>  <unit> <scale>
/// Diagnosis/prescription prefixes are ICD-10/ATC-style: a code matches
/// when it starts with the prefix. Prefixes must be prefix-free per code
/// system across schema features (`af_any` rows are exempt: the cohort
/// concept deliberately overlaps the af_type subtype codes).
class CodeMap {
public:
    struct DxEntry {
        std::string code_system;
        std::string prefix;
        std::string feature_id;  // schema feature or af_any
        std::string categorical_value;
    };
    struct RxEntry {
        std::string prefix;
        std::string feature_id;
    };
    struct PxEntry {
        std::string code;
        std::string feature_id;
    };
    struct LabEntry {
        std::string test_code;
        std::string feature_id;
        std::string unit;
        Scale scale;
    };

    std::vector<DxEntry> dx;
    std::vector<RxEntry> rx;
    std::vector<PxEntry> px;
    std::vector<LabEntry> labs;

    static CodeMap load(const std::string& path, const FeatureSchema& schema);
    void validate(const FeatureSchema& schema) const;

    /// True when the diagnosis row matches an af_any rule.
    bool is_af_code(const std::string& code_system, const std::string& code) const;
};

/// Project the coded tables for one patient onto the schema at index_date.
/// Coded data asserts presence only: tri-state features are Present or
/// Unknown, never Absent. Labs take the most recent value at/before the
/// index date, converted via the map's scale. Provenance is Structured.
PatientVector structured_to_vector(const StructuredStore& store, const std::string& patient_id,
                                   const FeatureSchema& schema, const CodeMap& code_map,
                                   const Date& index_date);

}  // namespace cohortforge
