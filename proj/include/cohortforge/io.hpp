#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohortforge/dates.hpp"
#include "cohortforge/schema.hpp"

namespace cohortforge {

struct Section;  // report2vector.hpp

/// One dated free-text discharge report for one patient.
struct ReportDocument {
    std::string patient_id;
    std::string report_id;
    Date date;
    std::string text;
    std::vector<Section> sections;  // filled by segment_sections
};

struct DemographicsRow {
    std::string patient_id;
    Date birth_date;
    std::string sex;  // "M" / "F"
};

struct DiagnosisRow {
    std::string patient_id;
    Date date;
    std::string code_system;
    std::string code;
};

struct LabRow {
    std::string patient_id;
    Date date;
    std::string test_code;
    double value = 0;
    std::string unit;
};

struct ProcedureRow {
    std::string patient_id;
    Date date;
    std::string code;
    std::string outcome;
};

struct PrescriptionRow {
    std::string patient_id;
    Date date;
    std::string atc_code;
};

/// Loaded coded EHR tables. Immutable after load; rows sorted by
/// (patient_id, date) and cross-checked against demographics.
struct StructuredStore {
    std::vector<DemographicsRow> demographics;
    std::vector<DiagnosisRow> diagnoses;
    std::vector<LabRow> labs;
    std::vector<ProcedureRow> procedures;
    std::vector<PrescriptionRow> prescriptions;

    const DemographicsRow* find_patient(const std::string& patient_id) const;

    template <typename Row>
    static std::vector<const Row*> rows_for(const std::vector<Row>& rows,
                                            const std::string& patient_id) {
        std::vector<const Row*> out;
        for (const auto& r : rows)
            if (r.patient_id == patient_id) out.push_back(&r);
        return out;
    }
};

/// Load reports.jsonl: one {"patient_id","report_id","date","text"} object
/// per line, returned sorted by (patient_id, date, report_id). Lines whose
/// object carries a "_manifest" key are artifact headers and are skipped.
std::vector<ReportDocument> read_reports(const std::string& path);

/// Load the five structured CSV tables from a directory and cross-validate.
StructuredStore read_structured(const std::string& dir);

/// Write one dataset CSV (patient_id, 84 predictive columns in schema
/// order, label) plus a `<stem>.provenance.jsonl` sidecar. Unknown slots
/// serialize as empty cells; tri-state as 1/0; numerics via shortest
/// round-trip formatting.
void write_dataset(const std::vector<PatientVector>& vectors, const FeatureSchema& schema,
                   const std::string& path, const std::string& manifest = "");

/// Inverse of write_dataset (reads the sidecar when present; without it all
/// known slots would be unattributable, so a missing sidecar is an error).
std::vector<PatientVector> read_dataset(const std::string& path, const FeatureSchema& schema);

/// Shortest round-trip double formatting (std::to_chars).
std::string format_double(double v);

/// Plain CSV reader shared by the pipeline-stage artifacts (cohort.csv,
/// labels.csv, scores.csv): no quoting, '#' manifest lines skipped, first
/// kept line must equal `header` exactly. Returns (line number, fields).
std::vector<std::pair<int, std::vector<std::string>>> read_simple_csv(const std::string& path,
                                                                      const std::string& header);

}  // namespace cohortforge
