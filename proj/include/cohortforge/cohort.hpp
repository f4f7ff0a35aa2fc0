#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohortforge/dates.hpp"
#include "cohortforge/io.hpp"
#include "cohortforge/report2vector.hpp"
#include "cohortforge/structured2vector.hpp"

namespace cohortforge {

struct OnsetCandidate {
    std::string patient_id;
    Date onset_date;           // earliest AF-mapped diagnosis date
    std::string trigger_code;  // the code that set onset_date
};

enum class VerificationStatus { Confirmed, RejectedPriorHistory, RejectedNoTextualEvidence };

std::string to_string(VerificationStatus s);

struct EvidenceSpan {
    std::string report_id;
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct VerificationOutcome {
    VerificationStatus status = VerificationStatus::RejectedNoTextualEvidence;
    std::vector<EvidenceSpan> evidence;
};

/// One candidate per patient with ≥1 AF diagnosis code; onset is the
/// earliest such date. Candidates whose onset predates study_start are
/// dropped. Returned sorted by patient_id.
std::vector<OnsetCandidate> select_candidates(const StructuredStore& store,
                                              const CodeMap& code_map,
                                              const std::optional<Date>& study_start = {});

/// Dual verification: Confirmed iff a report within ±7 days of onset has
/// an affirmed AF mention outside PastHistory, and no report dated at or
/// before onset has an affirmed AF mention inside PastHistory. A prior
/// history beats missing evidence when both grounds apply.
VerificationOutcome validate_onset(const OnsetCandidate& candidate,
                                   const std::vector<ReportDocument>& reports,
                                   const Lexicon& lexicon,
                                   const HeaderTable& headers = HeaderTable::defaults());

}  // namespace cohortforge
