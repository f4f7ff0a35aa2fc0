#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohortforge/dates.hpp"
#include "cohortforge/io.hpp"
#include "cohortforge/report2vector.hpp"

namespace cohortforge {

enum class AfStatus { AfEpisode, SinusRhythm, NoInfo };

std::string to_string(AfStatus s);

struct DatedStatus {
    Date date;
    AfStatus status = AfStatus::NoInfo;
    std::string source_report_id;
};

struct ArrhythmiaTimeline {
    std::string patient_id;
    Date onset_date;
    std::vector<DatedStatus> events;  // date-sorted, NoInfo dropped, same-day collapsed
};

/// Inclusive day-offset window after onset in which a new episode counts
/// as progression ("one month to two years").
struct ProgressionWindow {
    int start_offset_days = 30;
    int end_offset_days = 730;
};

enum class LabelValue : int { Progression = 1, NoProgression = 0, Excluded = -1 };

/// AF status of one consultation: AfEpisode if any affirmed AF mention
/// outside PastHistory; else SinusRhythm if any affirmed sinus mention;
/// else NoInfo.
DatedStatus extract_af_status(const ReportDocument& report, const Lexicon& lexicon,
                              const HeaderTable& headers = HeaderTable::defaults());

/// Drop NoInfo, sort by date, collapse same-day statuses (AfEpisode wins).
ArrhythmiaTimeline build_timeline(const std::vector<DatedStatus>& statuses,
                                  const std::string& patient_id, const Date& onset_date);

/// 1 if an AfEpisode falls inside [onset+start, onset+end]; else 0 if a
/// SinusRhythm event at/after onset+start shows non-progression; else −1.
LabelValue assign_label(const ArrhythmiaTimeline& timeline, const ProgressionWindow& window = {});

/// First timeline event dated inside the window, if any (for labels.csv).
std::optional<Date> first_event_in_window(const ArrhythmiaTimeline& timeline,
                                          const ProgressionWindow& window = {});

}  // namespace cohortforge
