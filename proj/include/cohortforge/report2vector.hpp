#pragma once

#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "cohortforge/dates.hpp"
#include "cohortforge/io.hpp"
#include "cohortforge/scale.hpp"
#include "cohortforge/schema.hpp"

namespace cohortforge {

enum class SectionKind {
    PastHistory,
    CurrentEpisode,
    Exam,
    Evolution,
    Treatment,
    Diagnosis,
    Unknown,
};

std::string to_string(SectionKind k);
std::optional<SectionKind> section_kind_from_string(const std::string& s);

/// One typed slice of a report. Sections are non-overlapping, ordered and
/// jointly cover the whole text; [start, end) are byte offsets.
struct Section {
    SectionKind kind = SectionKind::Unknown;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string header_text;  // raw header line; empty for the implicit leading section
};

/// Header alias table mapping normalized header lines to section kinds.
/// A '*' suffix on an alias makes it a prefix match ("antecedentes*"
/// covers ANTECEDENTES PERSONALES etc.). Shipped as editable config.
struct HeaderTable {
    struct Alias {
        std::string pattern;  // normalized, no trailing colon
        bool prefix = false;
        SectionKind kind = SectionKind::Unknown;
    };
    std::vector<Alias> aliases;

    static const HeaderTable& defaults();
    static HeaderTable load(const std::string& path);
};

enum class Polarity { Affirmed, Negated };

/// Lexicon concepts the labeler/cohort stages consume that are not schema
/// features: AF-episode evidence and sinus-rhythm evidence.
inline constexpr const char* kAfEpisodeConcept = "af_episode";
inline constexpr const char* kSinusRhythmConcept = "sinus_rhythm";
bool is_reserved_concept(const std::string& id);

struct EntityMention {
    std::string feature_id;          // schema feature or reserved concept
    std::string categorical_value;   // set for "feature=value" lexicon entries
    std::string surface;             // text as written
    std::size_t begin = 0;           // byte offsets into the report text
    std::size_t end = 0;
    Polarity polarity = Polarity::Affirmed;
    SectionKind section_kind = SectionKind::Unknown;
};

/// Surface-form dictionary plus negation triggers, all accent/case
/// normalized. File format: `feature_id<TAB>surface form` per line,
/// `feature_id=value` in the first column for categorical assertions,
/// `@negation<TAB>trigger phrase` for triggers, `#` comments.
class Lexicon {
public:
    struct Entry {
        std::string feature_id;
        std::string categorical_value;
        std::vector<std::string> tokens;  // normalized surface tokens
    };

    std::vector<Entry> entries;
    std::vector<std::vector<std::string>> negation_triggers;

    static Lexicon load(const std::string& path, const FeatureSchema& schema);
    void validate(const FeatureSchema& schema) const;
};

/// One numeric extraction rule: regex with a single numeric capture group,
/// applied to accent/case-normalized text; captured value × scale must be
/// in schema units. File format: `feature_id<TAB>regex<TAB>unit<TAB>scale`.
struct PatternSpec {
    std::string feature_id;
    std::string regex_text;
    std::string unit;
    Scale scale;
    std::regex compiled;
};

std::vector<PatternSpec> load_patterns(const std::string& path, const FeatureSchema& schema);

/// Split a report into typed sections. Header lines match when their
/// normalized form (lowercase, accents stripped, trailing colon dropped)
/// equals an alias; text before the first header becomes an Unknown
/// section, and a text with no headers is one Unknown section.
std::vector<Section> segment_sections(const std::string& text,
                                      const HeaderTable& headers = HeaderTable::defaults());

/// Longest-match lexicon scan over one section. Every maximal-length entry
/// at a position is emitted (so a subtype phrase can assert both the
/// subtype and the broader concept). A mention is Negated when a trigger
/// ends 1..5 tokens before it within the same sentence.
std::vector<EntityMention> detect_entities(const Section& section, const std::string& text,
                                           const Lexicon& lexicon);

/// Run all pattern specs over one section (normalized). Returns one
/// (feature_id, value) per feature, keeping the last match in document
/// order; captures that fail numeric parsing are skipped with a warning.
std::vector<std::pair<std::string, double>> extract_patterns(const Section& section,
                                                             const std::string& text,
                                                             const std::vector<PatternSpec>& specs);

/// Full per-report pass shared by the vectorizer, cohort validator and
/// labeler: sections, mentions and numeric hits in document order.
struct ReportAnalysis {
    std::vector<Section> sections;
    std::vector<EntityMention> mentions;
    std::vector<std::pair<std::string, double>> numeric_hits;
};

ReportAnalysis analyze_report(const ReportDocument& report, const Lexicon& lexicon,
                              const std::vector<PatternSpec>& specs,
                              const HeaderTable& headers = HeaderTable::defaults());

/// Fold all reports for one patient dated at or before index_date into a
/// PatientVector. Tri-state features: Present if ever affirmed, Absent if
/// only negated, Unknown otherwise. Numeric/categorical features: most
/// recent value wins. Provenance is Report for every known slot.
PatientVector report_to_vector(const std::string& patient_id,
                               const std::vector<ReportDocument>& reports,
                               const FeatureSchema& schema, const Lexicon& lexicon,
                               const std::vector<PatternSpec>& specs, const Date& index_date,
                               const HeaderTable& headers = HeaderTable::defaults());

}  // namespace cohortforge
