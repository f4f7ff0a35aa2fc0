#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cohortforge/dates.hpp"

namespace cohortforge {

enum class Category { Demographic, History, Lab, Procedure, Treatment, AfRelated };

enum class ValueKind { Boolean3State, Numeric, Categorical, Date };

enum class TriState { Present, Absent, Unknown };

enum class Provenance { Structured, Report, Both, None };

const char* to_string(Category c);
const char* to_string(ValueKind k);
const char* to_string(Provenance p);
std::optional<Category> category_from_string(const std::string& s);
std::optional<ValueKind> value_kind_from_string(const std::string& s);
std::optional<Provenance> provenance_from_string(const std::string& s);

struct FeatureDef {
    std::string id;
    Category category = Category::History;
    ValueKind value_kind = ValueKind::Boolean3State;
    std::string unit;                         // labs only
    std::vector<std::string> allowed_values;  // categorical only
};

/// The feature inventory: 84 predictive features plus the af_progression
/// label slot, in a fixed order that defines dataset column order.
class FeatureSchema {
public:
    std::vector<FeatureDef> features;
    std::string version;

    /// Enforces the structural invariants (entry count, category counts,
    /// unique ids, per-kind constraints, required feature names). Throws
    /// ValidationError("SchemaInvariantViolation") naming the failure.
    void validate() const;

    const FeatureDef* find(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;  // throws if absent
    bool has(const std::string& id) const { return find(id) != nullptr; }

    std::size_t size() const { return features.size(); }
    std::size_t label_index() const { return index_of(kLabelFeature); }

    static constexpr const char* kLabelFeature = "af_progression";

    void rebuild_index();

private:
    std::unordered_map<std::string, std::size_t> index_;
};

/// One feature slot. monostate = Unknown. TriState values here are always
/// Present/Absent; Unknown is represented by monostate for every kind.
struct FeatureValue {
    std::variant<std::monostate, TriState, double, std::string, Date> value;
    Provenance provenance = Provenance::None;

    bool known() const { return !std::holds_alternative<std::monostate>(value); }

    static FeatureValue unknown() { return {}; }
    static FeatureValue tri(TriState t, Provenance p);
    static FeatureValue number(double v, Provenance p);
    static FeatureValue category(std::string v, Provenance p);
    static FeatureValue date(Date v, Provenance p);

    bool operator==(const FeatureValue&) const = default;
};

/// The 85-slot per-patient record, slot order parallel to the schema.
struct PatientVector {
    std::string patient_id;
    std::vector<FeatureValue> values;

    static PatientVector empty(const std::string& patient_id, const FeatureSchema& schema);

    FeatureValue& at(const FeatureSchema& schema, const std::string& feature_id);
    const FeatureValue& at(const FeatureSchema& schema, const std::string& feature_id) const;

    /// Label slot helpers; label values are 1 / 0 / -1.
    std::optional<int> label(const FeatureSchema& schema) const;
    void set_label(const FeatureSchema& schema, int value);

    /// Throws ValidationError("SchemaMismatch") when slot count or value
    /// kinds do not line up with the schema, or provenance is inconsistent.
    void check_conforms(const FeatureSchema& schema) const;
};

/// Parse a schema file: one feature per line, `id,category,value_kind,unit`
/// with an optional fifth field `a|b|c` of allowed categorical values.
/// `#` starts a comment. Validates before returning.
FeatureSchema load_schema(const std::string& path);

}  // namespace cohortforge
