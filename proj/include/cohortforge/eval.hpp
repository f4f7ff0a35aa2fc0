#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohortforge/schema.hpp"

namespace cohortforge {

struct ConfusionMatrix {
    long tp = 0, tn = 0, fp = 0, fn = 0;
    long total() const { return tp + tn + fp + fn; }
};

ConfusionMatrix confusion(const std::vector<int>& preds, const std::vector<int>& golds);

/// Matthews correlation; any zero factor in the denominator yields 0.0.
double mcc(const ConfusionMatrix& cm);

double accuracy(const ConfusionMatrix& cm);

/// Fraction of agreeing labels over patient ids present and non-excluded
/// (label != -1) in both maps. Throws EmptyIntersection when no id
/// qualifies.
double label_agreement(const std::map<std::string, int>& silver,
                       const std::map<std::string, int>& gold);

struct FeatureEnrichment {
    std::string feature_id;
    Category category = Category::History;
    double missing_pct_original = 0;
    double missing_pct_enriched = 0;
    // positive rate over all patients; tri-state features only
    std::optional<double> positive_pct_original;
    std::optional<double> positive_pct_enriched;
};

struct EnrichmentReport {
    std::vector<FeatureEnrichment> features;  // schema order, label slot excluded
    std::map<Category, double> category_missing_original;
    std::map<Category, double> category_missing_enriched;
};

/// Per-feature and per-category missingness/positive-rate comparison of a
/// structured-only dataset against its merged counterpart (the Fig.-5-style
/// original vs enriched view). Patient sets must match.
EnrichmentReport enrichment_report(const std::vector<PatientVector>& original,
                                   const std::vector<PatientVector>& enriched,
                                   const FeatureSchema& schema);

/// Long-format CSV: feature,category,metric,original,enriched,delta —
/// per-feature missing_pct rows, positive_pct rows for tri-state features,
/// then one mean_missing_pct row per category (feature column
/// "category:<name>").
void write_enrichment_csv(const EnrichmentReport& report, const std::string& path,
                          const std::string& manifest = "");

}  // namespace cohortforge
