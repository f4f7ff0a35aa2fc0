#pragma once

#include <string>

#include "cohortforge/schema.hpp"

namespace cohortforge {

enum class ScoreName { Chads2Vasc, Hatch, Apple };

std::string to_string(ScoreName s);

/// Unknown components score 0 points and decrement known_components, so a
/// low-information score can be filtered downstream. prediction applies
/// the default ≥2 threshold.
struct ScoreResult {
    ScoreName score_name = ScoreName::Chads2Vasc;
    int points = 0;
    int known_components = 0;
    bool prediction = false;
};

/// CHA2DS2-VASc: HF 1, HTN 1, age ≥75 → 2 (65–74 → 1), DM 1, stroke/TIA 2,
/// vascular disease 1, female 1. Max 9 over 7 components.
ScoreResult chads2vasc(const PatientVector& v, const FeatureSchema& schema);

/// HATCH: HTN 1, age >75 → 1, stroke/TIA 2, COPD 1, HF 2. Max 7 over 5.
ScoreResult hatch(const PatientVector& v, const FeatureSchema& schema);

/// APPLE: age >65 → 1, persistent AF 1, eGFR <60 → 1, LA ≥43 mm → 1,
/// LVEF <50% → 1. Max 5 over 5.
ScoreResult apple(const PatientVector& v, const FeatureSchema& schema);

bool binarize(const ScoreResult& result, int threshold = 2);

}  // namespace cohortforge
