#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohortforge/schema.hpp"

namespace cohortforge {

/// Hyperparameters for the logistic stand-in model. Fixed defaults, no
/// tuner; the seed drives the ±0.01 uniform weight initialization.
struct FitOptions {
    double l2 = 1e-2;  // excludes the bias term
    double learning_rate = 0.1;
    int epochs = 500;
    std::uint64_t seed = 1;
};

/// One encoded design-matrix column. Tri-state and numeric features map to
/// a single column; categorical features one-hot into one column per
/// allowed value (category_value set). mu/sigma standardize post-imputation.
struct EncodedColumn {
    std::string name;  // feature_id, or feature_id=value for one-hot
    std::string feature_id;
    std::string category_value;
    double mu = 0;
    double sigma = 1;
    double weight = 0;
};

struct BaselineModel {
    int version = 1;
    FitOptions options;
    double bias = 0;
    std::vector<EncodedColumn> columns;
    /// Imputation stats from the training split only. Tri-state features
    /// impute the mean of their 0/1 encoding; numerics the mean; categorical
    /// features the training mode.
    std::map<std::string, double> mean_impute;
    std::map<std::string, std::string> mode_impute;
    /// Training loss per epoch (diagnostic only; not serialized).
    std::vector<double> loss_history;
};

/// Full-batch gradient-descent fit on vectors whose label slots are 0/1.
/// Throws ExcludedLabelPresent on a −1 label, MissingLabel on an unset one,
/// SingleClassTrainingSet when only one class is present.
BaselineModel fit(const std::vector<PatientVector>& train, const FeatureSchema& schema,
                  const FitOptions& options = {});

struct Prediction {
    double probability = 0.5;  // in (0,1)
    int label = 0;             // probability >= 0.5
};

/// Pure; Unknown slots impute from the stored training stats.
Prediction predict(const BaselineModel& model, const PatientVector& vector,
                   const FeatureSchema& schema);

void save_model(const BaselineModel& model, const std::string& path,
                const std::string& manifest = "");
BaselineModel load_model(const std::string& path, const FeatureSchema& schema);

/// Seeded-shuffle split of labeled vectors (labels must be 0/1) into
/// train/test dataset files; returns (train_rows, test_rows).
std::pair<int, int> export_dataset(const std::vector<PatientVector>& vectors,
                                   const FeatureSchema& schema, const std::string& train_path,
                                   const std::string& test_path, double train_fraction = 0.73,
                                   std::uint64_t seed = 1, const std::string& manifest = "");

/// Mean cross-entropy + (l2/2)·‖w‖² over a raw design matrix; the pieces
/// the fit loop uses, exposed for finite-difference verification.
double logistic_loss(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                     const std::vector<double>& w, double bias, double l2);
void logistic_gradient(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                       const std::vector<double>& w, double bias, double l2,
                       std::vector<double>& grad_w, double& grad_bias);

}  // namespace cohortforge
