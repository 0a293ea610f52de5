#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netclass/dataset.hpp"

namespace netclass {

// ---------------------------------------------------------------- folds --

struct FoldAssignment {
  std::vector<std::size_t> fold_of;  // per item
  std::size_t folds = 0;             // effective fold count
  std::optional<std::string> warning;
};

// Shuffles each class with a seeded stream, then deals its members to folds
// round-robin, continuing from the fold where the previous class stopped.
// If the smallest class has fewer than k members, k is reduced to that size
// and `warning` says so. Throws for k < 2 or a class with a single member.
FoldAssignment stratified_kfold(std::span<const std::size_t> class_ids, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------- classifiers --

// class_id indexes the dataset's classes(); scores has one entry per class.
struct Prediction {
  std::size_t class_id = 0;
  std::vector<double> scores;
};

// k-nearest neighbours in Euclidean distance over the rows `train` of
// `data`. Majority vote; vote ties go to the class with the nearer
// neighbour, distance ties to the lower training index. Per-class score is
// 1 / (1 + d_c), d_c the distance to the nearest member of class c (0 when
// the class has no training member).
Prediction knn_predict(const LabeledDataset& data, std::span<const std::size_t> train,
                       std::span<const double> query, std::size_t k = 1);
Prediction knn_predict(const LabeledDataset& train, std::span<const double> query, std::size_t k = 1);

struct SvmParams {
  double C = 1.0;
  std::size_t epochs = 40;
};

// One-vs-rest linear SVMs on standardised features. Columns that are
// constant over the training rows are dropped. Each binary problem is
// trained with Pegasos (lambda = 1 / (C m), step 1 / (lambda t)) on the
// hinge-loss primal with a constant bias feature; samples are visited in a
// seeded permutation per epoch, and the weights returned are the mean of
// the end-of-epoch iterates over the second half of training.
struct SvmModel {
  std::vector<std::size_t> kept_columns;
  std::vector<double> mean;
  std::vector<double> inv_std;
  // Per class: weights over kept columns followed by the bias weight.
  // Empty for classes absent from the training rows.
  std::vector<std::vector<double>> weights;
};

SvmModel svm_train(const LabeledDataset& data, std::span<const std::size_t> train, const SvmParams& params,
                   std::uint64_t seed);
SvmModel svm_train(const LabeledDataset& train, const SvmParams& params, std::uint64_t seed);

// Argmax of the decision values; ties go to the earlier class.
Prediction svm_predict(const SvmModel& model, std::span<const double> x);

// ------------------------------------------------------------ evaluation --

enum class ClassifierKind { knn, svm };

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::knn;
  std::size_t neighbors = 1;  // knn
  SvmParams svm;              // svm
  // Standardise columns with training-fold statistics before knn. The SVM
  // always standardises.
  bool standardize = false;
};

std::string to_string(const ClassifierSpec& spec);

struct AucResult {
  std::vector<std::optional<double>> per_class;  // nullopt: class absent or no negatives
  std::optional<double> macro;                   // mean over defined classes
};

// Area under the ROC curve of `scores` for the given positives, by the
// trapezoid rule over tied-score groups (ties count one half).
std::optional<double> auc_binary(std::span<const double> scores, std::span<const std::uint8_t> positive);

// scores: one row per sample, one column per class.
AucResult auc_ovr(std::span<const std::vector<double>> scores, std::span<const std::size_t> labels,
                  std::size_t class_count);

struct ExperimentReport {
  std::string classifier;
  std::string extractor;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  std::vector<double> fold_ccr;   // fractions in [0, 1]
  double mean_ccr = 0.0;          // percent
  double std_ccr = 0.0;           // percent, sample standard deviation over folds
  double overall_accuracy = 0.0;  // percent, trace / total of the confusion matrix
  std::vector<std::string> classes;
  std::vector<std::vector<std::size_t>> confusion;  // [true][predicted]
  AucResult auc;
  std::optional<std::string> warning;
};

// Stratified k-fold cross-validation. Folds run in parallel; the report is
// identical for every thread count.
ExperimentReport evaluate(const LabeledDataset& data, const ClassifierSpec& spec, std::size_t folds,
                          std::uint64_t seed, unsigned threads = 1);

// JSON document: protocol{classifier, extractor, folds, seed}, fold_ccr,
// mean_ccr, std_ccr, overall_accuracy, confusion{classes, counts},
// auc{per_class, macro}.
std::string report_json(const ExperimentReport& report);
// "96.44 (0.56)"
std::string ccr_cell(const ExperimentReport& report);
// Aligned confusion matrix for terminals.
std::string confusion_text(const ExperimentReport& report);

}  // namespace netclass
