#include "netclass/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "netclass/error.hpp"
#include "netclass/parallel.hpp"
#include "netclass/rng.hpp"

namespace netclass {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

void check_dimension(const LabeledDataset& data, std::span<const double> x) {
  if (x.size() != data.dimension()) {
    fail(ErrorKind::invalid_argument, "query has dimension " + std::to_string(x.size()) + ", training data has " +
                                          std::to_string(data.dimension()));
  }
}

std::vector<std::size_t> all_rows(const LabeledDataset& data) {
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

struct ColumnStats {
  std::vector<std::size_t> kept;
  std::vector<double> mean;
  std::vector<double> inv_std;
};

ColumnStats column_stats(const LabeledDataset& data, std::span<const std::size_t> rows) {
  ColumnStats stats;
  const std::size_t dim = data.dimension();
  const double count = static_cast<double>(rows.size());
  for (std::size_t j = 0; j < dim; ++j) {
    const double first = data[rows[0]].values[j];
    bool constant = true;
    double sum = 0.0;
    for (std::size_t r : rows) {
      const double x = data[r].values[j];
      if (!std::isfinite(x)) {
        fail(ErrorKind::invalid_argument, "non-finite feature in row " + std::to_string(r) + ", column " +
                                              std::to_string(j));
      }
      constant = constant && x == first;
      sum += x;
    }
    if (constant) continue;
    const double mean = sum / count;
    double ss = 0.0;
    for (std::size_t r : rows) {
      const double d = data[r].values[j] - mean;
      ss += d * d;
    }
    const double var = ss / count;
    if (!(var > 0.0)) continue;
    stats.kept.push_back(j);
    stats.mean.push_back(mean);
    stats.inv_std.push_back(1.0 / std::sqrt(var));
  }
  return stats;
}

std::vector<double> standardized(std::span<const std::size_t> kept, std::span<const double> mean,
                                 std::span<const double> inv_std, std::span<const double> x) {
  std::vector<double> out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[i] = (x[kept[i]] - mean[i]) * inv_std[i];
  return out;
}

}  // namespace

FoldAssignment stratified_kfold(std::span<const std::size_t> class_ids, std::size_t k, std::uint64_t seed) {
  if (k < 2) fail(ErrorKind::invalid_argument, "cross-validation needs at least 2 folds");
  if (class_ids.empty()) fail(ErrorKind::invalid_argument, "cannot split an empty dataset");
  const std::size_t classes = *std::max_element(class_ids.begin(), class_ids.end()) + 1;
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t i = 0; i < class_ids.size(); ++i) members[class_ids[i]].push_back(i);

  std::size_t smallest = class_ids.size();
  for (std::size_t c = 0; c < classes; ++c) {
    if (members[c].empty()) continue;
    if (members[c].size() == 1) {
      fail(ErrorKind::invalid_argument, "class " + std::to_string(c) + " has a single member; cannot stratify");
    }
    smallest = std::min(smallest, members[c].size());
  }

  FoldAssignment out;
  out.folds = k;
  if (smallest < k) {
    out.folds = smallest;
    out.warning = "smallest class has " + std::to_string(smallest) + " members; reducing folds from " +
                  std::to_string(k) + " to " + std::to_string(smallest);
  }

  out.fold_of.assign(class_ids.size(), 0);
  std::size_t next_fold = 0;
  for (std::size_t c = 0; c < classes; ++c) {
    Rng rng(mix_seed({seed, c}));
    rng.shuffle(std::span<std::size_t>(members[c]));
    for (std::size_t item : members[c]) {
      out.fold_of[item] = next_fold;
      next_fold = (next_fold + 1) % out.folds;
    }
  }
  return out;
}

Prediction knn_predict(const LabeledDataset& data, std::span<const std::size_t> train,
                       std::span<const double> query, std::size_t k) {
  if (train.empty()) fail(ErrorKind::invalid_argument, "k-NN needs at least one training vector");
  if (k == 0) fail(ErrorKind::invalid_argument, "k-NN needs k >= 1");
  check_dimension(data, query);

  const std::size_t classes = data.classes().size();
  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(train.size());
  for (std::size_t r : train) dist.emplace_back(squared_distance(data[r].values, query), r);

  Prediction out;
  out.scores.assign(classes, 0.0);
  std::vector<double> nearest(classes, std::numeric_limits<double>::infinity());
  for (const auto& [d2, r] : dist) {
    auto& best = nearest[data.class_ids()[r]];
    best = std::min(best, d2);
  }
  for (std::size_t c = 0; c < classes; ++c) {
    if (std::isfinite(nearest[c])) out.scores[c] = 1.0 / (1.0 + std::sqrt(nearest[c]));
  }

  const std::size_t take = std::min(k, dist.size());
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(take), dist.end());
  std::vector<std::size_t> votes(classes, 0);
  for (std::size_t i = 0; i < take; ++i) ++votes[data.class_ids()[dist[i].second]];
  const std::size_t top = *std::max_element(votes.begin(), votes.end());
  // Walk neighbours nearest-first; the first class with a winning count wins.
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t c = data.class_ids()[dist[i].second];
    if (votes[c] == top) {
      out.class_id = c;
      break;
    }
  }
  return out;
}

Prediction knn_predict(const LabeledDataset& train, std::span<const double> query, std::size_t k) {
  const auto rows = all_rows(train);
  return knn_predict(train, rows, query, k);
}

SvmModel svm_train(const LabeledDataset& data, std::span<const std::size_t> train, const SvmParams& params,
                   std::uint64_t seed) {
  if (train.empty()) fail(ErrorKind::invalid_argument, "SVM needs training vectors");
  if (!(params.C > 0.0)) fail(ErrorKind::invalid_argument, "SVM regularisation C must be positive");
  if (params.epochs == 0) fail(ErrorKind::invalid_argument, "SVM needs at least one epoch");
  const std::size_t classes = data.classes().size();
  std::vector<std::uint8_t> present(classes, 0);
  for (std::size_t r : train) present[data.class_ids()[r]] = 1;
  if (std::count(present.begin(), present.end(), std::uint8_t{1}) < 2) {
    fail(ErrorKind::invalid_argument, "SVM training rows contain a single class");
  }

  const ColumnStats stats = column_stats(data, train);
  SvmModel model{stats.kept, stats.mean, stats.inv_std, {}};

  // Standardised rows with a trailing constant bias feature.
  const std::size_t dim = stats.kept.size() + 1;
  std::vector<std::vector<double>> rows;
  rows.reserve(train.size());
  for (std::size_t r : train) {
    auto x = standardized(stats.kept, stats.mean, stats.inv_std, data[r].values);
    x.push_back(1.0);
    rows.push_back(std::move(x));
  }

  const std::size_t m = rows.size();
  const double lambda = 1.0 / (params.C * static_cast<double>(m));
  const std::size_t average_from = params.epochs / 2;
  model.weights.resize(classes);

  for (std::size_t c = 0; c < classes; ++c) {
    if (!present[c]) continue;
    Rng rng(mix_seed({seed, c}));
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    // w = scale * v keeps the shrink step O(1).
    std::vector<double> v(dim, 0.0);
    double scale = 1.0;
    std::vector<double> average(dim, 0.0);
    std::size_t snapshots = 0;
    std::size_t t = 0;

    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
      rng.shuffle(std::span<std::size_t>(order));
      for (std::size_t i : order) {
        ++t;
        const double eta = 1.0 / (lambda * static_cast<double>(t));
        const double y = data.class_ids()[train[i]] == c ? 1.0 : -1.0;
        const auto& x = rows[i];
        double dot = 0.0;
        for (std::size_t j = 0; j < dim; ++j) dot += v[j] * x[j];
        const double margin = y * scale * dot;

        const double shrink = 1.0 - eta * lambda;
        if (shrink <= 0.0) {
          std::fill(v.begin(), v.end(), 0.0);
          scale = 1.0;
        } else {
          scale *= shrink;
        }
        if (margin < 1.0) {
          const double step = eta * y / scale;
          for (std::size_t j = 0; j < dim; ++j) v[j] += step * x[j];
        }
        if (scale < 1e-9) {
          for (double& w : v) w *= scale;
          scale = 1.0;
        }
      }
      if (epoch >= average_from) {
        for (std::size_t j = 0; j < dim; ++j) average[j] += scale * v[j];
        ++snapshots;
      }
    }
    for (double& w : average) w /= static_cast<double>(snapshots);
    model.weights[c] = std::move(average);
  }
  return model;
}

SvmModel svm_train(const LabeledDataset& train, const SvmParams& params, std::uint64_t seed) {
  const auto rows = all_rows(train);
  return svm_train(train, rows, params, seed);
}

Prediction svm_predict(const SvmModel& model, std::span<const double> x) {
  for (std::size_t j : model.kept_columns) {
    if (j >= x.size()) fail(ErrorKind::invalid_argument, "query dimension does not match the SVM model");
  }
  const auto z = standardized(model.kept_columns, model.mean, model.inv_std, x);
  Prediction out;
  out.scores.assign(model.weights.size(), -std::numeric_limits<double>::infinity());
  bool any = false;
  for (std::size_t c = 0; c < model.weights.size(); ++c) {
    const auto& w = model.weights[c];
    if (w.empty()) continue;
    double value = w.back();
    for (std::size_t j = 0; j < z.size(); ++j) value += w[j] * z[j];
    out.scores[c] = value;
    if (!any || value > out.scores[out.class_id]) out.class_id = c;
    any = true;
  }
  return out;
}

std::string to_string(const ClassifierSpec& spec) {
  if (spec.kind == ClassifierKind::svm) return "svm";
  std::string name = "knn";
  if (spec.neighbors != 1) name += "(k=" + std::to_string(spec.neighbors) + ")";
  if (spec.standardize) name += "+std";
  return name;
}

std::optional<double> auc_binary(std::span<const double> scores, std::span<const std::uint8_t> positive) {
  if (scores.size() != positive.size()) fail(ErrorKind::invalid_argument, "scores and labels differ in length");
  std::size_t pos = 0;
  for (auto p : positive) pos += p ? 1 : 0;
  const std::size_t neg = scores.size() - pos;
  if (pos == 0 || neg == 0) return std::nullopt;
  for (double s : scores) {
    if (!std::isfinite(s)) fail(ErrorKind::invalid_argument, "AUC scores must be finite");
  }

  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  double area = 0.0;
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t group_tp = 0, group_fp = 0;
    const double s = scores[idx[i]];
    for (; i < idx.size() && scores[idx[i]] == s; ++i) {
      if (positive[idx[i]]) {
        ++group_tp;
      } else {
        ++group_fp;
      }
    }
    // Trapezoid between (fp, tp) and (fp + group_fp, tp + group_tp).
    area += static_cast<double>(group_fp) * (static_cast<double>(tp) + 0.5 * static_cast<double>(group_tp));
    tp += group_tp;
    fp += group_fp;
  }
  return area / (static_cast<double>(pos) * static_cast<double>(neg));
}

AucResult auc_ovr(std::span<const std::vector<double>> scores, std::span<const std::size_t> labels,
                  std::size_t class_count) {
  if (scores.size() != labels.size()) fail(ErrorKind::invalid_argument, "score table and labels differ in length");
  AucResult out;
  out.per_class.resize(class_count);
  std::vector<double> column(scores.size());
  std::vector<std::uint8_t> positive(scores.size());
  double sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t c = 0; c < class_count; ++c) {
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i].size() != class_count) fail(ErrorKind::invalid_argument, "score row has wrong width");
      column[i] = scores[i][c];
      positive[i] = labels[i] == c;
    }
    out.per_class[c] = auc_binary(column, positive);
    if (out.per_class[c]) {
      sum += *out.per_class[c];
      ++defined;
    }
  }
  if (defined > 0) out.macro = sum / static_cast<double>(defined);
  return out;
}

ExperimentReport evaluate(const LabeledDataset& data, const ClassifierSpec& spec, std::size_t folds,
                          std::uint64_t seed, unsigned threads) {
  if (data.classes().size() < 2) fail(ErrorKind::invalid_argument, "classification needs at least two classes");
  const auto assignment = stratified_kfold(data.class_ids(), folds, seed);
  const std::size_t k = assignment.folds;
  const std::size_t classes = data.classes().size();

  std::vector<Prediction> predictions(data.size());
  std::vector<double> fold_ccr(k, 0.0);

  parallel_for(k, threads, [&](std::size_t fold) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < data.size(); ++i) (assignment.fold_of[i] == fold ? test : train).push_back(i);

    if (spec.kind == ClassifierKind::svm) {
      const SvmModel model = svm_train(data, train, spec.svm, mix_seed({seed, fold, 0x5356'4d00}));
      for (std::size_t i : test) predictions[i] = svm_predict(model, data[i].values);
    } else if (spec.standardize) {
      const ColumnStats stats = column_stats(data, train);
      std::vector<FeatureVector> scaled;
      scaled.reserve(data.size());
      for (const auto& v : data.vectors()) {
        scaled.push_back({v.extractor, v.label, standardized(stats.kept, stats.mean, stats.inv_std, v.values)});
      }
      const LabeledDataset view(std::move(scaled));
      for (std::size_t i : test) predictions[i] = knn_predict(view, train, view[i].values, spec.neighbors);
    } else {
      for (std::size_t i : test) predictions[i] = knn_predict(data, train, data[i].values, spec.neighbors);
    }

    std::size_t correct = 0;
    for (std::size_t i : test) correct += predictions[i].class_id == data.class_ids()[i] ? 1 : 0;
    fold_ccr[fold] = static_cast<double>(correct) / static_cast<double>(test.size());
  });

  ExperimentReport report;
  report.classifier = to_string(spec);
  report.extractor = data.extractor();
  report.folds = k;
  report.seed = seed;
  report.fold_ccr = fold_ccr;
  report.classes = data.classes();
  report.warning = assignment.warning;

  const double mean = std::accumulate(fold_ccr.begin(), fold_ccr.end(), 0.0) / static_cast<double>(k);
  double ss = 0.0;
  for (double x : fold_ccr) ss += (x - mean) * (x - mean);
  report.mean_ccr = 100.0 * mean;
  report.std_ccr = 100.0 * std::sqrt(ss / static_cast<double>(k - 1));

  report.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
  std::size_t trace = 0;
  std::vector<std::vector<double>> scores(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t truth = data.class_ids()[i];
    ++report.confusion[truth][predictions[i].class_id];
    trace += truth == predictions[i].class_id ? 1 : 0;
    scores[i] = predictions[i].scores;
  }
  report.overall_accuracy = 100.0 * static_cast<double>(trace) / static_cast<double>(data.size());
  report.auc = auc_ovr(scores, data.class_ids(), classes);
  return report;
}

}  // namespace netclass
