#pragma once

// Linear SVM trained by the hinge-loss SGD loop: zero-initialised (w, b),
// one pass over the shuffled samples per epoch, and for each sample either
// the margin-violation update or the pure shrinkage update.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "linkpred/dataset.hpp"
#include "linkpred/error.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

/// Per-feature affine map to zero mean and unit variance. Constant features
/// keep scale 1, so they map to 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  static Standardizer fit(const Dataset& d) {
    Standardizer s;
    const std::size_t m = d.dims();
    const auto n = static_cast<double>(d.rows());
    s.mean.assign(m, 0.0);
    s.scale.assign(m, 1.0);
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < m; ++j) s.mean[j] += d.at(i, j);
    }
    for (double& mu : s.mean) mu /= n;
    for (std::size_t j = 0; j < m; ++j) {
      double ss = 0.0;
      for (std::size_t i = 0; i < d.rows(); ++i) {
        const double delta = d.at(i, j) - s.mean[j];
        ss += delta * delta;
      }
      const double sd = std::sqrt(ss / n);
      if (sd > 0.0) s.scale[j] = sd;
    }
    return s;
  }

  void apply(std::span<const double> x, std::span<double> out) const {
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = (x[j] - mean[j]) / scale[j];
  }

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

struct SvmParams {
  double C = 0.01;
  double eta = 0.01;
  std::size_t epochs = 200;
  /// Stop once an epoch lowers the objective by less than this fraction.
  double tolerance = 1e-6;
  std::uint64_t seed = 0;

  friend bool operator==(const SvmParams&, const SvmParams&) = default;
};

struct LinearSvmModel {
  std::vector<double> w;
  double b = 0.0;
  Standardizer standardizer;
  SvmParams params;
  std::size_t epochs_run = 0;

  std::size_t dims() const noexcept { return w.size(); }

  /// w . z + b, where z is x after standardization.
  double score(std::span<const double> x) const {
    detail::require_dims(x.size(), w.size());
    double s = b;
    for (std::size_t j = 0; j < w.size(); ++j) {
      s += w[j] * ((x[j] - standardizer.mean[j]) / standardizer.scale[j]);
    }
    return s;
  }

  /// Score 0 counts as class 1.
  int label(std::span<const double> x) const { return score(x) >= 0.0 ? 1 : 0; }

  friend bool operator==(const LinearSvmModel&, const LinearSvmModel&) = default;
};

/// One SGD update for sample (x, y), y in {-1, +1}. Returns true when the
/// sample violated the margin.
inline bool svm_sgd_step(std::span<double> w, double& b, std::span<const double> x, double y,
                         double eta, double C) {
  double margin = b;
  for (std::size_t j = 0; j < w.size(); ++j) margin += w[j] * x[j];
  if (y * margin < 1.0) {
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = w[j] + eta * (y * x[j] - 2.0 * C * w[j]);
    b = b + eta * y;
    return true;
  }
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = w[j] - eta * (2.0 * C * w[j]);
  return false;
}

/// Mean hinge loss plus C * |w|^2 over standardized rows.
inline double svm_objective(std::span<const double> w, double b, std::span<const double> z,
                            std::span<const double> y, double C) {
  const std::size_t m = w.size();
  double hinge = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double margin = b;
    for (std::size_t j = 0; j < m; ++j) margin += w[j] * z[i * m + j];
    hinge += std::max(0.0, 1.0 - y[i] * margin);
  }
  double norm = 0.0;
  for (double wj : w) norm += wj * wj;
  return hinge / static_cast<double>(y.size()) + C * norm;
}

inline LinearSvmModel train_svm(const Dataset& d, const SvmParams& params) {
  detail::require_rows(d);
  if (!d.has_both_classes()) {
    detail::fail(ErrorKind::kDegenerateLabels, "SVM training needs both classes");
  }
  if (!(params.C > 0.0) || !(params.eta > 0.0)) {
    detail::fail(ErrorKind::kInvalidParameter, "SVM needs C > 0 and eta > 0");
  }
  const std::size_t m = d.dims();
  const std::size_t n = d.rows();
  LinearSvmModel model;
  model.params = params;
  model.standardizer = Standardizer::fit(d);
  model.w.assign(m, 0.0);

  std::vector<double> z(n * m);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    model.standardizer.apply(d.row(i), std::span<double>(z).subspan(i * m, m));
    y[i] = d.label(i) == 1 ? 1.0 : -1.0;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(params.seed);
  double previous = svm_objective(model.w, model.b, z, y, params.C);
  for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
    shuffle(std::span<std::size_t>(order), rng);
    for (std::size_t i : order) {
      svm_sgd_step(model.w, model.b, std::span<const double>(z).subspan(i * m, m), y[i],
                   params.eta, params.C);
    }
    model.epochs_run = epoch + 1;
    const double current = svm_objective(model.w, model.b, z, y, params.C);
    if (previous - current < params.tolerance * std::abs(previous)) break;
    previous = current;
  }
  return model;
}

}  // namespace linkpred
