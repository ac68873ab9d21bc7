#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linkpred/error.hpp"

namespace linkpred {

/// Row-major feature matrix with binary labels.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<std::string> feature_names)
      : dims_(feature_names.size()), feature_names_(std::move(feature_names)) {}
  explicit Dataset(std::size_t dims) : dims_(dims) {
    for (std::size_t j = 0; j < dims; ++j) feature_names_.push_back("f" + std::to_string(j));
  }

  std::size_t dims() const noexcept { return dims_; }
  std::size_t rows() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const double> row(std::size_t i) const { return {values_.data() + i * dims_, dims_}; }
  double at(std::size_t i, std::size_t j) const { return values_[i * dims_ + j]; }
  int label(std::size_t i) const { return labels_[i]; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<std::string>& feature_names() const noexcept { return feature_names_; }

  void add(std::span<const double> x, int label) {
    if (x.size() != dims_) {
      detail::fail(ErrorKind::kMalformedInput, "row has " + std::to_string(x.size()) +
                                                   " features, dataset expects " + std::to_string(dims_));
    }
    if (label != 0 && label != 1) detail::fail(ErrorKind::kMalformedInput, "labels must be 0 or 1");
    values_.insert(values_.end(), x.begin(), x.end());
    labels_.push_back(label);
  }

  /// Rows at the given indices (repeats allowed), in that order.
  Dataset subset(std::span<const std::size_t> indices) const {
    Dataset out;
    out.dims_ = dims_;
    out.feature_names_ = feature_names_;
    out.values_.reserve(indices.size() * dims_);
    out.labels_.reserve(indices.size());
    for (std::size_t i : indices) {
      const auto r = row(i);
      out.values_.insert(out.values_.end(), r.begin(), r.end());
      out.labels_.push_back(labels_[i]);
    }
    return out;
  }

  std::size_t positives() const noexcept {
    std::size_t n = 0;
    for (int y : labels_) n += y == 1;
    return n;
  }

  bool has_both_classes() const noexcept {
    const std::size_t p = positives();
    return p > 0 && p < rows();
  }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::size_t dims_ = 0;
  std::vector<double> values_;
  std::vector<int> labels_;
  std::vector<std::string> feature_names_;
};

namespace detail {

inline void require_dims(std::size_t got, std::size_t want) {
  if (got != want) {
    fail(ErrorKind::kMalformedInput, "feature vector has " + std::to_string(got) +
                                         " entries, model expects " + std::to_string(want));
  }
}

inline void require_rows(const Dataset& d) {
  if (d.empty()) fail(ErrorKind::kMalformedInput, "empty dataset");
}

}  // namespace detail
}  // namespace linkpred
