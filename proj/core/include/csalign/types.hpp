#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace csalign {

/// Dense row-major matrix of doubles. Deliberately minimal: the library
/// needs storage, row access and a finiteness check, nothing more.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool all_finite() const {
    for (double v : data_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Ordered concept labels paired with one embedding vector per concept.
/// The unit being aligned.
struct ConceptualSystem {
  std::vector<std::string> labels;
  Matrix vectors;  // labels.size() x dim

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return vectors.cols(); }
};

/// Throws std::invalid_argument if labels are not unique, shapes disagree
/// or a vector entry is non-finite.
void validate_system(const ConceptualSystem& system);

/// New system containing only the given rows, in the given order.
ConceptualSystem select_concepts(const ConceptualSystem& system, std::span<const int> rows);

}  // namespace csalign
