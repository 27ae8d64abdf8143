#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace csgen {

// Dense nonnegative |t| x |s| word-pair score grid. Rows index target
// tokens, columns index source tokens.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool all_zero() const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Reads either the plain-text form ("rows cols" header, then row-major
// floats) or the JSON form {"rows":r,"cols":c,"data":[...]} — detected by a
// leading '{'. Rejects NaN/inf/negative entries and count mismatches.
ScoreMatrix load_score_matrix(const std::filesystem::path& path);

void save_score_matrix(const ScoreMatrix& matrix, const std::filesystem::path& path);

// Dimension check against the sentence pair the matrix belongs to.
void check_matrix_dims(const ScoreMatrix& matrix, std::size_t target_len,
                       std::size_t source_len, const std::string& context);

}  // namespace csgen
