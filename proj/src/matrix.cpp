#include "csgen/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "jsonl.hpp"

namespace csgen {

namespace {

void check_entry(double value, const std::filesystem::path& path) {
  if (!std::isfinite(value)) {
    throw ValidationError(path.string() + ": non-finite matrix entry");
  }
  if (value < 0.0) {
    throw ValidationError(path.string() + ": negative matrix entry");
  }
}

ScoreMatrix load_json_matrix(const std::filesystem::path& path, const std::string& body) {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("data")) {
    throw ValidationError(path.string() + ": expected {rows, cols, data}");
  }
  std::size_t rows = doc.at("rows").get<std::size_t>();
  std::size_t cols = doc.at("cols").get<std::size_t>();
  const nlohmann::json& data = doc.at("data");
  if (rows == 0 || cols == 0) throw ValidationError(path.string() + ": empty matrix");
  if (data.size() != rows * cols) {
    throw ValidationError(path.string() + ": data has " + std::to_string(data.size()) +
                          " entries, expected " + std::to_string(rows * cols));
  }
  ScoreMatrix matrix(rows, cols);
  std::size_t k = 0;
  for (const nlohmann::json& v : data) {
    double value = v.get<double>();
    check_entry(value, path);
    matrix.at(k / cols, k % cols) = value;
    ++k;
  }
  return matrix;
}

ScoreMatrix load_text_matrix(const std::filesystem::path& path, const std::string& body) {
  std::istringstream in(body);
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw ValidationError(path.string() + ": expected 'rows cols' header");
  }
  ScoreMatrix matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) {
      double value = 0.0;
      if (!(in >> value)) {
        throw ValidationError(path.string() + ": expected " + std::to_string(rows * cols) +
                              " entries");
      }
      check_entry(value, path);
      matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = value;
    }
  }
  double extra = 0.0;
  if (in >> extra) throw ValidationError(path.string() + ": trailing entries");
  return matrix;
}

}  // namespace

bool ScoreMatrix::all_zero() const {
  for (double v : data_) {
    if (v != 0.0) return false;
  }
  return true;
}

ScoreMatrix load_score_matrix(const std::filesystem::path& path) {
  std::ifstream in = detail::open_input(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string body = buffer.str();
  std::size_t first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ValidationError(path.string() + ": empty matrix file");
  if (body[first] == '{') return load_json_matrix(path, body);
  return load_text_matrix(path, body);
}

void save_score_matrix(const ScoreMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out = detail::open_output(path);
  out << matrix.rows() << ' ' << matrix.cols() << '\n';
  char buf[64];
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", matrix.at(i, j));
      out << buf << (j + 1 == matrix.cols() ? '\n' : ' ');
    }
  }
}

void check_matrix_dims(const ScoreMatrix& matrix, std::size_t target_len,
                       std::size_t source_len, const std::string& context) {
  if (matrix.rows() != target_len || matrix.cols() != source_len) {
    throw ValidationError(context + ": matrix is " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()) + " but the sentence pair is " +
                          std::to_string(target_len) + "x" + std::to_string(source_len));
  }
}

}  // namespace csgen
