#include "knotmosaic/matrix.hpp"

#include <stdexcept>
#include <string>

namespace knotmosaic {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

BigInt grand_sum(const Matrix& m) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j);
  return sum;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("cannot multiply " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix entrywise_square(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j) * m.at(i, j);
  return out;
}

std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels, const std::string& corner) {
  const bool label_rows = !row_labels.empty();
  std::string out;
  if (!col_labels.empty()) {
    if (label_rows) out += corner;
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
      if (label_rows || j > 0) out += ',';
      out += col_labels[j];
    }
    out += '\n';
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (label_rows) out += row_labels[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (label_rows || j > 0) out += ',';
      out += to_decimal(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_rows_json(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += to_decimal(m.at(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace knotmosaic
