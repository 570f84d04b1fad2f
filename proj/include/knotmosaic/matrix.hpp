#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "knotmosaic/bigint.hpp"

namespace knotmosaic {

// Dense matrix of unbounded integers, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }
  const BigInt& at(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt grand_sum(const Matrix& m);

// Throws std::invalid_argument when a.cols() != b.rows().
Matrix multiply(const Matrix& a, const Matrix& b);

Matrix entrywise_square(const Matrix& m);

// Labelled CSV: a header "<corner>,<col labels...>" then one line per row
// "<row label>,<entries...>". Labels may be empty, in which case the
// corresponding header/column is omitted. Entries are plain decimal.
std::string matrix_to_csv(const Matrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels,
                          const std::string& corner);

// "[[a,b],[c,d]]" with plain decimal integers.
std::string matrix_rows_json(const Matrix& m);

}  // namespace knotmosaic
