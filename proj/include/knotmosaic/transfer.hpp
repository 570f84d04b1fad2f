#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/report.hpp"

namespace knotmosaic {

// Column-to-column transfer operator for knot mosaics with m rows. Entry
// (l, r) is the number of single columns of m tiles whose left edges read l
// and right edges read r (top to bottom, top row most significant), with the
// column's top and bottom edges blank. Stored sparsely by row.
class TransferMatrix {
 public:
  explicit TransferMatrix(std::size_t m);

  std::size_t m() const { return m_; }
  std::size_t size() const { return std::size_t{1} << m_; }

  std::uint64_t at(std::uint32_t left, std::uint32_t right) const;
  const std::vector<std::pair<std::uint32_t, std::uint64_t>>& row(std::uint32_t left) const {
    return rows_[left];
  }
  std::size_t nonzeros() const;

 private:
  friend TransferMatrix column_transfer_matrix(std::size_t m, std::size_t limit);

  std::size_t m_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows_;
};

inline constexpr std::size_t kDefaultTransferLimit = 12;

// Throws LimitExceeded when m > limit, std::invalid_argument when m == 0.
TransferMatrix column_transfer_matrix(std::size_t m, std::size_t limit = kDefaultTransferLimit);

// D(m,n): the (all-x, all-x) entry of the n-th power of the transfer matrix,
// by n vector-matrix products.
CountReport knot_count_transfer(std::size_t m, std::size_t n,
                                std::size_t limit = kDefaultTransferLimit);

// D(1,n) = 1, D(2,n) = 2^(n-1) (n >= 2), D(3,n) = 2(9*6^(n-2)+1)/5 (n >= 3).
// Throws std::invalid_argument outside those domains.
BigInt closed_form_d(std::size_t m, std::size_t n);

struct Bounds {
  Rational lower;
  Rational upper;
};

// 2^k c <= D(m,n) <= (22/5)^k c with k = (m-3)(n-3) and
// c = (2/275)(9*6^(m-2)+1)(9*6^(n-2)+1). Requires m, n >= 3.
Bounds bounds(std::size_t m, std::size_t n);

std::string to_csv(const TransferMatrix& t);
std::string to_json(const TransferMatrix& t);

}  // namespace knotmosaic
