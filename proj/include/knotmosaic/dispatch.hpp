#pragma once

#include <cstddef>
#include <vector>

#include "knotmosaic/report.hpp"
#include "knotmosaic/transfer.hpp"

namespace knotmosaic {

struct DispatchOptions {
  unsigned workers = 1;
  std::size_t bruteforce_cell_limit = 16;
  std::size_t transfer_limit = kDefaultTransferLimit;
};

// closed-form when min(m,n) <= 3, partition when 4 <= m,n <= 6, transfer
// otherwise.
Method select_method(std::size_t m, std::size_t n);

// D(m,n) with the requested method (Auto resolves via select_method). The
// report's method is the one actually used. Throws std::invalid_argument for
// zero dimensions or a method outside its domain, LimitExceeded past a guard.
CountReport count_knot_mosaics(std::size_t m, std::size_t n, Method method,
                               const DispatchOptions& options = {});

// table[i][j] = D(i+1, j+1).
std::vector<std::vector<CountReport>> d_table(std::size_t max_rows, std::size_t max_cols,
                                              const DispatchOptions& options = {});

}  // namespace knotmosaic
