#include "knotmosaic/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "knotmosaic/grid.hpp"
#include "knotmosaic/partition.hpp"
#include "knotmosaic/quasimosaic.hpp"

namespace knotmosaic {

Method select_method(std::size_t m, std::size_t n) {
  const std::size_t lo = std::min(m, n);
  const std::size_t hi = std::max(m, n);
  if (lo <= 3) return Method::ClosedForm;
  if (hi <= 6) return Method::Partition;
  return Method::Transfer;
}

CountReport count_knot_mosaics(std::size_t m, std::size_t n, Method method,
                               const DispatchOptions& options) {
  if (m == 0 || n == 0) throw std::invalid_argument("dimensions must be at least 1");
  if (method == Method::Auto) method = select_method(m, n);

  switch (method) {
    case Method::Partition: return d_via_partition(m, n, options.workers);
    case Method::Transfer: return knot_count_transfer(m, n, options.transfer_limit);
    case Method::ClosedForm: {
      const auto start = std::chrono::steady_clock::now();
      CountReport r;
      r.m = m;
      r.n = n;
      r.value = closed_form_d(std::min(m, n), std::max(m, n));
      r.method = Method::ClosedForm;
      r.elapsed = std::chrono::steady_clock::now() - start;
      return r;
    }
    case Method::BruteForce: {
      const auto start = std::chrono::steady_clock::now();
      CountReport r;
      r.m = m;
      r.n = n;
      r.value = count_constrained(m, n, BoundarySpec::all_x(m, n),
                                  CountOptions{options.workers, options.bruteforce_cell_limit, {}});
      r.method = Method::BruteForce;
      r.elapsed = std::chrono::steady_clock::now() - start;
      return r;
    }
    case Method::Auto: break;
  }
  throw std::logic_error("unreachable method");
}

std::vector<std::vector<CountReport>> d_table(std::size_t max_rows, std::size_t max_cols,
                                              const DispatchOptions& options) {
  std::vector<std::vector<CountReport>> table(max_rows);
  for (std::size_t m = 1; m <= max_rows; ++m)
    for (std::size_t n = 1; n <= max_cols; ++n)
      table[m - 1].push_back(count_knot_mosaics(m, n, Method::Auto, options));
  return table;
}

}  // namespace knotmosaic
