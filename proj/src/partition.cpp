#include "knotmosaic/partition.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotmosaic/edge_word.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/quasimosaic.hpp"
#include "knotmosaic/search.hpp"

namespace knotmosaic {

namespace {

std::vector<std::string> word_labels(std::size_t length) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < (1u << length); ++i) out.push_back(EdgeWord(length, i).str());
  return out;
}

}  // namespace

PartitionMatrix partition_matrix(std::size_t p, std::size_t q, const PartitionOptions& options) {
  if (p == 0 || q == 0) throw std::invalid_argument("quasimosaic dimensions must be positive");
  if (p > options.max_side || q > options.max_side)
    throw LimitExceeded("partition matrices are limited to sides <= " +
                        std::to_string(options.max_side) +
                        "; use the transfer method for larger knot mosaics");

  GridSearch search(p, q, options.tiles);
  const std::size_t n_bottom = std::size_t{1} << q;
  const std::size_t n_right = std::size_t{1} << p;
  std::vector<unsigned __int128> buckets(n_bottom * n_right, 0);

  std::vector<std::size_t> bottom_edges, right_edges;
  for (std::size_t c = 0; c < q; ++c) bottom_edges.push_back(search.horizontal_edge(p, c));
  for (std::size_t r = 0; r < p; ++r) right_edges.push_back(search.vertical_edge(r, q));

  search.for_each_leaf([&](const GridSearch::Leaf& leaf) {
    std::size_t bottom = 0, right = 0;
    for (std::size_t e : bottom_edges) bottom = (bottom << 1) | (leaf.edges[e] == EdgeState::O);
    for (std::size_t e : right_edges) right = (right << 1) | (leaf.edges[e] == EdgeState::O);
    buckets[bottom * n_right + right] += leaf.weight;
  });

  PartitionMatrix out{p, q, Matrix(n_bottom, n_right)};
  for (std::size_t i = 0; i < n_bottom; ++i)
    for (std::size_t j = 0; j < n_right; ++j) out.entries.at(i, j) = from_u128(buckets[i * n_right + j]);
  return out;
}

std::string to_csv(const PartitionMatrix& m) {
  return matrix_to_csv(m.entries, word_labels(m.q), word_labels(m.p), "bottom\\right");
}

std::string to_json(const PartitionMatrix& m) {
  return "{\"p\":" + std::to_string(m.p) + ",\"q\":" + std::to_string(m.q) +
         ",\"rows\":" + matrix_rows_json(m.entries) + "}";
}

CountReport d_via_partition(std::size_t m, std::size_t n, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t lo = std::min(m, n);
  const std::size_t hi = std::max(m, n);
  if (lo < 4 || hi > 6)
    throw std::invalid_argument("partition recipes cover 4 <= m, n <= 6, got (" +
                                std::to_string(m) + ", " + std::to_string(n) + ")");

  BigInt quasi;
  if (lo == 5 && hi == 5) {
    quasi = count_constrained(3, 3, BoundarySpec::all_free(3, 3), CountOptions{workers, 16, {}});
  } else {
    const Matrix p22 = partition_matrix(2, 2).entries;
    const Matrix p12 = partition_matrix(1, 2).entries;
    if (lo == 4 && hi == 4) quasi = grand_sum(p22);
    else if (lo == 4 && hi == 5) quasi = grand_sum(multiply(p22, p12));
    else if (lo == 4 && hi == 6) quasi = grand_sum(multiply(p22, p22));
    else if (lo == 5 && hi == 6) quasi = grand_sum(entrywise_square(multiply(p22, p12)));
    else quasi = grand_sum(entrywise_square(multiply(p22, p22)));
  }

  CountReport report;
  report.m = m;
  report.n = n;
  report.value = 2 * quasi;
  report.method = Method::Partition;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace knotmosaic
