#pragma once

#include <cstddef>
#include <string>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/matrix.hpp"
#include "knotmosaic/report.hpp"
#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

// Counts of (p,q)-quasimosaics (p rows, q columns) by boundary words.
// Row index: word on the q bottom edges, left to right.
// Column index: word on the p rightmost edges, top to bottom.
// Top and left boundaries are unconstrained.
//
// With these semantics the product P(p,q) * P(p',q') counts the shape obtained
// by gluing a (q, p') block, read as P(p',q') rotated a quarter turn, to the
// right of the (p,q) block: the left edges of the right block, top to bottom,
// become its bottom word left to right.
struct PartitionMatrix {
  std::size_t p = 0;
  std::size_t q = 0;
  Matrix entries;
};

struct PartitionOptions {
  // Guard on each of p and q.
  std::size_t max_side = 3;
  TileSet tiles = TileSet::standard();
};

// Built in a single sweep over all quasimosaics, bucketed by boundary words.
// Throws LimitExceeded when p or q exceeds the guard.
PartitionMatrix partition_matrix(std::size_t p, std::size_t q, const PartitionOptions& options = {});

std::string to_csv(const PartitionMatrix& m);
// {"p":P,"q":Q,"rows":[[...],...]} with plain decimal integers.
std::string to_json(const PartitionMatrix& m);

// D(m,n) for 4 <= m,n <= 6 by the partition-matrix recipes (order of m, n is
// irrelevant). (5,5) falls back to counting (3,3)-quasimosaics directly.
// Throws std::invalid_argument outside that range.
CountReport d_via_partition(std::size_t m, std::size_t n, unsigned workers = 1);

}  // namespace knotmosaic
