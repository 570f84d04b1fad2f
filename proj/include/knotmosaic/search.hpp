#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

// Edge status during and after a search.
enum class EdgeState : std::int8_t { Unknown = -1, X = 0, O = 1 };

// Exhaustive backtracking over tile placements in a rows x cols frame.
//
// Edges are numbered globally: horizontal edges first (line r = 0..rows, column
// c), then vertical edges (row r, line c = 0..cols). Any edge may carry a
// requirement, interior ones included. Cells may be removed from the frame to
// model non-rectangular shapes; edges between a present and an absent cell are
// boundary edges of the shape.
//
// The search branches over signatures rather than tiles and weights each leaf
// by the product of signature multiplicities, so counts are exact tile counts.
// An edge is checked as soon as its first incident cell is placed and
// matched as soon as the second one is.
class GridSearch {
 public:
  GridSearch(std::size_t rows, std::size_t cols, const TileSet& tiles = TileSet::standard());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t edge_count() const { return horizontal_count() + (cols_ + 1) * rows_; }

  std::size_t horizontal_edge(std::size_t line, std::size_t col) const;
  std::size_t vertical_edge(std::size_t row, std::size_t line) const;
  std::size_t cell_edge(std::size_t row, std::size_t col, Side side) const;

  GridSearch& remove_cell(std::size_t row, std::size_t col);
  GridSearch& restrict_cell(std::size_t row, std::size_t col, TileMask mask);
  GridSearch& require(std::size_t edge, EdgeReq req);
  // Requirements on the outer frame boundary.
  GridSearch& require_boundary(const BoundarySpec& spec);

  // Cell visit order as row * cols + col indices; must be a permutation of the
  // present cells. Defaults to row-major.
  GridSearch& set_order(std::vector<std::size_t> order);

  std::size_t present_cells() const;
  // Present cells that admit more than one tile.
  std::size_t free_cells() const;

  struct Leaf {
    std::span<const EdgeState> edges;
    std::span<const Signature> signatures;  // by cell index; meaningless for absent cells
    std::uint64_t weight;                   // number of tile grids behind this leaf
  };

  // Visits every consistent signature assignment sequentially, in order.
  void for_each_leaf(const std::function<void(const Leaf&)>& visit) const;

  // Visits every tile-level grid. Absent cells hold T0.
  void for_each_grid(const std::function<void(const MosaicGrid&)>& visit) const;

  // Exact number of tile grids. Work is split by the assignments of the first
  // cells in visit order and shared across `workers` threads.
  BigInt count(unsigned workers = 1) const;

 private:
  std::size_t horizontal_count() const { return (rows_ + 1) * cols_; }

  struct Walker;

  std::size_t rows_;
  std::size_t cols_;
  TileSet tiles_;
  std::vector<bool> present_;
  std::vector<TileMask> masks_;
  std::vector<EdgeReq> reqs_;
  std::vector<std::size_t> order_;
};

// Effective worker count: `requested` (0 = hardware concurrency) capped by the
// KNOTMOSAIC_MAX_WORKERS environment variable when set.
unsigned resolve_workers(unsigned requested);

}  // namespace knotmosaic
