#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/edge_word.hpp"
#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

// A rows x cols array of tiles (a mosaic, or a quasimosaic when its boundary
// carries connection points). Cells are addressed (row, col) from 0 with row 0
// at the top, so cell (i-1, j-1) is the conventional M_ij.
class MosaicGrid {
 public:
  MosaicGrid(std::size_t rows, std::size_t cols, Tile fill = Tile::T0);
  MosaicGrid(std::size_t rows, std::size_t cols, std::vector<Tile> tiles);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Tile at(std::size_t row, std::size_t col) const { return tiles_[row * cols_ + col]; }
  void set(std::size_t row, std::size_t col, Tile tile) { tiles_[row * cols_ + col] = tile; }
  const std::vector<Tile>& tiles() const { return tiles_; }

  // Outer boundary words: top/bottom read left to right, left/right read top
  // to bottom.
  EdgeWord top_word() const;
  EdgeWord bottom_word() const;
  EdgeWord left_word() const;
  EdgeWord right_word() const;

  // Copy of the block with the given origin and extent.
  MosaicGrid block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;

  friend bool operator==(const MosaicGrid&, const MosaicGrid&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Tile> tiles_;
};

bool is_suitably_connected(const MosaicGrid& grid);
bool is_knot_mosaic(const MosaicGrid& grid);

// Requirements on the outer boundary of a rows x cols grid. top/bottom have
// one entry per column (left to right), left/right one per row (top to
// bottom).
struct BoundarySpec {
  std::vector<EdgeReq> top;
  std::vector<EdgeReq> bottom;
  std::vector<EdgeReq> left;
  std::vector<EdgeReq> right;

  static BoundarySpec all_free(std::size_t rows, std::size_t cols);
  static BoundarySpec all_x(std::size_t rows, std::size_t cols);

  // Pins a side to a word (length must match the side).
  BoundarySpec& fix(Side side, const EdgeWord& word);

  // Throws std::invalid_argument when the lengths do not match rows x cols.
  void validate(std::size_t rows, std::size_t cols) const;
};

std::string render_ascii(const MosaicGrid& grid);

// Inverse of render_ascii; throws std::invalid_argument on malformed input.
MosaicGrid parse_ascii(std::string_view text);

}  // namespace knotmosaic
