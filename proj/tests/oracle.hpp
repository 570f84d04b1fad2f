#pragma once

// Brute-force reference counters for the unit tests. They enumerate raw tile
// arrays (11^cells of them) and check adjacency directly, sharing nothing with
// the backtracking engine but the tile signatures.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "knotmosaic/tiles.hpp"

namespace oracle {

using knotmosaic::Side;
using knotmosaic::Tile;

inline bool point(Tile t, Side s) {
  return knotmosaic::has_point(knotmosaic::signature_bits(t), s);
}

// Calls visit(tiles) for every suitably connected rows x cols array.
inline void for_each_connected(std::size_t rows, std::size_t cols,
                               const std::function<void(const std::vector<Tile>&)>& visit) {
  const std::size_t cells = rows * cols;
  std::vector<int> digits(cells, 0);
  std::vector<Tile> tiles(cells, Tile::T0);
  while (true) {
    for (std::size_t i = 0; i < cells; ++i) tiles[i] = static_cast<Tile>(digits[i]);
    bool ok = true;
    for (std::size_t r = 0; r < rows && ok; ++r) {
      for (std::size_t c = 0; c < cols && ok; ++c) {
        const Tile t = tiles[r * cols + c];
        if (c + 1 < cols && point(t, Side::Right) != point(tiles[r * cols + c + 1], Side::Left))
          ok = false;
        if (r + 1 < rows && point(t, Side::Bottom) != point(tiles[(r + 1) * cols + c], Side::Top))
          ok = false;
      }
    }
    if (ok) visit(tiles);
    std::size_t i = 0;
    while (i < cells && ++digits[i] == 11) digits[i++] = 0;
    if (i == cells) break;
  }
}

// Bottom word (left to right) as an index, first column most significant.
inline std::uint32_t bottom_index(const std::vector<Tile>& t, std::size_t rows, std::size_t cols) {
  std::uint32_t w = 0;
  for (std::size_t c = 0; c < cols; ++c) w = (w << 1) | point(t[(rows - 1) * cols + c], Side::Bottom);
  return w;
}

// Right word (top to bottom) as an index, top row most significant.
inline std::uint32_t right_index(const std::vector<Tile>& t, std::size_t rows, std::size_t cols) {
  std::uint32_t w = 0;
  for (std::size_t r = 0; r < rows; ++r) w = (w << 1) | point(t[r * cols + cols - 1], Side::Right);
  return w;
}

inline bool outer_blank(const std::vector<Tile>& t, std::size_t rows, std::size_t cols) {
  for (std::size_t c = 0; c < cols; ++c)
    if (point(t[c], Side::Top) || point(t[(rows - 1) * cols + c], Side::Bottom)) return false;
  for (std::size_t r = 0; r < rows; ++r)
    if (point(t[r * cols], Side::Left) || point(t[r * cols + cols - 1], Side::Right)) return false;
  return true;
}

}  // namespace oracle
