#include "knotmosaic/grid.hpp"

#include <stdexcept>
#include <string>

namespace knotmosaic {

namespace {

bool point(Tile t, Side s) { return has_point(signature_bits(t), s); }

}  // namespace

MosaicGrid::MosaicGrid(std::size_t rows, std::size_t cols, Tile fill)
    : MosaicGrid(rows, cols, std::vector<Tile>(rows * cols, fill)) {}

MosaicGrid::MosaicGrid(std::size_t rows, std::size_t cols, std::vector<Tile> tiles)
    : rows_(rows), cols_(cols), tiles_(std::move(tiles)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("mosaic dimensions must be positive");
  if (tiles_.size() != rows * cols)
    throw std::invalid_argument("expected " + std::to_string(rows * cols) + " tiles, got " +
                                std::to_string(tiles_.size()));
  for (Tile t : tiles_)
    if (static_cast<std::size_t>(t) >= kTileCount) throw std::invalid_argument("unknown tile");
}

EdgeWord MosaicGrid::top_word() const {
  std::uint32_t w = 0;
  for (std::size_t c = 0; c < cols_; ++c) w = (w << 1) | point(at(0, c), Side::Top);
  return EdgeWord(cols_, w);
}

EdgeWord MosaicGrid::bottom_word() const {
  std::uint32_t w = 0;
  for (std::size_t c = 0; c < cols_; ++c) w = (w << 1) | point(at(rows_ - 1, c), Side::Bottom);
  return EdgeWord(cols_, w);
}

EdgeWord MosaicGrid::left_word() const {
  std::uint32_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w = (w << 1) | point(at(r, 0), Side::Left);
  return EdgeWord(rows_, w);
}

EdgeWord MosaicGrid::right_word() const {
  std::uint32_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w = (w << 1) | point(at(r, cols_ - 1), Side::Right);
  return EdgeWord(rows_, w);
}

MosaicGrid MosaicGrid::block(std::size_t row, std::size_t col, std::size_t rows,
                             std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) throw std::out_of_range("block outside grid");
  MosaicGrid out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, at(row + r, col + c));
  return out;
}

bool is_suitably_connected(const MosaicGrid& grid) {
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      const Tile t = grid.at(r, c);
      if (c + 1 < grid.cols() && point(t, Side::Right) != point(grid.at(r, c + 1), Side::Left))
        return false;
      if (r + 1 < grid.rows() && point(t, Side::Bottom) != point(grid.at(r + 1, c), Side::Top))
        return false;
    }
  }
  return true;
}

bool is_knot_mosaic(const MosaicGrid& grid) {
  return is_suitably_connected(grid) && grid.top_word().index() == 0 &&
         grid.bottom_word().index() == 0 && grid.left_word().index() == 0 &&
         grid.right_word().index() == 0;
}

BoundarySpec BoundarySpec::all_free(std::size_t rows, std::size_t cols) {
  return {std::vector<EdgeReq>(cols, EdgeReq::Free), std::vector<EdgeReq>(cols, EdgeReq::Free),
          std::vector<EdgeReq>(rows, EdgeReq::Free), std::vector<EdgeReq>(rows, EdgeReq::Free)};
}

BoundarySpec BoundarySpec::all_x(std::size_t rows, std::size_t cols) {
  return {std::vector<EdgeReq>(cols, EdgeReq::MustX), std::vector<EdgeReq>(cols, EdgeReq::MustX),
          std::vector<EdgeReq>(rows, EdgeReq::MustX), std::vector<EdgeReq>(rows, EdgeReq::MustX)};
}

BoundarySpec& BoundarySpec::fix(Side side, const EdgeWord& word) {
  std::vector<EdgeReq>* target = nullptr;
  switch (side) {
    case Side::Top: target = &top; break;
    case Side::Bottom: target = &bottom; break;
    case Side::Left: target = &left; break;
    case Side::Right: target = &right; break;
  }
  if (target->size() != word.size())
    throw std::invalid_argument("word length does not match the " + std::string(side_name(side)) +
                                " side");
  for (std::size_t i = 0; i < word.size(); ++i)
    (*target)[i] = word.has_point(i) ? EdgeReq::MustO : EdgeReq::MustX;
  return *this;
}

void BoundarySpec::validate(std::size_t rows, std::size_t cols) const {
  if (top.size() != cols || bottom.size() != cols || left.size() != rows || right.size() != rows)
    throw std::invalid_argument("boundary spec does not match a " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " grid");
}

}  // namespace knotmosaic
