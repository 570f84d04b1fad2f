#include "knotmosaic/quasimosaic.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "knotmosaic/errors.hpp"
#include "knotmosaic/search.hpp"

namespace knotmosaic {

namespace {

GridSearch make_search(std::size_t rows, std::size_t cols, const BoundarySpec& boundary,
                       const CountOptions& options) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  if (rows * cols > options.cell_limit)
    throw LimitExceeded("backtracking guard: " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds " + std::to_string(options.cell_limit) +
                        " cells; use the transfer method for larger knot mosaics");
  GridSearch search(rows, cols);
  search.require_boundary(boundary);
  if (!options.order.empty()) search.set_order(options.order);
  return search;
}

TileMask mask_of(Signature sig) {
  TileMask mask = 0;
  for (Tile t : TileSet::standard().tiles_with(sig)) mask |= tile_bit(t);
  return mask;
}

EdgeReq req_of(bool point) { return point ? EdgeReq::MustO : EdgeReq::MustX; }

// Pins (bottom, right) of cell (row, col) to a two-letter word.
void pin_bottom_right(GridSearch& s, std::size_t row, std::size_t col, const EdgeWord& word) {
  s.require(s.cell_edge(row, col, Side::Bottom), req_of(word.has_point(0)));
  s.require(s.cell_edge(row, col, Side::Right), req_of(word.has_point(1)));
}

bool is_oo(const EdgeWord& w) { return w.index() == 3; }

void expect_len(const EdgeWord& w, std::size_t len, const char* what) {
  if (w.size() != len)
    throw std::invalid_argument(std::string(what) + " must have length " + std::to_string(len));
}

}  // namespace

BigInt count_constrained(std::size_t rows, std::size_t cols, const BoundarySpec& boundary,
                         const CountOptions& options) {
  return make_search(rows, cols, boundary, options).count(options.workers);
}

std::array<BigInt, 16> center_word_counts(const CountOptions& options) {
  std::array<BigInt, 16> out;
  for (Signature sig = 0; sig < kSignatureCount; ++sig) {
    const std::uint32_t word = (has_point(sig, Side::Top) ? 8u : 0u) |
                               (has_point(sig, Side::Right) ? 4u : 0u) |
                               (has_point(sig, Side::Bottom) ? 2u : 0u) |
                               (has_point(sig, Side::Left) ? 1u : 0u);
    const TileMask mask = mask_of(sig);
    if (mask == 0) {
      out[word] = 0;
      continue;
    }
    GridSearch search = make_search(3, 3, BoundarySpec::all_free(3, 3), options);
    search.restrict_cell(1, 1, mask);
    out[word] = search.count(options.workers);
  }
  return out;
}

CenterClassCounts q33_center_class_counts(const CountOptions& options) {
  const auto words = center_word_counts(options);
  CenterClassCounts out{0, 0, 0, 0};
  for (std::uint32_t w = 0; w < 16; ++w) {
    switch (std::popcount(w)) {
      case 0: out.all_x += words[w]; break;
      case 4: out.all_o += words[w]; break;
      case 2:
        // Opposite edges sit two apart in the cyclic order: 1010 or 0101.
        if (w == 0b1010 || w == 0b0101)
          out.opposite += words[w];
        else
          out.adjacent += words[w];
        break;
      default: break;  // odd words have no tiles
    }
  }
  return out;
}

std::uint64_t count_shape(ShapeType type, const EdgeWord& pair, const EdgeWord& second) {
  expect_len(pair, 2, "first pinned pair");
  const auto number = static_cast<int>(type);
  if (number < 1 || number > 9) throw std::invalid_argument("unknown shape type");

  auto to_u64 = [](const BigInt& v) { return static_cast<std::uint64_t>(v.get_ui()); };

  if (number <= 2) {
    if (is_oo(pair) != (type == ShapeType::P2))
      throw std::invalid_argument("pinned pair does not belong to this type");
    GridSearch s(1, 1);
    pin_bottom_right(s, 0, 0, pair);
    return to_u64(s.count());
  }

  if (number <= 6) {
    // M at (0,0), N at (0,1); N's bottom and right pinned, M's bottom pinned.
    expect_len(second, 1, "single pinned edge");
    const bool want_oo = type == ShapeType::P5 || type == ShapeType::P6;
    const bool want_o = type == ShapeType::P4 || type == ShapeType::P6;
    if (is_oo(pair) != want_oo || second.has_point(0) != want_o)
      throw std::invalid_argument("pinned words do not belong to this type");
    GridSearch s(1, 2);
    pin_bottom_right(s, 0, 1, pair);
    s.require(s.cell_edge(0, 0, Side::Bottom), req_of(second.has_point(0)));
    return to_u64(s.count());
  }

  // L-tromino: M at (0,0), N at (0,1), S at (1,0); (1,1) is outside the shape.
  expect_len(second, 2, "second pinned pair");
  const int oo_pairs = (is_oo(pair) ? 1 : 0) + (is_oo(second) ? 1 : 0);
  if (oo_pairs != number - 7) throw std::invalid_argument("pinned pairs do not belong to this type");
  GridSearch s(2, 2);
  s.remove_cell(1, 1);
  pin_bottom_right(s, 0, 1, pair);
  pin_bottom_right(s, 1, 0, second);
  return to_u64(s.count());
}

std::array<std::uint64_t, 9> type_counts() {
  const EdgeWord xx = EdgeWord::parse("xx");
  const EdgeWord oo = EdgeWord::parse("oo");
  const EdgeWord x = EdgeWord::parse("x");
  const EdgeWord o = EdgeWord::parse("o");
  return {
      count_shape(ShapeType::P1, xx),     count_shape(ShapeType::P2, oo),
      count_shape(ShapeType::P3, xx, x),  count_shape(ShapeType::P4, xx, o),
      count_shape(ShapeType::P5, oo, x),  count_shape(ShapeType::P6, oo, o),
      count_shape(ShapeType::P7, xx, xx), count_shape(ShapeType::P8, oo, xx),
      count_shape(ShapeType::P9, oo, oo),
  };
}

std::vector<MosaicGrid> twofold_extensions(const MosaicGrid& grid) {
  if (!is_suitably_connected(grid))
    throw std::invalid_argument("quasimosaic is not suitably connected");
  const std::size_t rows = grid.rows() + 2;
  const std::size_t cols = grid.cols() + 2;
  GridSearch search(rows, cols);
  search.require_boundary(BoundarySpec::all_x(rows, cols));
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c)
      search.restrict_cell(r + 1, c + 1, tile_bit(grid.at(r, c)));
  std::vector<MosaicGrid> out;
  search.for_each_grid([&](const MosaicGrid& g) { out.push_back(g); });
  return out;
}

void for_each_quasimosaic(std::size_t rows, std::size_t cols, const BoundarySpec& boundary,
                          const std::function<void(const MosaicGrid&)>& visit) {
  GridSearch search(rows, cols);
  search.require_boundary(boundary);
  search.for_each_grid(visit);
}

}  // namespace knotmosaic
