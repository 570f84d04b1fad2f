#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/edge_word.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

struct CountOptions {
  unsigned workers = 1;
  // Backtracking guard on rows * cols.
  std::size_t cell_limit = 16;
  // Optional cell visit order (row-major indices); empty means row-major.
  std::vector<std::size_t> order;
};

// Number of suitably connected rows x cols grids whose outer boundary edges
// satisfy `boundary`. Throws LimitExceeded past options.cell_limit.
BigInt count_constrained(std::size_t rows, std::size_t cols, const BoundarySpec& boundary,
                         const CountOptions& options = {});

// Counts of (3,3)-quasimosaics by the connection word on the four edges of the
// centre tile, read in (top, right, bottom, left) order. Index = word index.
std::array<BigInt, 16> center_word_counts(const CountOptions& options = {});

struct CenterClassCounts {
  BigInt all_x;     // xxxx
  BigInt opposite;  // two points on opposite edges
  BigInt adjacent;  // two points on adjacent edges
  BigInt all_o;     // oooo

  BigInt total() const { return all_x + opposite + adjacent + all_o; }
};

CenterClassCounts q33_center_class_counts(const CountOptions& options = {});

// The nine constrained shapes around a main tile M:
//   P1, P2  single tile; (bottom, right) pinned to a non-oo word / oo.
//   P3..P6  M with a right neighbour N; N's (bottom, right) pinned (pair),
//           M's bottom pinned (single); the shared edge is summed over.
//           P3: pair non-oo, single x   P4: pair non-oo, single o
//           P5: pair oo, single x       P6: pair oo, single o
//   P7..P9  L-tromino: M, right neighbour N, lower neighbour S; N's
//           (bottom, right) and S's (bottom, right) pinned; M and the shared
//           edges are free.
//           P7: both non-oo   P8: exactly one oo   P9: both oo
enum class ShapeType : std::uint8_t { P1 = 1, P2, P3, P4, P5, P6, P7, P8, P9 };

// Count for one shape with explicit pinned words. `pair` is always the first
// pinned pair; `second` is the single edge (length 1) for P3..P6 or the second
// pair (length 2) for P7..P9 and ignored for P1/P2. The words must belong to
// the type's class, otherwise std::invalid_argument.
std::uint64_t count_shape(ShapeType type, const EdgeWord& pair, const EdgeWord& second = {});

// |P1|..|P9| using xx as the representative non-oo word.
std::array<std::uint64_t, 9> type_counts();

// All knot (rows+2, cols+2)-mosaics whose central block equals `grid`.
// Throws std::invalid_argument if `grid` is not suitably connected.
std::vector<MosaicGrid> twofold_extensions(const MosaicGrid& grid);

// Visits every suitably connected rows x cols grid meeting `boundary`.
void for_each_quasimosaic(std::size_t rows, std::size_t cols, const BoundarySpec& boundary,
                          const std::function<void(const MosaicGrid&)>& visit);

}  // namespace knotmosaic
