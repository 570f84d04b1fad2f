#include <algorithm>
#include <array>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/partition.hpp"
#include "knotmosaic/quasimosaic.hpp"
#include "knotmosaic/search.hpp"
#include "knotmosaic/tiles.hpp"
#include "knotmosaic/transfer.hpp"
#include "oracle.hpp"

using namespace knotmosaic;

namespace {

const Matrix kP12{{4, 4}, {4, 10}, {7, 7}, {7, 22}};
const Matrix kP22{{22, 22, 43, 43}, {22, 55, 43, 139}, {43, 43, 109, 64}, {43, 139, 64, 403}};

EdgeWord concat(const EdgeWord& a, const EdgeWord& b) {
  return EdgeWord(a.size() + b.size(), (a.index() << b.size()) | b.index());
}

// Count of rows x cols quasimosaics with the given words pinned on an
// interior horizontal line (left to right).
BigInt count_with_line(std::size_t rows, std::size_t cols, std::size_t line, const EdgeWord& w) {
  GridSearch s(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    s.require(s.horizontal_edge(line, c), w.has_point(c) ? EdgeReq::MustO : EdgeReq::MustX);
  return s.count();
}

}  // namespace

TEST_CASE("published partition matrices") {
  CHECK(partition_matrix(1, 2).entries == kP12);
  CHECK(partition_matrix(2, 2).entries == kP22);
}

TEST_CASE("P(1,1) by direct enumeration over the eleven tiles") {
  Matrix expected(2, 2);
  for (std::size_t i = 0; i < kTileCount; ++i) {
    const auto t = static_cast<Tile>(i);
    expected.at(oracle::point(t, Side::Bottom), oracle::point(t, Side::Right)) += 1;
  }
  CHECK(expected == Matrix{{2, 2}, {2, 5}});
  CHECK(partition_matrix(1, 1).entries == expected);
  CHECK(grand_sum(expected) == 11);
}

TEST_CASE("partition matrices match brute force and constrained counts") {
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q) {
      const auto pm = partition_matrix(p, q);
      REQUIRE(pm.entries.rows() == (1u << q));
      REQUIRE(pm.entries.cols() == (1u << p));
      CHECK(grand_sum(pm.entries) == count_constrained(p, q, BoundarySpec::all_free(p, q)));

      const bool exhaustive = p <= 2 && q <= 2;
      for (std::uint32_t b = 0; b < (1u << q); ++b)
        for (std::uint32_t r = 0; r < (1u << p); ++r) {
          if (!exhaustive && (b + r) % 5 != 0) continue;  // spot check at (3,*) and (*,3)
          BoundarySpec spec = BoundarySpec::all_free(p, q);
          spec.fix(Side::Bottom, EdgeWord(q, b)).fix(Side::Right, EdgeWord(p, r));
          CHECK(pm.entries.at(b, r) == count_constrained(p, q, spec));
        }

      if (p * q <= 4) {
        Matrix brute(1u << q, 1u << p);
        oracle::for_each_connected(p, q, [&](const std::vector<Tile>& t) {
          brute.at(oracle::bottom_index(t, p, q), oracle::right_index(t, p, q)) += 1;
        });
        CHECK(pm.entries == brute);
      }
    }
}

TEST_CASE("grand sums and the twofold relation") {
  CHECK(grand_sum(kP12) == 65);
  CHECK(grand_sum(kP22) == 1297);
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      CHECK(2 * grand_sum(partition_matrix(p, q).entries) == knot_count_transfer(p + 2, q + 2).value);
}

TEST_CASE("square partition matrices are symmetric") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const Matrix m = partition_matrix(k, k).entries;
    CHECK(m == m.transposed());
  }
}

TEST_CASE("P(1,2) entries follow from single-tile counts") {
  // Right tile B has (bottom, right) = (b2, r); left tile A has bottom b1 and
  // right edge equal to B's left edge.
  for (std::uint32_t b = 0; b < 4; ++b)
    for (std::uint32_t r = 0; r < 2; ++r) {
      const auto req = [](bool o) { return o ? EdgeReq::MustO : EdgeReq::MustX; };
      EdgeConstraint right_tile;
      right_tile.require(Side::Bottom, req(b & 1u)).require(Side::Right, req(r));
      std::size_t total = 0;
      for (Tile t : list_matching(right_tile)) {
        EdgeConstraint left_tile;
        left_tile.require(Side::Bottom, req(b >> 1)).require(Side::Right, req(oracle::point(t, Side::Left)));
        total += count_matching(left_tile);
      }
      CHECK(kP12.at(b, r) == total);
    }
}

TEST_CASE("quarter-turn gluing: P(1,2) counts (2,1) blocks by left word and bottom edge") {
  for (std::uint32_t w = 0; w < 4; ++w)
    for (std::uint32_t r = 0; r < 2; ++r) {
      BoundarySpec spec = BoundarySpec::all_free(2, 1);
      spec.fix(Side::Left, EdgeWord(2, w)).fix(Side::Bottom, EdgeWord(1, r));
      CHECK(count_constrained(2, 1, spec) == kP12.at(w, r));
    }
}

TEST_CASE("matrix products and squares agree with direct counts of the composed shapes") {
  const Matrix p22p12 = multiply(kP22, kP12);
  const Matrix p22p22 = multiply(kP22, kP22);
  for (std::uint32_t i = 0; i < 4; ++i) {
    const EdgeWord left(2, i);
    for (std::uint32_t j = 0; j < 2; ++j) {
      BoundarySpec spec = BoundarySpec::all_free(2, 3);
      spec.fix(Side::Bottom, concat(left, EdgeWord(1, j)));
      CHECK(p22p12.at(i, j) == count_constrained(2, 3, spec));
      const BigInt squared = p22p12.at(i, j) * p22p12.at(i, j);
      CHECK(count_with_line(4, 3, 2, concat(left, EdgeWord(1, j))) == squared);
    }
    for (std::uint32_t j = 0; j < 4; ++j) {
      // Column word of the rotated right block reads its bottom edges right to left.
      const EdgeWord bottom = concat(left, EdgeWord(2, j).reversed());
      BoundarySpec spec = BoundarySpec::all_free(2, 4);
      spec.fix(Side::Bottom, bottom);
      CHECK(p22p22.at(i, j) == count_constrained(2, 4, spec));
      CHECK(count_with_line(4, 4, 2, bottom) == p22p22.at(i, j) * p22p22.at(i, j));
    }
  }
}

TEST_CASE("recipe grand sums") {
  CHECK(grand_sum(multiply(kP22, kP12)) == 27113);
  CHECK(grand_sum(multiply(kP22, kP22)) == 572263);
  CHECK(grand_sum(entrywise_square(multiply(kP22, kP12))) == 165872981);
  CHECK(grand_sum(entrywise_square(multiply(kP22, kP22))) == BigInt("50696705563"));
  CHECK(multiply(Matrix::identity(4), kP12) == kP12);
  CHECK(entrywise_square(Matrix(3, 2)) == Matrix(3, 2));
  CHECK_THROWS_AS(multiply(kP12, kP22), std::invalid_argument);
}

TEST_CASE("d_via_partition reproduces the table") {
  const std::array<std::tuple<int, int, const char*>, 6> table{{{4, 4, "2594"},
                                                                 {4, 5, "54226"},
                                                                 {4, 6, "1144526"},
                                                                 {5, 5, "4183954"},
                                                                 {5, 6, "331745962"},
                                                                 {6, 6, "101393411126"}}};
  for (const auto& [m, n, v] : table) {
    CHECK(d_via_partition(m, n).value == BigInt(v));
    CHECK(d_via_partition(n, m).value == BigInt(v));
    CHECK(d_via_partition(m, n).method == Method::Partition);
  }
  CHECK_THROWS_AS(d_via_partition(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(d_via_partition(4, 7), std::invalid_argument);
}

TEST_CASE("relabelling T1..T6 leaves the partition matrices unchanged") {
  std::array<Signature, 6> two_point;
  for (std::size_t i = 0; i < 6; ++i) two_point[i] = signature_bits(static_cast<Tile>(i + 1));
  std::sort(two_point.begin(), two_point.end());
  std::size_t permutations = 0;
  do {
    std::array<Signature, kTileCount> sigs{};
    for (std::size_t i = 0; i < kTileCount; ++i) sigs[i] = signature_bits(static_cast<Tile>(i));
    std::copy(two_point.begin(), two_point.end(), sigs.begin() + 1);
    PartitionOptions opts;
    opts.tiles = TileSet(sigs);
    REQUIRE(partition_matrix(1, 2, opts).entries == kP12);
    if (permutations % 60 == 0) {
      GridSearch s(1, 2, opts.tiles);
      std::size_t grids = 0;
      s.for_each_grid([&](const MosaicGrid&) { ++grids; });
      CHECK(grids == 65);
    }
    ++permutations;
  } while (std::next_permutation(two_point.begin(), two_point.end()));
  CHECK(permutations == 720);
}

TEST_CASE("partition matrix dumps and guards") {
  const auto pm = partition_matrix(1, 2);
  CHECK(to_csv(pm) == "bottom\\right,x,o\nxx,4,4\nxo,4,10\nox,7,7\noo,7,22\n");
  const auto j = nlohmann::json::parse(to_json(partition_matrix(2, 2)));
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 2);
  CHECK(j["rows"][3][3] == 403);
  CHECK(j["rows"].size() == 4);
  CHECK_THROWS_AS(partition_matrix(4, 1), LimitExceeded);
  CHECK_THROWS_AS(partition_matrix(0, 1), std::invalid_argument);
}
