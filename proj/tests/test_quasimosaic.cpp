#include <stdexcept>

#include "doctest.h"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/quasimosaic.hpp"
#include "knotmosaic/transfer.hpp"

using namespace knotmosaic;

namespace {

const std::array<EdgeWord, 3> kNonOO = {EdgeWord::parse("xx"), EdgeWord::parse("xo"),
                                        EdgeWord::parse("ox")};
const EdgeWord kOO = EdgeWord::parse("oo");

std::uint32_t rotate(std::uint32_t word) { return ((word >> 1) | ((word & 1u) << 3)) & 0xF; }

}  // namespace

TEST_CASE("centre-word classes of (3,3)-quasimosaics") {
  const auto c = q33_center_class_counts();
  CHECK(c.all_x == 14641);
  CHECK(c.opposite == 143648);
  CHECK(c.adjacent == 297880);
  CHECK(c.all_o == 1635808);
  CHECK(c.total() == 2091977);
  CHECK(c.total() == count_constrained(3, 3, BoundarySpec::all_free(3, 3)));
  CHECK(2 * c.total() == knot_count_transfer(5, 5).value);
}

TEST_CASE("centre-word counts are invariant under rotating the word") {
  const auto words = center_word_counts();
  for (std::uint32_t w = 0; w < 16; ++w) {
    CHECK(words[w] == words[rotate(w)]);
    if (__builtin_popcount(w) % 2 == 1) CHECK(words[w] == 0);
  }
  CHECK(center_word_counts(CountOptions{3, 16, {}}) == words);
}

TEST_CASE("shape counts P1..P9") {
  const std::array<std::uint64_t, 9> expected{2, 5, 4, 7, 10, 22, 11, 32, 98};
  CHECK(type_counts() == expected);

  for (const auto& w : kNonOO) {
    CHECK(count_shape(ShapeType::P1, w) == 2);
    CHECK(count_shape(ShapeType::P3, w, EdgeWord::parse("x")) == 4);
    CHECK(count_shape(ShapeType::P4, w, EdgeWord::parse("o")) == 7);
    CHECK(count_shape(ShapeType::P8, kOO, w) == 32);
    CHECK(count_shape(ShapeType::P8, w, kOO) == 32);
    for (const auto& v : kNonOO) CHECK(count_shape(ShapeType::P7, w, v) == 11);
  }
  CHECK(count_shape(ShapeType::P2, kOO) == 5);
  CHECK(count_shape(ShapeType::P5, kOO, EdgeWord::parse("x")) == 10);
  CHECK(count_shape(ShapeType::P6, kOO, EdgeWord::parse("o")) == 22);
  CHECK(count_shape(ShapeType::P9, kOO, kOO) == 98);

  CHECK_THROWS_AS(count_shape(ShapeType::P1, kOO), std::invalid_argument);
  CHECK_THROWS_AS(count_shape(ShapeType::P4, kOO, EdgeWord::parse("o")), std::invalid_argument);
  CHECK_THROWS_AS(count_shape(ShapeType::P5, kOO, EdgeWord::parse("o")), std::invalid_argument);
  CHECK_THROWS_AS(count_shape(ShapeType::P9, kOO, kNonOO[0]), std::invalid_argument);
  CHECK_THROWS_AS(count_shape(ShapeType::P3, kNonOO[0], kNonOO[0]), std::invalid_argument);
}

TEST_CASE("twofold extensions of a blank tile") {
  const auto ext = twofold_extensions(MosaicGrid(1, 1, Tile::T0));
  REQUIRE(ext.size() == 2);
  const MosaicGrid blank(3, 3, Tile::T0);
  const MosaicGrid ring(3, 3, {Tile::T2, Tile::T5, Tile::T1, Tile::T6, Tile::T0, Tile::T6,
                               Tile::T3, Tile::T5, Tile::T4});
  CHECK(((ext[0] == blank && ext[1] == ring) || (ext[0] == ring && ext[1] == blank)));
}

TEST_CASE("twofold rule: every small quasimosaic has exactly two extensions") {
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    std::size_t total = 0;
    for_each_quasimosaic(p, q, BoundarySpec::all_free(p, q), [&](const MosaicGrid& g) {
      const auto ext = twofold_extensions(g);
      REQUIRE(ext.size() == 2);
      CHECK(ext[0] != ext[1]);
      for (const auto& e : ext) {
        CHECK(is_knot_mosaic(e));
        CHECK(e.block(1, 1, p, q) == g);
      }
      total += ext.size();
    });
    CHECK(knot_count_transfer(p + 2, q + 2).value == total);
  }
  CHECK(closed_form_d(3, 4) == 130);
}

TEST_CASE("twofold extensions reject disconnected input") {
  CHECK_THROWS_AS(twofold_extensions(MosaicGrid(1, 2, {Tile::T5, Tile::T0})), std::invalid_argument);
}
