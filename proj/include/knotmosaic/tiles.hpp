#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "knotmosaic/edge_word.hpp"

namespace knotmosaic {

// Tile edges in signature order.
enum class Side : std::uint8_t { Top = 0, Bottom = 1, Left = 2, Right = 3 };

inline constexpr std::array<Side, 4> kSides = {Side::Top, Side::Bottom, Side::Left,
                                               Side::Right};

Side opposite(Side side);
std::string_view side_name(Side side);

enum class Tile : std::uint8_t { T0, T1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline constexpr std::size_t kTileCount = 11;

// Four-bit connection signature; bit i is set when side i (see Side) carries a
// connection point.
using Signature = std::uint8_t;

inline constexpr std::size_t kSignatureCount = 16;

constexpr Signature side_bit(Side side) {
  return static_cast<Signature>(1u << static_cast<unsigned>(side));
}

constexpr bool has_point(Signature sig, Side side) { return (sig & side_bit(side)) != 0; }

// Bitset over the eleven tiles.
using TileMask = std::uint16_t;
inline constexpr TileMask kAllTiles = (1u << kTileCount) - 1;

constexpr TileMask tile_bit(Tile tile) {
  return static_cast<TileMask>(1u << static_cast<unsigned>(tile));
}

// Assignment of signatures to T0..T10. The standard set uses
//   T0  blank
//   T1  left+bottom arc    T2  bottom+right arc
//   T3  right+top arc      T4  top+left arc
//   T5  left+right line    T6  top+bottom line
//   T7  top-left and bottom-right arcs
//   T8  top-right and bottom-left arcs
//   T9  crossing, horizontal strand over
//   T10 crossing, vertical strand over
// Counting only depends on the multiset of signatures, so any permutation of
// T1..T6 yields identical counts.
class TileSet {
 public:
  static const TileSet& standard();

  // Throws std::invalid_argument unless the signatures form the 1/6/4 split.
  explicit TileSet(const std::array<Signature, kTileCount>& signatures);

  Signature signature(Tile tile) const { return signatures_[static_cast<std::size_t>(tile)]; }

  // Number of tiles (within `mask`) carrying signature `sig`.
  std::size_t multiplicity(Signature sig, TileMask mask = kAllTiles) const;

  // Tiles with signature `sig`, in id order.
  std::vector<Tile> tiles_with(Signature sig, TileMask mask = kAllTiles) const;

 private:
  std::array<Signature, kTileCount> signatures_;
};

Signature signature_bits(Tile tile);

// Four-edge word in (top, bottom, left, right) order.
EdgeWord signature(Tile tile);

std::string_view tile_name(Tile tile);
std::optional<Tile> tile_from_name(std::string_view text);

enum class EdgeReq : std::uint8_t { Free, MustX, MustO };

constexpr bool satisfies(EdgeReq req, bool point) {
  return req == EdgeReq::Free || (req == EdgeReq::MustO) == point;
}

// Per-edge requirements on a single tile plus an optional "not both o" pair.
struct EdgeConstraint {
  std::array<EdgeReq, 4> edges{EdgeReq::Free, EdgeReq::Free, EdgeReq::Free, EdgeReq::Free};
  std::optional<std::pair<Side, Side>> not_both_o;

  EdgeConstraint& require(Side side, EdgeReq req);
  EdgeConstraint& forbid_both_o(Side a, Side b);

  bool admits(Signature sig) const;
};

std::vector<Tile> list_matching(const EdgeConstraint& constraint,
                                const TileSet& tiles = TileSet::standard());
std::size_t count_matching(const EdgeConstraint& constraint,
                           const TileSet& tiles = TileSet::standard());

}  // namespace knotmosaic
