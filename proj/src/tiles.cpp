#include "knotmosaic/tiles.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>
#include <string>

namespace knotmosaic {

namespace {

constexpr Signature kTop = side_bit(Side::Top);
constexpr Signature kBottom = side_bit(Side::Bottom);
constexpr Signature kLeft = side_bit(Side::Left);
constexpr Signature kRight = side_bit(Side::Right);
constexpr Signature kFour = kTop | kBottom | kLeft | kRight;

constexpr std::array<Signature, kTileCount> kStandard = {
    0,                 // T0
    kLeft | kBottom,   // T1
    kBottom | kRight,  // T2
    kRight | kTop,     // T3
    kTop | kLeft,      // T4
    kLeft | kRight,    // T5
    kTop | kBottom,    // T6
    kFour,             // T7
    kFour,             // T8
    kFour,             // T9
    kFour,             // T10
};

constexpr std::array<std::string_view, kTileCount> kNames = {
    "T0", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10"};

}  // namespace

Side opposite(Side side) {
  switch (side) {
    case Side::Top: return Side::Bottom;
    case Side::Bottom: return Side::Top;
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
  }
  return side;
}

std::string_view side_name(Side side) {
  switch (side) {
    case Side::Top: return "top";
    case Side::Bottom: return "bottom";
    case Side::Left: return "left";
    case Side::Right: return "right";
  }
  return "?";
}

const TileSet& TileSet::standard() {
  static const TileSet set(kStandard);
  return set;
}

TileSet::TileSet(const std::array<Signature, kTileCount>& signatures) : signatures_(signatures) {
  std::array<int, kSignatureCount> seen{};
  for (Signature s : signatures) {
    if (s >= kSignatureCount) throw std::invalid_argument("tile signature out of range");
    ++seen[s];
  }
  for (Signature s = 0; s < kSignatureCount; ++s) {
    const int points = std::popcount(static_cast<unsigned>(s));
    const int expected = points == 0 || points == 2 ? 1 : points == 4 ? 4 : 0;
    if (seen[s] != expected)
      throw std::invalid_argument("tile set must hold one blank, one tile per two-point "
                                  "signature and four four-point tiles");
  }
}

std::size_t TileSet::multiplicity(Signature sig, TileMask mask) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < kTileCount; ++i)
    if (signatures_[i] == sig && (mask >> i) & 1u) ++n;
  return n;
}

std::vector<Tile> TileSet::tiles_with(Signature sig, TileMask mask) const {
  std::vector<Tile> out;
  for (std::size_t i = 0; i < kTileCount; ++i)
    if (signatures_[i] == sig && (mask >> i) & 1u) out.push_back(static_cast<Tile>(i));
  return out;
}

Signature signature_bits(Tile tile) { return TileSet::standard().signature(tile); }

EdgeWord signature(Tile tile) {
  const Signature s = signature_bits(tile);
  std::uint32_t word = 0;
  for (Side side : kSides) word = (word << 1) | (has_point(s, side) ? 1u : 0u);
  return EdgeWord(4, word);
}

std::string_view tile_name(Tile tile) { return kNames[static_cast<std::size_t>(tile)]; }

std::optional<Tile> tile_from_name(std::string_view text) {
  if (!text.empty() && (text.front() == 'T' || text.front() == 't')) text.remove_prefix(1);
  unsigned id = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty() || id >= kTileCount)
    return std::nullopt;
  return static_cast<Tile>(id);
}

EdgeConstraint& EdgeConstraint::require(Side side, EdgeReq req) {
  if (not_both_o && req == EdgeReq::MustO) {
    const auto [a, b] = *not_both_o;
    const Side other = side == a ? b : side == b ? a : side;
    if (other != side && edges[static_cast<int>(other)] == EdgeReq::MustO)
      throw std::invalid_argument("constraint requires o on both edges of a not-both-o pair");
  }
  edges[static_cast<int>(side)] = req;
  return *this;
}

EdgeConstraint& EdgeConstraint::forbid_both_o(Side a, Side b) {
  if (a == b) throw std::invalid_argument("not-both-o pair needs two distinct edges");
  if (edges[static_cast<int>(a)] == EdgeReq::MustO && edges[static_cast<int>(b)] == EdgeReq::MustO)
    throw std::invalid_argument("constraint requires o on both edges of a not-both-o pair");
  not_both_o = std::make_pair(a, b);
  return *this;
}

bool EdgeConstraint::admits(Signature sig) const {
  for (Side side : kSides)
    if (!satisfies(edges[static_cast<int>(side)], has_point(sig, side))) return false;
  if (not_both_o && has_point(sig, not_both_o->first) && has_point(sig, not_both_o->second))
    return false;
  return true;
}

std::vector<Tile> list_matching(const EdgeConstraint& constraint, const TileSet& tiles) {
  std::vector<Tile> out;
  for (std::size_t i = 0; i < kTileCount; ++i) {
    const auto t = static_cast<Tile>(i);
    if (constraint.admits(tiles.signature(t))) out.push_back(t);
  }
  return out;
}

std::size_t count_matching(const EdgeConstraint& constraint, const TileSet& tiles) {
  return list_matching(constraint, tiles).size();
}

}  // namespace knotmosaic
