#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotmosaic/grid.hpp"

namespace knotmosaic {

namespace {

constexpr std::size_t kGlyphRows = 3;
constexpr std::size_t kGlyphCols = 5;

// Connection points sit at the middle of each glyph side: column 2 of the
// top/bottom lines and the ends of the middle line. ',' marks a lower corner,
// '\'' an upper one.
constexpr std::array<std::array<std::string_view, kGlyphRows>, kTileCount> kGlyphs = {{
    {"     ", "     ", "     "},  // T0
    {"     ", "--,  ", "  |  "},  // T1
    {"     ", "  ,--", "  |  "},  // T2
    {"  |  ", "  '--", "     "},  // T3
    {"  |  ", "--'  ", "     "},  // T4
    {"     ", "-----", "     "},  // T5
    {"  |  ", "  |  ", "  |  "},  // T6
    {"  |  ", "-' ,-", "  |  "},  // T7
    {"  |  ", "-, '-", "  |  "},  // T8
    {"  |  ", "-----", "  |  "},  // T9
    {"  |  ", "--|--", "  |  "},  // T10
}};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

std::string render_ascii(const MosaicGrid& grid) {
  std::string out;
  out.reserve(grid.rows() * kGlyphRows * (grid.cols() * kGlyphCols + 1));
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t line = 0; line < kGlyphRows; ++line) {
      for (std::size_t c = 0; c < grid.cols(); ++c)
        out += kGlyphs[static_cast<std::size_t>(grid.at(r, c))][line];
      out += '\n';
    }
  return out;
}

MosaicGrid parse_ascii(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.size() % kGlyphRows != 0)
    throw std::invalid_argument("mosaic text must have a multiple of 3 lines");
  const std::size_t width = lines.front().size();
  if (width == 0 || width % kGlyphCols != 0)
    throw std::invalid_argument("mosaic text width must be a multiple of 5");
  for (auto line : lines)
    if (line.size() != width) throw std::invalid_argument("mosaic text lines differ in width");

  const std::size_t rows = lines.size() / kGlyphRows;
  const std::size_t cols = width / kGlyphCols;
  MosaicGrid grid(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      bool found = false;
      for (std::size_t t = 0; t < kTileCount && !found; ++t) {
        bool match = true;
        for (std::size_t line = 0; line < kGlyphRows && match; ++line)
          match = lines[r * kGlyphRows + line].substr(c * kGlyphCols, kGlyphCols) == kGlyphs[t][line];
        if (match) {
          grid.set(r, c, static_cast<Tile>(t));
          found = true;
        }
      }
      if (!found)
        throw std::invalid_argument("unrecognised glyph at tile (" + std::to_string(r) + ", " +
                                    std::to_string(c) + ")");
    }
  return grid;
}

}  // namespace knotmosaic
