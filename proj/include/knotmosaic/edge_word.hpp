#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace knotmosaic {

// A fixed-length word over {x, o} describing connection-point presence along
// an ordered list of edges. Canonical index: first edge is the most
// significant bit, x = 0, o = 1. For length 2 the order is xx, xo, ox, oo.
class EdgeWord {
 public:
  static constexpr std::size_t kMaxLength = 32;

  EdgeWord() = default;
  EdgeWord(std::size_t length, std::uint32_t index);

  static EdgeWord parse(std::string_view text);
  static EdgeWord all_x(std::size_t length) { return EdgeWord(length, 0); }

  std::size_t size() const { return length_; }
  std::uint32_t index() const { return index_; }
  std::size_t count() const { return std::size_t{1} << length_; }

  // Position 0 is the first-named edge.
  bool has_point(std::size_t position) const;
  EdgeWord with(std::size_t position, bool point) const;
  std::size_t point_count() const;

  EdgeWord reversed() const;
  std::string str() const;

  friend bool operator==(const EdgeWord&, const EdgeWord&) = default;

 private:
  std::uint32_t index_ = 0;
  std::size_t length_ = 0;
};

}  // namespace knotmosaic
