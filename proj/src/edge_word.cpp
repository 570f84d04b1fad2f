#include "knotmosaic/edge_word.hpp"

#include <bit>
#include <stdexcept>

namespace knotmosaic {

EdgeWord::EdgeWord(std::size_t length, std::uint32_t index) : index_(index), length_(length) {
  if (length > kMaxLength) throw std::invalid_argument("edge word longer than 32");
  if (length < kMaxLength && (index >> length) != 0)
    throw std::invalid_argument("edge word index out of range");
}

EdgeWord EdgeWord::parse(std::string_view text) {
  if (text.size() > kMaxLength) throw std::invalid_argument("edge word longer than 32");
  std::uint32_t index = 0;
  for (char ch : text) {
    if (ch != 'x' && ch != 'o')
      throw std::invalid_argument("edge word must contain only 'x' and 'o': " + std::string(text));
    index = (index << 1) | (ch == 'o' ? 1u : 0u);
  }
  return EdgeWord(text.size(), index);
}

bool EdgeWord::has_point(std::size_t position) const {
  return ((index_ >> (length_ - 1 - position)) & 1u) != 0;
}

EdgeWord EdgeWord::with(std::size_t position, bool point) const {
  const std::uint32_t bit = 1u << (length_ - 1 - position);
  return EdgeWord(length_, point ? (index_ | bit) : (index_ & ~bit));
}

std::size_t EdgeWord::point_count() const { return static_cast<std::size_t>(std::popcount(index_)); }

EdgeWord EdgeWord::reversed() const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < length_; ++i) out |= ((index_ >> i) & 1u) << (length_ - 1 - i);
  return EdgeWord(length_, out);
}

std::string EdgeWord::str() const {
  std::string out(length_, 'x');
  for (std::size_t i = 0; i < length_; ++i)
    if (has_point(i)) out[i] = 'o';
  return out;
}

}  // namespace knotmosaic
