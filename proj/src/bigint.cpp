#include "knotmosaic/bigint.hpp"

namespace knotmosaic {

BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

BigInt from_u128(unsigned __int128 value) {
  BigInt out = from_u64(static_cast<std::uint64_t>(value >> 64));
  out <<= 64;
  out += from_u64(static_cast<std::uint64_t>(value));
  return out;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string group_digits(const BigInt& value) {
  std::string digits = value.get_str(10);
  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out;
  const std::size_t lead = digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i - lead) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return sign + out;
}

}  // namespace knotmosaic
