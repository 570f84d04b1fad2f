#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace knotmosaic {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt from_u128(unsigned __int128 value);
BigInt from_u64(std::uint64_t value);

// Plain decimal, no separators.
std::string to_decimal(const BigInt& value);

// Decimal with ',' every three digits, for human-facing output only.
std::string group_digits(const BigInt& value);

}  // namespace knotmosaic
