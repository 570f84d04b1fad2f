#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "knotmosaic/bigint.hpp"

namespace knotmosaic {

enum class Method { Partition, Transfer, BruteForce, ClosedForm, Auto };

std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

struct CountReport {
  std::size_t m = 0;
  std::size_t n = 0;
  BigInt value;
  Method method = Method::Auto;
  std::chrono::nanoseconds elapsed{0};

  double elapsed_ms() const;
};

// {"m":M,"n":N,"method":"...","value":"<decimal>","elapsed_ms":T}
std::string to_json(const CountReport& report);
std::string to_text(const CountReport& report);

}  // namespace knotmosaic
