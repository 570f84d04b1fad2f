#include "knotmosaic/report.hpp"

#include <array>
#include <cstdio>
#include <utility>

#include "json.hpp"

namespace knotmosaic {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames = {{
    {Method::Partition, "partition"},
    {Method::Transfer, "transfer"},
    {Method::BruteForce, "bruteforce"},
    {Method::ClosedForm, "closed-form"},
    {Method::Auto, "auto"},
}};

}  // namespace

std::string_view method_name(Method method) {
  for (const auto& [m, name] : kMethodNames)
    if (m == method) return name;
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (const auto& [m, n] : kMethodNames)
    if (n == name) return m;
  return std::nullopt;
}

double CountReport::elapsed_ms() const {
  return std::chrono::duration<double, std::milli>(elapsed).count();
}

std::string to_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["m"] = report.m;
  j["n"] = report.n;
  j["method"] = method_name(report.method);
  j["value"] = to_decimal(report.value);
  j["elapsed_ms"] = report.elapsed_ms();
  return j.dump();
}

std::string to_text(const CountReport& report) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", report.elapsed_ms());
  return "D(" + std::to_string(report.m) + "," + std::to_string(report.n) +
         ") = " + group_digits(report.value) + "  [" + std::string(method_name(report.method)) +
         ", " + ms + " ms]";
}

}  // namespace knotmosaic
