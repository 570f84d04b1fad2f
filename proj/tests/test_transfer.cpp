#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/transfer.hpp"
#include "oracle.hpp"

using namespace knotmosaic;

namespace {

// Dense transfer matrix from raw columns of m tiles (11^m of them).
std::vector<std::vector<std::uint64_t>> brute_transfer(std::size_t m) {
  const std::size_t size = std::size_t{1} << m;
  std::vector<std::vector<std::uint64_t>> out(size, std::vector<std::uint64_t>(size, 0));
  oracle::for_each_connected(m, 1, [&](const std::vector<Tile>& col) {
    if (oracle::point(col.front(), Side::Top) || oracle::point(col.back(), Side::Bottom)) return;
    std::uint32_t l = 0, r = 0;
    for (Tile t : col) {
      l = (l << 1) | oracle::point(t, Side::Left);
      r = (r << 1) | oracle::point(t, Side::Right);
    }
    ++out[l][r];
  });
  return out;
}

}  // namespace

TEST_CASE("transfer matrix matches per-entry enumeration") {
  const auto t1 = column_transfer_matrix(1);
  CHECK(t1.at(0, 0) == 1);
  CHECK(t1.at(0, 1) == 0);
  CHECK(t1.at(1, 0) == 0);
  CHECK(t1.at(1, 1) == 1);

  const auto t2 = column_transfer_matrix(2);
  CHECK(t2.at(0, 0) == 1);
  CHECK(t2.at(0, 1) == 0);
  CHECK(t2.at(0, 2) == 0);
  CHECK(t2.at(0, 3) == 1);

  for (std::size_t m = 1; m <= 5; ++m) {
    const auto t = column_transfer_matrix(m);
    const auto brute = brute_transfer(m);
    for (std::uint32_t l = 0; l < t.size(); ++l)
      for (std::uint32_t r = 0; r < t.size(); ++r) REQUIRE(t.at(l, r) == brute[l][r]);
  }
}

TEST_CASE("transfer matrix parity and symmetry") {
  for (std::size_t m = 1; m <= 8; ++m) {
    const auto t = column_transfer_matrix(m);
    for (std::uint32_t l = 0; l < t.size(); ++l)
      for (const auto& [r, v] : t.row(l)) {
        CHECK(v > 0);
        CHECK((__builtin_popcount(l) + __builtin_popcount(r)) % 2 == 0);
        CHECK(t.at(r, l) == v);
      }
  }
}

TEST_CASE("knot counts from the transfer matrix") {
  CHECK(knot_count_transfer(6, 6).value == BigInt("101393411126"));
  CHECK(knot_count_transfer(2, 7).value == 64);
  CHECK(knot_count_transfer(3, 7).value == 27994);
  CHECK(knot_count_transfer(1, 1).value == 1);
  CHECK(knot_count_transfer(4, 4).method == Method::Transfer);
  for (std::size_t m = 1; m <= 7; ++m)
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto d = knot_count_transfer(m, n).value;
      CHECK(d >= 1);
      CHECK(d == knot_count_transfer(n, m).value);
    }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_d(1, 100) == 1);
  CHECK(closed_form_d(2, 2) == 2);
  CHECK(closed_form_d(3, 3) == 22);
  CHECK(closed_form_d(3, 4) == 130);
  CHECK(closed_form_d(3, 7) == 27994);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = m; n <= 10; ++n) CHECK(closed_form_d(m, n) == knot_count_transfer(m, n).value);
  CHECK_THROWS_AS(closed_form_d(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_d(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_d(4, 4), std::invalid_argument);
}

TEST_CASE("exact bounds") {
  const auto b33 = bounds(3, 3);
  CHECK(b33.lower == 22);
  CHECK(b33.upper == 22);

  const auto b44 = bounds(4, 4);
  CHECK(b44.lower == Rational(16900, 11));
  CHECK(b44.upper == 3380);
  CHECK(b44.lower <= 2594);
  CHECK(2594 <= b44.upper);

  const auto b66 = bounds(6, 6);
  const Rational d66(BigInt("101393411126"));
  CHECK(b66.lower <= d66);
  CHECK(d66 <= b66.upper);

  CHECK_THROWS_AS(bounds(2, 5), std::invalid_argument);
}

TEST_CASE("transfer guards and dumps") {
  CHECK_THROWS_AS(column_transfer_matrix(13), LimitExceeded);
  CHECK_THROWS_AS(column_transfer_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(knot_count_transfer(3, 0), std::invalid_argument);
  CHECK(column_transfer_matrix(13, 13).size() == 8192);

  const auto t = column_transfer_matrix(1);
  CHECK(to_csv(t) == "left\\right,x,o\nx,1,0\no,0,1\n");
  const auto j = nlohmann::json::parse(to_json(column_transfer_matrix(2)));
  CHECK(j["m"] == 2);
  CHECK(j["rows"][0] == nlohmann::json::array({1, 0, 0, 1}));
}
