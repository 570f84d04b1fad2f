#include "knotmosaic/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/matrix.hpp"
#include "knotmosaic/partition.hpp"
#include "knotmosaic/quasimosaic.hpp"
#include "knotmosaic/tiles.hpp"
#include "knotmosaic/transfer.hpp"

namespace knotmosaic {

namespace {

struct TableEntry {
  std::size_t m;
  std::size_t n;
  const char* value;
};

// Published D(m,n) for 4 <= m <= n <= 6.
constexpr std::array<TableEntry, 6> kTable = {{
    {4, 4, "2594"},
    {4, 5, "54226"},
    {4, 6, "1144526"},
    {5, 5, "4183954"},
    {5, 6, "331745962"},
    {6, 6, "101393411126"},
}};

// Collects failures; the first few are kept for the detail line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed: " << notes_.str();
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::string dims(std::size_t m, std::size_t n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void time_limit(Tally& t, Clock::time_point start, double limit) {
  const double took = seconds_since(start);
  t.check(took < limit, "took " + std::to_string(took) + " s, limit " + std::to_string(limit) + " s");
}

CheckResult table_reproduction(const VerifyOptions& opts) {
  Tally t;
  const auto start = Clock::now();
  for (const auto& e : kTable) {
    const BigInt got = d_via_partition(e.m, e.n, opts.workers).value;
    t.check(got == BigInt(e.value), "D" + dims(e.m, e.n) + " = " + to_decimal(got));
  }
  time_limit(t, start, 10.0);
  return {1, "D-table reproduction via partition matrices", t.ok(), t.summary()};
}

CheckResult transfer_agreement(const VerifyOptions& opts) {
  Tally t;
  const auto start = Clock::now();
  std::array<std::array<BigInt, 9>, 9> d;
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t n = 1; n <= 8; ++n) d[m][n] = knot_count_transfer(m, n).value;
  time_limit(t, start, 30.0);

  for (const auto& e : kTable) {
    t.check(d[e.m][e.n] == BigInt(e.value), "transfer D" + dims(e.m, e.n));
    t.check(d[e.n][e.m] == BigInt(e.value), "transfer D" + dims(e.n, e.m));
  }
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 10; ++n) {
      const BigInt closed = closed_form_d(std::min(m, n), std::max(m, n));
      const BigInt value = n <= 8 ? d[m][n] : knot_count_transfer(m, n).value;
      t.check(value == closed, "closed form D" + dims(m, n));
    }
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      const BigInt brute = count_constrained(m, n, BoundarySpec::all_x(m, n), CountOptions{opts.workers, 16, {}});
      t.check(brute == d[m][n], "backtracking D" + dims(m, n));
    }
  return {2, "Transfer oracle agrees with table, closed forms and backtracking", t.ok(), t.summary()};
}

CheckResult lemma_reproduction(const VerifyOptions&) {
  Tally t;
  const Matrix p12{{4, 4}, {4, 10}, {7, 7}, {7, 22}};
  const Matrix p22{{22, 22, 43, 43}, {22, 55, 43, 139}, {43, 43, 109, 64}, {43, 139, 64, 403}};
  t.check(partition_matrix(1, 2).entries == p12, "P(1,2) mismatch");
  t.check(partition_matrix(2, 2).entries == p22, "P(2,2) mismatch");
  const std::array<std::uint64_t, 9> expected{2, 5, 4, 7, 10, 22, 11, 32, 98};
  const auto got = type_counts();
  for (std::size_t i = 0; i < 9; ++i)
    t.check(got[i] == expected[i], "|P" + std::to_string(i + 1) + "| = " + std::to_string(got[i]));
  return {3, "Partition matrices P(1,2), P(2,2) and shape counts P1..P9", t.ok(), t.summary()};
}

CheckResult center_cases(const VerifyOptions& opts) {
  Tally t;
  const auto start = Clock::now();
  const auto c = q33_center_class_counts(CountOptions{opts.workers, 16, {}});
  time_limit(t, start, 5.0);
  t.check(c.all_x == 14641, "xxxx class " + to_decimal(c.all_x));
  t.check(c.opposite == 143648, "opposite class " + to_decimal(c.opposite));
  t.check(c.adjacent == 297880, "adjacent class " + to_decimal(c.adjacent));
  t.check(c.all_o == 1635808, "oooo class " + to_decimal(c.all_o));
  t.check(c.total() == 2091977, "total " + to_decimal(c.total()));
  t.check(2 * c.total() == BigInt("4183954"), "2 x total != D(5,5)");
  return {4, "(3,3)-quasimosaic centre-word case analysis", t.ok(), t.summary()};
}

CheckResult twofold_rule(const VerifyOptions&) {
  Tally t;
  const auto start = Clock::now();
  const std::array<std::pair<std::size_t, std::size_t>, 3> shapes{{{1, 1}, {1, 2}, {2, 2}}};
  const std::array<std::size_t, 3> expected_cases{11, 65, 1297};
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto [p, q] = shapes[s];
    std::size_t cases = 0, good = 0;
    for_each_quasimosaic(p, q, BoundarySpec::all_free(p, q), [&](const MosaicGrid& g) {
      ++cases;
      const auto ext = twofold_extensions(g);
      bool ok = ext.size() == 2;
      for (const auto& e : ext) ok = ok && is_knot_mosaic(e) && e.block(1, 1, p, q) == g;
      if (ok) ++good;
    });
    t.check(cases == expected_cases[s], dims(p, q) + " cases = " + std::to_string(cases));
    t.check(good == cases, dims(p, q) + ": " + std::to_string(cases - good) + " without exactly 2 extensions");
  }
  time_limit(t, start, 60.0);
  return {5, "Twofold rule on every (1,1), (1,2), (2,2) quasimosaic", t.ok(), t.summary()};
}

CheckResult bounds_hold(const VerifyOptions&) {
  Tally t;
  for (std::size_t m = 3; m <= 8; ++m)
    for (std::size_t n = 3; n <= 8; ++n) {
      const Rational d(knot_count_transfer(m, n).value);
      const Bounds b = bounds(m, n);
      t.check(b.lower <= d && d <= b.upper, "bounds fail at " + dims(m, n));
    }
  return {6, "Lower/upper bounds hold for 3 <= m,n <= 8", t.ok(), t.summary()};
}

CheckResult properties(const VerifyOptions& opts) {
  Tally t;
  const TileSet& ts = TileSet::standard();
  std::size_t total = 0;
  for (Signature s = 0; s < kSignatureCount; ++s) {
    const auto mult = ts.multiplicity(s);
    const int points = std::popcount(static_cast<unsigned>(s));
    const std::size_t want = points == 0 || points == 2 ? 1 : points == 4 ? 4 : 0;
    t.check(mult == want, "multiplicity of signature " + std::to_string(s));
    total += mult;
  }
  t.check(total == kTileCount, "multiplicities do not sum to 11");

  for (std::size_t p = 1; p <= 4; ++p)
    for (std::size_t q = 1; p * q <= 4; ++q) {
      std::size_t odd = 0;
      for_each_quasimosaic(p, q, BoundarySpec::all_free(p, q), [&](const MosaicGrid& g) {
        const std::size_t points = g.top_word().point_count() + g.bottom_word().point_count() +
                                   g.left_word().point_count() + g.right_word().point_count();
        if (points % 2 != 0) ++odd;
      });
      t.check(odd == 0, "odd boundary parity in " + dims(p, q));
    }

  const Matrix p22 = partition_matrix(2, 2).entries;
  t.check(p22 == p22.transposed(), "P(2,2) not symmetric");

  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t n = m + 1; n <= 8; ++n)
      t.check(knot_count_transfer(m, n).value == knot_count_transfer(n, m).value,
              "D" + dims(m, n) + " != D" + dims(n, m));

  // Same (3,3) count under several visit orders and worker counts.
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> order(9);
  std::iota(order.begin(), order.end(), 0);
  orders.push_back(order);
  orders.push_back({0, 3, 6, 1, 4, 7, 2, 5, 8});
  std::reverse(order.begin(), order.end());
  orders.push_back(order);
  std::mt19937 rng(20130101);
  for (int i = 0; i < 2; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    orders.push_back(order);
  }
  const unsigned max_workers = std::max(2u, opts.workers);
  for (const auto& o : orders)
    for (unsigned w : {1u, max_workers}) {
      const BigInt c = count_constrained(3, 3, BoundarySpec::all_free(3, 3), CountOptions{w, 16, o});
      t.check(c == 2091977, "order/worker variation gave " + to_decimal(c));
    }
  return {7, "Property suites (multiplicities, parity, symmetry, determinism)", t.ok(), t.summary()};
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
  using Check = CheckResult (*)(const VerifyOptions&);
  const std::array<Check, 7> checks{table_reproduction, transfer_agreement, lemma_reproduction,
                                    center_cases,       twofold_rule,       bounds_hold,
                                    properties};
  std::vector<CheckResult> results;
  for (Check check : checks) {
    const auto start = Clock::now();
    CheckResult r = check(options);
    r.seconds = seconds_since(start);
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace knotmosaic
