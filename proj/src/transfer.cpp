#include "knotmosaic/transfer.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "knotmosaic/edge_word.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

namespace {

struct Piece {
  Signature sig;
  std::uint64_t mult;
};

std::vector<Piece> pieces() {
  std::vector<Piece> out;
  for (Signature s = 0; s < kSignatureCount; ++s)
    if (const auto mult = TileSet::standard().multiplicity(s); mult > 0) out.push_back({s, mult});
  return out;
}

// Fills one column top to bottom. `above` is the edge status above the
// current row; `right` accumulates the right word (row 0 most significant).
void fill_column(std::size_t m, std::size_t row, std::uint32_t left, bool above,
                 std::uint32_t right, std::uint64_t weight, const std::vector<Piece>& ps,
                 std::vector<std::uint64_t>& acc) {
  if (row == m) {
    if (!above) acc[right] += weight;
    return;
  }
  const bool left_point = (left >> (m - 1 - row)) & 1u;
  for (const Piece& p : ps) {
    if (has_point(p.sig, Side::Top) != above || has_point(p.sig, Side::Left) != left_point) continue;
    fill_column(m, row + 1, left, has_point(p.sig, Side::Bottom),
                (right << 1) | (has_point(p.sig, Side::Right) ? 1u : 0u), weight * p.mult, ps, acc);
  }
}

}  // namespace

TransferMatrix::TransferMatrix(std::size_t m) : m_(m), rows_(std::size_t{1} << m) {}

std::uint64_t TransferMatrix::at(std::uint32_t left, std::uint32_t right) const {
  const auto& r = rows_.at(left);
  const auto it = std::lower_bound(r.begin(), r.end(), right,
                                   [](const auto& entry, std::uint32_t key) { return entry.first < key; });
  return it != r.end() && it->first == right ? it->second : 0;
}

std::size_t TransferMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

TransferMatrix column_transfer_matrix(std::size_t m, std::size_t limit) {
  if (m == 0) throw std::invalid_argument("transfer matrix needs at least one row");
  if (m > limit)
    throw LimitExceeded("transfer matrix limited to m <= " + std::to_string(limit) + ", got " +
                        std::to_string(m));
  const auto ps = pieces();
  TransferMatrix t(m);
  std::vector<std::uint64_t> acc(t.size());
  for (std::uint32_t left = 0; left < t.size(); ++left) {
    std::fill(acc.begin(), acc.end(), 0);
    fill_column(m, 0, left, false, 0, 1, ps, acc);
    auto& row = t.rows_[left];
    for (std::uint32_t right = 0; right < t.size(); ++right)
      if (acc[right] != 0) row.emplace_back(right, acc[right]);
  }
  return t;
}

CountReport knot_count_transfer(std::size_t m, std::size_t n, std::size_t limit) {
  const auto start = std::chrono::steady_clock::now();
  if (n == 0) throw std::invalid_argument("knot mosaics need at least one column");
  const TransferMatrix t = column_transfer_matrix(m, limit);

  std::vector<BigInt> state(t.size(), BigInt(0));
  std::vector<BigInt> next(t.size(), BigInt(0));
  state[0] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    for (auto& v : next) v = 0;
    for (std::uint32_t left = 0; left < t.size(); ++left) {
      if (state[left] == 0) continue;
      for (const auto& [right, count] : t.row(left)) {
        static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
        mpz_addmul_ui(next[right].get_mpz_t(), state[left].get_mpz_t(), count);
      }
    }
    state.swap(next);
  }

  CountReport report;
  report.m = m;
  report.n = n;
  report.value = state[0];
  report.method = Method::Transfer;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

BigInt closed_form_d(std::size_t m, std::size_t n) {
  if (m == 1 && n >= 1) return 1;
  if (m == 2 && n >= 2) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, n - 1);
    return out;
  }
  if (m == 3 && n >= 3) {
    BigInt six;
    mpz_ui_pow_ui(six.get_mpz_t(), 6, n - 2);
    BigInt num = 2 * (9 * six + 1);
    if (num % 5 != 0) throw std::logic_error("closed form for D(3,n) is not integral");
    return num / 5;
  }
  throw std::invalid_argument("closed form covers m = 1 (n >= 1), m = 2 (n >= 2), m = 3 (n >= 3); got (" +
                              std::to_string(m) + ", " + std::to_string(n) + ")");
}

Bounds bounds(std::size_t m, std::size_t n) {
  if (m < 3 || n < 3) throw std::invalid_argument("bounds need m, n >= 3");
  auto factor = [](std::size_t k) {
    BigInt six;
    mpz_ui_pow_ui(six.get_mpz_t(), 6, k - 2);
    return BigInt(9 * six + 1);
  };
  Rational base(2 * factor(m) * factor(n), BigInt(275));
  base.canonicalize();

  const std::size_t k = (m - 3) * (n - 3);
  BigInt two_k, num_k, den_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  mpz_ui_pow_ui(num_k.get_mpz_t(), 22, k);
  mpz_ui_pow_ui(den_k.get_mpz_t(), 5, k);
  Rational upper_scale(num_k, den_k);
  upper_scale.canonicalize();

  Bounds out;
  out.lower = base * Rational(two_k);
  out.upper = base * upper_scale;
  return out;
}

namespace {

// Dense row of decimal entries, comma separated.
void append_row(std::string& out, const TransferMatrix& t, std::uint32_t left) {
  auto it = t.row(left).begin();
  const auto end = t.row(left).end();
  for (std::uint32_t r = 0; r < t.size(); ++r) {
    if (r > 0) out += ',';
    if (it != end && it->first == r) {
      out += std::to_string(it->second);
      ++it;
    } else {
      out += '0';
    }
  }
}

}  // namespace

std::string to_csv(const TransferMatrix& t) {
  std::string out = "left\\right";
  for (std::uint32_t i = 0; i < t.size(); ++i) out += ',' + EdgeWord(t.m(), i).str();
  out += '\n';
  for (std::uint32_t l = 0; l < t.size(); ++l) {
    out += EdgeWord(t.m(), l).str();
    out += ',';
    append_row(out, t, l);
    out += '\n';
  }
  return out;
}

std::string to_json(const TransferMatrix& t) {
  std::string out = "{\"m\":" + std::to_string(t.m()) + ",\"rows\":[";
  for (std::uint32_t l = 0; l < t.size(); ++l) {
    if (l > 0) out += ',';
    out += '[';
    append_row(out, t, l);
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace knotmosaic
