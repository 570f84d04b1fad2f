#include "knotmosaic/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {

namespace {

// Leaf weights are products of per-cell multiplicities (at most 4 each) and
// must fit in 64 bits.
constexpr std::size_t kMaxFreeCells = 31;

}  // namespace

struct GridSearch::Walker {
  struct Choice {
    Signature sig;
    std::uint32_t mult;
  };

  const GridSearch& search;
  std::vector<std::array<std::size_t, 4>> cell_edges;
  std::vector<std::vector<Choice>> choices;
  std::vector<EdgeState> edges;
  std::vector<Signature> sigs;
  std::vector<std::uint8_t> assigned;  // per depth: bitmask of sides whose edge this placement set

  explicit Walker(const GridSearch& s)
      : search(s),
        cell_edges(s.rows_ * s.cols_),
        choices(s.rows_ * s.cols_),
        edges(s.edge_count(), EdgeState::Unknown),
        sigs(s.rows_ * s.cols_, 0),
        assigned(s.order_.size(), 0) {
    for (std::size_t r = 0; r < s.rows_; ++r)
      for (std::size_t c = 0; c < s.cols_; ++c) {
        const std::size_t cell = r * s.cols_ + c;
        for (Side side : kSides)
          cell_edges[cell][static_cast<int>(side)] = s.cell_edge(r, c, side);
        for (Signature sig = 0; sig < kSignatureCount; ++sig) {
          const auto mult = static_cast<std::uint32_t>(s.tiles_.multiplicity(sig, s.masks_[cell]));
          if (mult == 0) continue;
          bool ok = true;
          for (Side side : kSides)
            ok = ok && satisfies(s.reqs_[cell_edges[cell][static_cast<int>(side)]],
                                 has_point(sig, side));
          if (ok) choices[cell].push_back({sig, mult});
        }
      }
  }

  bool place(std::size_t depth, std::size_t cell, Signature sig) {
    std::uint8_t set = 0;
    for (int side = 0; side < 4; ++side) {
      const std::size_t e = cell_edges[cell][side];
      const EdgeState want = (sig >> side) & 1u ? EdgeState::O : EdgeState::X;
      if (edges[e] == EdgeState::Unknown) {
        edges[e] = want;
        set |= static_cast<std::uint8_t>(1u << side);
      } else if (edges[e] != want) {
        clear(cell, set);
        return false;
      }
    }
    sigs[cell] = sig;
    assigned[depth] = set;
    return true;
  }

  void clear(std::size_t cell, std::uint8_t set) {
    for (int side = 0; side < 4; ++side)
      if ((set >> side) & 1u) edges[cell_edges[cell][side]] = EdgeState::Unknown;
  }

  void unplace(std::size_t depth, std::size_t cell) { clear(cell, assigned[depth]); }

  template <class Visit>
  void walk(std::size_t depth, std::uint64_t weight, Visit& visit) {
    if (depth == search.order_.size()) {
      visit(weight);
      return;
    }
    const std::size_t cell = search.order_[depth];
    for (const Choice& ch : choices[cell]) {
      if (!place(depth, cell, ch.sig)) continue;
      walk(depth + 1, weight * ch.mult, visit);
      unplace(depth, cell);
    }
  }

  // Assignments of the first `depth` cells in order, each with its weight.
  void prefixes(std::size_t depth, std::vector<std::vector<Signature>>& out) {
    std::vector<Signature> current;
    collect(0, depth, current, out);
  }

  void collect(std::size_t depth, std::size_t stop, std::vector<Signature>& current,
               std::vector<std::vector<Signature>>& out) {
    if (depth == stop) {
      out.push_back(current);
      return;
    }
    const std::size_t cell = search.order_[depth];
    for (const Choice& ch : choices[cell]) {
      if (!place(depth, cell, ch.sig)) continue;
      current.push_back(ch.sig);
      collect(depth + 1, stop, current, out);
      current.pop_back();
      unplace(depth, cell);
    }
  }

  std::uint32_t mult_of(std::size_t cell, Signature sig) const {
    for (const Choice& ch : choices[cell])
      if (ch.sig == sig) return ch.mult;
    return 0;
  }
};

GridSearch::GridSearch(std::size_t rows, std::size_t cols, const TileSet& tiles)
    : rows_(rows),
      cols_(cols),
      tiles_(tiles),
      present_(rows * cols, true),
      masks_(rows * cols, kAllTiles),
      reqs_((rows + 1) * cols + (cols + 1) * rows, EdgeReq::Free) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("search frame must be non-empty");
  order_.resize(rows * cols);
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
}

std::size_t GridSearch::horizontal_edge(std::size_t line, std::size_t col) const {
  if (line > rows_ || col >= cols_) throw std::out_of_range("horizontal edge outside frame");
  return line * cols_ + col;
}

std::size_t GridSearch::vertical_edge(std::size_t row, std::size_t line) const {
  if (row >= rows_ || line > cols_) throw std::out_of_range("vertical edge outside frame");
  return horizontal_count() + row * (cols_ + 1) + line;
}

std::size_t GridSearch::cell_edge(std::size_t row, std::size_t col, Side side) const {
  switch (side) {
    case Side::Top: return horizontal_edge(row, col);
    case Side::Bottom: return horizontal_edge(row + 1, col);
    case Side::Left: return vertical_edge(row, col);
    case Side::Right: return vertical_edge(row, col + 1);
  }
  return 0;
}

GridSearch& GridSearch::remove_cell(std::size_t row, std::size_t col) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("cell outside frame");
  const std::size_t cell = row * cols_ + col;
  if (present_[cell]) {
    present_[cell] = false;
    order_.erase(std::find(order_.begin(), order_.end(), cell));
  }
  return *this;
}

GridSearch& GridSearch::restrict_cell(std::size_t row, std::size_t col, TileMask mask) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("cell outside frame");
  masks_[row * cols_ + col] = static_cast<TileMask>(mask & kAllTiles);
  return *this;
}

GridSearch& GridSearch::require(std::size_t edge, EdgeReq req) {
  if (edge >= reqs_.size()) throw std::out_of_range("edge outside frame");
  reqs_[edge] = req;
  return *this;
}

GridSearch& GridSearch::require_boundary(const BoundarySpec& spec) {
  spec.validate(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    require(horizontal_edge(0, c), spec.top[c]);
    require(horizontal_edge(rows_, c), spec.bottom[c]);
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    require(vertical_edge(r, 0), spec.left[r]);
    require(vertical_edge(r, cols_), spec.right[r]);
  }
  return *this;
}

GridSearch& GridSearch::set_order(std::vector<std::size_t> order) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < present_.size(); ++i)
    if (present_[i]) expected.push_back(i);
  if (sorted != expected)
    throw std::invalid_argument("visit order must be a permutation of the present cells");
  order_ = std::move(order);
  return *this;
}

std::size_t GridSearch::present_cells() const { return order_.size(); }

std::size_t GridSearch::free_cells() const {
  std::size_t n = 0;
  for (std::size_t cell : order_)
    if (std::popcount(static_cast<unsigned>(masks_[cell])) > 1) ++n;
  return n;
}

void GridSearch::for_each_leaf(const std::function<void(const Leaf&)>& visit) const {
  if (free_cells() > kMaxFreeCells)
    throw LimitExceeded("search has more than " + std::to_string(kMaxFreeCells) + " free cells");
  Walker w(*this);
  auto leaf = [&](std::uint64_t weight) { visit(Leaf{w.edges, w.sigs, weight}); };
  w.walk(0, 1, leaf);
}

void GridSearch::for_each_grid(const std::function<void(const MosaicGrid&)>& visit) const {
  MosaicGrid grid(rows_, cols_);
  std::vector<std::vector<Tile>> options(rows_ * cols_);
  for_each_leaf([&](const Leaf& leaf) {
    for (std::size_t cell : order_) options[cell] = tiles_.tiles_with(leaf.signatures[cell], masks_[cell]);
    // Odometer over the per-cell tile lists.
    std::vector<std::size_t> pick(order_.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < order_.size(); ++i) {
        const std::size_t cell = order_[i];
        grid.set(cell / cols_, cell % cols_, options[cell][pick[i]]);
      }
      visit(grid);
      std::size_t i = 0;
      while (i < order_.size() && ++pick[i] == options[order_[i]].size()) pick[i++] = 0;
      if (i == order_.size()) break;
    }
  });
}

BigInt GridSearch::count(unsigned workers) const {
  if (free_cells() > kMaxFreeCells)
    throw LimitExceeded("search has more than " + std::to_string(kMaxFreeCells) + " free cells");
  workers = std::max(1u, workers);

  if (workers == 1) {
    Walker w(*this);
    unsigned __int128 total = 0;
    auto add = [&](std::uint64_t weight) { total += weight; };
    w.walk(0, 1, add);
    return from_u128(total);
  }

  std::vector<std::vector<Signature>> tasks;
  {
    Walker w(*this);
    w.prefixes(std::min(cols_, order_.size()), tasks);
  }

  std::atomic<std::size_t> next{0};
  std::vector<unsigned __int128> partial(workers, 0);
  auto run = [&](unsigned id) {
    Walker w(*this);
    unsigned __int128 total = 0;
    auto add = [&](std::uint64_t weight) { total += weight; };
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& prefix = tasks[t];
      std::uint64_t weight = 1;
      for (std::size_t d = 0; d < prefix.size(); ++d) {
        const std::size_t cell = order_[d];
        w.place(d, cell, prefix[d]);
        weight *= w.mult_of(cell, prefix[d]);
      }
      w.walk(prefix.size(), weight, add);
      for (std::size_t d = prefix.size(); d-- > 0;) w.unplace(d, order_[d]);
    }
    partial[id] = total;
  };

  std::vector<std::thread> pool;
  for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
  for (auto& th : pool) th.join();

  BigInt sum = 0;
  for (auto p : partial) sum += from_u128(p);
  return sum;
}

unsigned resolve_workers(unsigned requested) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("KNOTMOSAIC_MAX_WORKERS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

}  // namespace knotmosaic
