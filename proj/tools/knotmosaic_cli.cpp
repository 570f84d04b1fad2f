// knotmosaic: count knot mosaics, dump partition/transfer matrices, render
// mosaics and run the verification suite.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotmosaic/dispatch.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/partition.hpp"
#include "knotmosaic/search.hpp"
#include "knotmosaic/transfer.hpp"
#include "knotmosaic/verify.hpp"

namespace km = knotmosaic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::vector<km::Tile> parse_tiles(const std::string& list) {
  std::vector<km::Tile> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty tile id in list");
    const auto tile = km::tile_from_name(item.substr(first, last - first + 1));
    if (!tile) throw std::invalid_argument("unknown tile id '" + item + "' (expected 0..10 or T0..T10)");
    out.push_back(*tile);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of knot mosaics"};
  app.require_subcommand(1);

  unsigned workers = 1;
  app.add_option("-j,--workers", workers, "Worker threads (0 = all cores; capped by KNOTMOSAIC_MAX_WORKERS)")
      ->check(CLI::NonNegativeNumber);

  std::size_t rows = 0, cols = 0;
  std::string method = "auto";
  std::string format = "text";
  std::size_t cell_limit = 16;
  std::size_t transfer_limit = km::kDefaultTransferLimit;

  auto* count = app.add_subcommand("count", "Count knot (m,n)-mosaics");
  count->add_option("-m,--rows", rows, "Rows")->required()->check(CLI::PositiveNumber);
  count->add_option("-n,--cols", cols, "Columns")->required()->check(CLI::PositiveNumber);
  count->add_option("--method", method, "auto|partition|transfer|bruteforce|closed-form")
      ->check(CLI::IsMember({"auto", "partition", "transfer", "bruteforce", "closed-form"}));
  count->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  count->add_option("--cell-limit", cell_limit, "Backtracking guard on rows*cols")
      ->check(CLI::PositiveNumber);
  count->add_option("--transfer-limit", transfer_limit, "Transfer guard on rows")
      ->check(CLI::PositiveNumber);

  std::size_t p = 0, q = 0;
  std::string matrix_format = "csv";
  auto* pmatrix = app.add_subcommand("pmatrix", "Dump a partition matrix");
  pmatrix->add_option("-p", p, "Quasimosaic rows")->required()->check(CLI::PositiveNumber);
  pmatrix->add_option("-q", q, "Quasimosaic columns")->required()->check(CLI::PositiveNumber);
  pmatrix->add_option("--format", matrix_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  std::size_t transfer_rows = 0;
  auto* transfer = app.add_subcommand("transfer", "Dump the column transfer matrix");
  transfer->add_option("-m,--rows", transfer_rows, "Rows")->required()->check(CLI::PositiveNumber);
  transfer->add_option("--format", matrix_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  transfer->add_option("--transfer-limit", transfer_limit, "Guard on rows")->check(CLI::PositiveNumber);

  std::size_t max_rows = 6, max_cols = 6;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Print D(m,n) for 1 <= m,n <= limits");
  table->add_option("--max-rows", max_rows, "Largest m")->check(CLI::PositiveNumber);
  table->add_option("--max-cols", max_cols, "Largest n")->check(CLI::PositiveNumber);
  table->add_option("--format", table_format, "text|csv")->check(CLI::IsMember({"text", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  std::string tiles;
  auto* render = app.add_subcommand("render", "Draw a mosaic from a row-major tile list");
  render->add_option("-m,--rows", rows, "Rows")->required()->check(CLI::PositiveNumber);
  render->add_option("-n,--cols", cols, "Columns")->required()->check(CLI::PositiveNumber);
  render->add_option("-t,--tiles", tiles, "Comma-separated tile ids, e.g. 2,1,3,4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  workers = km::resolve_workers(workers);
  km::DispatchOptions dispatch{workers, cell_limit, transfer_limit};

  try {
    if (*count) {
      const auto chosen = km::method_from_name(method);
      const auto report = km::count_knot_mosaics(rows, cols, *chosen, dispatch);
      std::cout << (format == "json" ? km::to_json(report) : km::to_text(report)) << '\n';
      return kExitOk;
    }
    if (*pmatrix) {
      const auto m = km::partition_matrix(p, q);
      std::cout << (matrix_format == "json" ? km::to_json(m) + "\n" : km::to_csv(m));
      return kExitOk;
    }
    if (*transfer) {
      const auto t = km::column_transfer_matrix(transfer_rows, transfer_limit);
      std::cout << (matrix_format == "json" ? km::to_json(t) + "\n" : km::to_csv(t));
      return kExitOk;
    }
    if (*table) {
      const auto d = km::d_table(max_rows, max_cols, dispatch);
      if (table_format == "csv") {
        std::cout << "m\\n";
        for (std::size_t n = 1; n <= max_cols; ++n) std::cout << ',' << n;
        std::cout << '\n';
        for (std::size_t m = 1; m <= max_rows; ++m) {
          std::cout << m;
          for (const auto& r : d[m - 1]) std::cout << ',' << km::to_decimal(r.value);
          std::cout << '\n';
        }
      } else {
        for (const auto& row : d)
          for (const auto& r : row) std::cout << km::to_text(r) << '\n';
      }
      return kExitOk;
    }
    if (*verify) {
      km::VerifyOptions opts;
      opts.workers = workers;
      opts.on_result = [](const km::CheckResult& r) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " ("
                  << r.detail << "; " << r.seconds << " s)" << std::endl;
      };
      bool all = true;
      for (const auto& r : km::run_acceptance(opts)) all = all && r.passed;
      std::cout << (all ? "all criteria passed" : "verification FAILED") << '\n';
      return all ? kExitOk : kExitFailed;
    }
    if (*render) {
      km::MosaicGrid grid(rows, cols, parse_tiles(tiles));
      std::cout << km::render_ascii(grid);
      return kExitOk;
    }
  } catch (const km::LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
