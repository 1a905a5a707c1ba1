// fairseek: benchmark and file-intersection front end for the fair seekable
// iterator library.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairseek/bench.hpp"

namespace {

int run_bench_command(std::int64_t n, const std::vector<std::string>& modes,
                      const std::vector<std::string>& assoc, int repeat,
                      const std::string& format) {
  fairseek::bench::BenchConfig cfg;
  cfg.n = n;
  cfg.repeat = repeat;
  cfg.naive = cfg.fair = false;
  for (const auto& m : modes) {
    if (m == "naive") {
      cfg.naive = true;
    } else if (m == "fair") {
      cfg.fair = true;
    } else {
      std::cerr << "bench: unknown mode '" << m << "' (expected naive or fair)\n";
      return 1;
    }
  }
  cfg.left = cfg.right = false;
  for (const auto& a : assoc) {
    if (a == "left") {
      cfg.left = true;
    } else if (a == "right") {
      cfg.right = true;
    } else {
      std::cerr << "bench: unknown association '" << a << "' (expected left or right)\n";
      return 1;
    }
  }
  if (format == "csv") {
    cfg.format = fairseek::bench::Format::Csv;
  } else if (format == "human") {
    cfg.format = fairseek::bench::Format::Human;
  } else {
    std::cerr << "bench: unknown format '" << format << "' (expected human or csv)\n";
    return 1;
  }

  try {
    bool header_done = false;
    fairseek::bench::run_bench(cfg, [&](const fairseek::bench::BenchRow& row) {
      if (cfg.format == fairseek::bench::Format::Csv) {
        if (!header_done) {
          std::cout << fairseek::bench::kCsvHeader << '\n';
          header_done = true;
        }
        std::cout << fairseek::bench::format_row_csv(row) << '\n';
      } else {
        std::cout << fairseek::bench::format_row_human(row) << '\n';
      }
      std::cout.flush();
    });
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair seekable iterator benchmarks and set intersection"};
  app.require_subcommand(1);

  auto* bench = app.add_subcommand("bench", "Run the evens/odds/ends intersection benchmark");
  std::int64_t n = 30'000'000;
  std::vector<std::string> modes{"naive", "fair"};
  std::vector<std::string> assoc{"left", "right"};
  int repeat = 3;
  std::string format = "human";
  bench->add_option("--n", n, "Largest key in the generated sets");
  bench->add_option("--modes", modes, "Comma-separated subset of naive,fair")
      ->delimiter(',');
  bench->add_option("--assoc", assoc, "Comma-separated subset of left,right")
      ->delimiter(',');
  bench->add_option("--repeat", repeat, "Runs per case");
  bench->add_option("--format", format, "Output format: human or csv");

  auto* intersect = app.add_subcommand("intersect", "Intersect sorted key,value files");
  std::string imode = "fair";
  std::string iassoc = "left";
  std::vector<std::string> files;
  intersect->add_option("--mode", imode, "naive or fair")
      ->check(CLI::IsMember({"naive", "fair"}));
  intersect->add_option("--assoc", iassoc, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  intersect->add_option("files", files, "Two or more input files")->expected(2, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (bench->parsed()) {
    return run_bench_command(n, modes, assoc, repeat, format);
  }
  if (files.size() < 2) {
    std::cerr << "intersect: need at least two files\n";
    return 1;
  }
  return fairseek::bench::intersect_files(files, imode, iassoc, std::cout, std::cerr);
}
