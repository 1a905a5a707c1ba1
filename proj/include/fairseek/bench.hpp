#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fairseek::bench {

enum class Format { Human, Csv };

struct BenchConfig {
  std::int64_t n = 30'000'000;
  bool naive = true;
  bool fair = true;
  bool left = true;
  bool right = true;
  int repeat = 3;
  Format format = Format::Human;
};

struct BenchRow {
  std::string label;
  std::string mode;   // "naive" | "fair"
  std::string assoc;  // "left" | "right" | "-" for the two-way cases
  std::uint64_t result_count = 0;
  std::uint64_t probes = 0;
  std::uint64_t seeks = 0;
  double wall_seconds = 0.0;
};

inline constexpr const char* kCsvHeader = "label,mode,assoc,result_count,probes,seeks,wall_seconds";

std::string format_row_csv(const BenchRow& row);
std::string format_row_human(const BenchRow& row);

// Runs the evens/odds/ends suite per the config, handing each completed row
// to the sink in order. Throws std::invalid_argument on a bad config.
void run_bench(const BenchConfig& cfg, const std::function<void(const BenchRow&)>& sink);

// Intersects >= 2 key,value files, writing one "key,v1,v2,..." line per key
// common to all of them. Returns a process exit code: 0 ok, 2 malformed
// input (diagnostic on err).
int intersect_files(const std::vector<std::string>& paths, const std::string& mode,
                    const std::string& assoc, std::ostream& out, std::ostream& err);

}  // namespace fairseek::bench
