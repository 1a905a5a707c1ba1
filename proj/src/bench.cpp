#include "fairseek/bench.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "fairseek/naive_iter.hpp"
#include "fairseek/seek.hpp"
#include "fairseek/sorted_array.hpp"
#include "fairseek/workload.hpp"

namespace fairseek::bench {

namespace {

using Key = std::int64_t;
using Label = std::string_view;
using Arr = SortedArray<Key, Label>;

template <typename K, typename V>
std::uint64_t count_iter(Iter<K, V> it) {
  std::uint64_t n = 0;
  while (!it.is_empty()) {
    ++n;
    it = it.seek(it.key());
  }
  return n;
}

template <typename K, typename V>
std::uint64_t count_seek(Seek<K, V> s) {
  std::uint64_t n = 0;
  enumerate_seek(std::move(s), [&](const K&, const V&) { ++n; });
  return n;
}

struct Case {
  std::string label;
  std::string assoc;
  const Arr* a;
  const Arr* b;
  const Arr* c;  // null for the two-way cases
};

std::uint64_t run_case(const Case& cs, bool fair, ProbeCounters* counters) {
  if (fair) {
    auto a = from_sorted_array_seek(*cs.a, counters);
    auto b = from_sorted_array_seek(*cs.b, counters);
    if (!cs.c) return count_seek(intersect_seek(a, b));
    auto c = from_sorted_array_seek(*cs.c, counters);
    if (cs.assoc == "left") return count_seek(intersect_seek(intersect_seek(a, b), c));
    return count_seek(intersect_seek(a, intersect_seek(b, c)));
  }
  auto a = from_sorted_array_iter(*cs.a, counters);
  auto b = from_sorted_array_iter(*cs.b, counters);
  if (!cs.c) return count_iter(intersect_iter(a, b));
  auto c = from_sorted_array_iter(*cs.c, counters);
  if (cs.assoc == "left") return count_iter(intersect_iter(intersect_iter(a, b), c));
  return count_iter(intersect_iter(a, intersect_iter(b, c)));
}

}  // namespace

std::string format_row_csv(const BenchRow& row) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", row.wall_seconds);
  return row.label + "," + row.mode + "," + row.assoc + "," + std::to_string(row.result_count) +
         "," + std::to_string(row.probes) + "," + std::to_string(row.seeks) + "," + buf;
}

std::string format_row_human(const BenchRow& row) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-24s [%5s/%-5s]  count=%llu  probes=%llu  seeks=%llu  %.6fs",
                row.label.c_str(), row.mode.c_str(), row.assoc.c_str(),
                static_cast<unsigned long long>(row.result_count),
                static_cast<unsigned long long>(row.probes),
                static_cast<unsigned long long>(row.seeks), row.wall_seconds);
  return buf;
}

void run_bench(const BenchConfig& cfg, const std::function<void(const BenchRow&)>& sink) {
  if (cfg.n < 2) throw std::invalid_argument("bench: n must be at least 2");
  if (cfg.repeat < 1) throw std::invalid_argument("bench: repeat must be at least 1");
  if (!cfg.naive && !cfg.fair) throw std::invalid_argument("bench: no modes selected");
  if (!cfg.left && !cfg.right) throw std::invalid_argument("bench: no associations selected");

  const Workload w = generate_workload(cfg.n);

  std::vector<Case> cases;
  cases.push_back({"odds & ends", "-", &w.odds, &w.ends, nullptr});
  cases.push_back({"evens & odds", "-", &w.evens, &w.odds, nullptr});
  if (cfg.left) cases.push_back({"(evens & odds) & ends", "left", &w.evens, &w.odds, &w.ends});
  if (cfg.right) cases.push_back({"evens & (odds & ends)", "right", &w.evens, &w.odds, &w.ends});

  for (const char* mode : {"naive", "fair"}) {
    const bool fair = mode[0] == 'f';
    if ((fair && !cfg.fair) || (!fair && !cfg.naive)) continue;
    for (const Case& cs : cases) {
      for (int rep = 0; rep < cfg.repeat; ++rep) {
        ProbeCounters counters;
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t count = run_case(cs, fair, &counters);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        sink(BenchRow{cs.label, mode, cs.assoc, count, counters.probes, counters.seeks,
                      elapsed.count()});
      }
    }
  }
}

namespace {

using FileValue = std::vector<std::string>;
using FileArr = SortedArray<Key, FileValue>;

bool parse_key(const std::string& text, Key& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// One "key,value" pair per line, keys strictly ascending, values free of
// commas and newlines. Returns false after reporting the offending line.
bool load_pair_file(const std::string& path, FileArr& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << path << ": cannot open file\n";
    return false;
  }
  std::vector<std::pair<Key, FileValue>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      err << path << ":" << lineno << ": expected key,value\n";
      return false;
    }
    const std::string value = line.substr(comma + 1);
    if (value.find(',') != std::string::npos) {
      err << path << ":" << lineno << ": value must not contain a comma\n";
      return false;
    }
    Key key = 0;
    if (!parse_key(line.substr(0, comma), key)) {
      err << path << ":" << lineno << ": key is not a signed 64-bit decimal integer\n";
      return false;
    }
    if (!pairs.empty() && !(pairs.back().first < key)) {
      err << path << ":" << lineno << ": keys must be strictly ascending\n";
      return false;
    }
    pairs.emplace_back(key, FileValue{value});
  }
  out = FileArr::from_pairs(pairs);
  return true;
}

FileValue concat_values(const FileValue& a, const FileValue& b) {
  FileValue r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

int intersect_files(const std::vector<std::string>& paths, const std::string& mode,
                    const std::string& assoc, std::ostream& out, std::ostream& err) {
  std::vector<FileArr> arrays(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!load_pair_file(paths[i], arrays[i], err)) return 2;
  }

  auto emit = [&](const Key& k, const FileValue& vs) {
    out << k;
    for (const auto& v : vs) out << ',' << v;
    out << '\n';
  };

  if (mode == "fair") {
    std::vector<Seek<Key, FileValue>> leaves;
    leaves.reserve(arrays.size());
    for (const auto& a : arrays) leaves.push_back(from_sorted_array_seek(a));
    Seek<Key, FileValue> acc = leaves.front();
    if (assoc == "right") {
      acc = leaves.back();
      for (std::size_t i = leaves.size() - 1; i-- > 0;) {
        acc = intersect_seek_with(leaves[i], acc, concat_values);
      }
    } else {
      for (std::size_t i = 1; i < leaves.size(); ++i) {
        acc = intersect_seek_with(acc, leaves[i], concat_values);
      }
    }
    enumerate_seek(std::move(acc), emit);
  } else {
    std::vector<Iter<Key, FileValue>> leaves;
    leaves.reserve(arrays.size());
    for (const auto& a : arrays) leaves.push_back(from_sorted_array_iter(a));
    Iter<Key, FileValue> acc = leaves.front();
    if (assoc == "right") {
      acc = leaves.back();
      for (std::size_t i = leaves.size() - 1; i-- > 0;) {
        acc = intersect_iter_with(leaves[i], acc, concat_values);
      }
    } else {
      for (std::size_t i = 1; i < leaves.size(); ++i) {
        acc = intersect_iter_with(acc, leaves[i], concat_values);
      }
    }
    while (!acc.is_empty()) {
      emit(acc.key(), acc.value());
      acc = acc.seek(acc.key());
    }
  }
  return 0;
}

}  // namespace fairseek::bench
