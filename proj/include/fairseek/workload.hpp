#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fairseek/sorted_array.hpp"

namespace fairseek {

// The evens/odds/ends benchmark relations over 0..n. The intersection of all
// three (and of evens with odds) is empty, but how much work it takes to
// discover that separates the two iterator interfaces.
struct Workload {
  SortedArray<std::int64_t, std::string_view> evens;
  SortedArray<std::int64_t, std::string_view> odds;
  SortedArray<std::int64_t, std::string_view> ends;
};

inline Workload generate_workload(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("generate_workload: n must be at least 2");
  std::vector<std::int64_t> evens, odds;
  evens.reserve(static_cast<std::size_t>(n / 2 + 1));
  odds.reserve(static_cast<std::size_t>((n + 1) / 2));
  for (std::int64_t x = 0; x <= n; x += 2) evens.push_back(x);
  for (std::int64_t x = 1; x <= n; x += 2) odds.push_back(x);
  auto tag = [](std::vector<std::int64_t> keys, std::string_view label) {
    std::vector<std::string_view> values(keys.size(), label);
    return SortedArray<std::int64_t, std::string_view>::from_columns(std::move(keys),
                                                                     std::move(values));
  };
  return Workload{tag(std::move(evens), "even"), tag(std::move(odds), "odd"),
                  tag({0, n}, "end")};
}

}  // namespace fairseek
