#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fairseek::detail {

template <typename K, typename V>
void require_strictly_ascending(const std::vector<std::pair<K, V>>& pairs, const char* who) {
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (!(pairs[i - 1].first < pairs[i].first)) {
      throw std::invalid_argument(std::string(who) + ": keys must be strictly ascending");
    }
  }
}

}  // namespace fairseek::detail
