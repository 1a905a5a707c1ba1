// Stream fixtures and constructor-level inspection used by the stream tests.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "fairseek/stream.hpp"

namespace stream_helpers {

// Render up to max_steps constructors as "Y<e> L ... E"; stops early at the
// end of the stream.
template <typename E>
std::string trace_constructors(fairseek::Stream<E> s, std::size_t max_steps) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < max_steps; ++i) {
    const auto& node = s.force();
    if (!first) out << ' ';
    first = false;
    if (std::holds_alternative<fairseek::detail::EmptyNode<E>>(node)) {
      out << 'E';
      break;
    }
    if (const auto* y = std::get_if<fairseek::detail::YieldNode<E>>(&node)) {
      out << 'Y' << y->element;
      auto tail = y->tail;
      s = std::move(tail);
    } else {
      out << 'L';
      auto tail = std::get<fairseek::detail::LaterNode<E>>(node).tail;
      s = std::move(tail);
    }
  }
  return out.str();
}

// 1-based constructor depth of each yielded element, walking at most
// max_steps constructors.
template <typename E>
std::vector<std::pair<E, std::uint64_t>> element_depths(fairseek::Stream<E> s,
                                                        std::size_t max_steps) {
  std::vector<std::pair<E, std::uint64_t>> out;
  for (std::uint64_t depth = 1; depth <= max_steps; ++depth) {
    const auto& node = s.force();
    if (std::holds_alternative<fairseek::detail::EmptyNode<E>>(node)) break;
    if (const auto* y = std::get_if<fairseek::detail::YieldNode<E>>(&node)) {
      out.emplace_back(y->element, depth);
      auto tail = y->tail;
      s = std::move(tail);
    } else {
      auto tail = std::get<fairseek::detail::LaterNode<E>>(node).tail;
      s = std::move(tail);
    }
  }
  return out;
}

// Lengths of maximal consecutive element runs, walking at most max_steps
// constructors of a finite stream.
template <typename E>
std::vector<std::uint64_t> yield_run_lengths(fairseek::Stream<E> s, std::size_t max_steps) {
  std::vector<std::uint64_t> runs;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < max_steps; ++i) {
    const auto& node = s.force();
    if (std::holds_alternative<fairseek::detail::EmptyNode<E>>(node)) break;
    if (const auto* y = std::get_if<fairseek::detail::YieldNode<E>>(&node)) {
      ++run;
      auto tail = y->tail;
      s = std::move(tail);
    } else {
      if (run > 0) runs.push_back(run);
      run = 0;
      auto tail = std::get<fairseek::detail::LaterNode<E>>(node).tail;
      s = std::move(tail);
    }
  }
  if (run > 0) runs.push_back(run);
  return runs;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// 2, 3, 5, 7, ... with one progress marker after each prime.
inline fairseek::Stream<std::int64_t> primes_from(std::int64_t start) {
  using E = std::int64_t;
  using namespace fairseek;
  return Stream<E>::make([start]() -> detail::StreamNode<E> {
    std::int64_t p = start;
    while (!is_prime(p)) ++p;
    return detail::YieldNode<E>{p, Stream<E>::make([p]() -> detail::StreamNode<E> {
                                  return detail::LaterNode<E>{primes_from(p + 1)};
                                })};
  });
}

inline fairseek::Stream<std::int64_t> primes_like() { return primes_from(2); }

}  // namespace stream_helpers
