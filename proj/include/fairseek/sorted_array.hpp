#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fairseek/bound.hpp"
#include "fairseek/naive_iter.hpp"
#include "fairseek/seek.hpp"

namespace fairseek {

// Work counters for instrumented backends. A probe is one inspection of an
// underlying array element (the portable stand-in for wall time); a seek is
// one seek-function invocation. Single-threaded accumulators.
struct ProbeCounters {
  std::uint64_t probes = 0;
  std::uint64_t seeks = 0;

  void reset() { probes = seeks = 0; }
};

// Galloping search: exponential probing followed by binary search.
// Returns the least index in [lo, hi] where the monotone predicate holds,
// or hi if it never does. O(log d) probes for a result d past lo.
template <typename Pred>
std::int64_t gallop(Pred p, std::int64_t lo, std::int64_t hi) {
  if (lo >= hi) return hi;
  if (p(lo)) return lo;
  std::int64_t step = 1;
  while (lo + step < hi && !p(lo + step)) {
    lo += step;
    step *= 2;
  }
  std::int64_t l = lo;
  std::int64_t r = lo + step < hi ? lo + step : hi;
  while (r - l > 1) {
    const std::int64_t mid = l + (r - l) / 2;
    (p(mid) ? r : l) = mid;
  }
  return r;
}

// Immutable sorted column store: strictly ascending keys with parallel
// values, constant-time access by index. Duplicate keys are a construction
// error, not a silent multiset.
template <typename K, typename V>
class SortedArray {
 public:
  SortedArray() : data_(std::make_shared<const Data>()) {}

  static SortedArray from_pairs(const std::vector<std::pair<K, V>>& pairs) {
    Data d;
    d.keys.reserve(pairs.size());
    d.values.reserve(pairs.size());
    for (const auto& [k, v] : pairs) {
      d.keys.push_back(k);
      d.values.push_back(v);
    }
    return SortedArray(std::move(d));
  }

  static SortedArray from_columns(std::vector<K> keys, std::vector<V> values) {
    if (keys.size() != values.size()) {
      throw std::invalid_argument("SortedArray: key/value column lengths differ");
    }
    return SortedArray(Data{std::move(keys), std::move(values)});
  }

  std::int64_t size() const { return static_cast<std::int64_t>(data_->keys.size()); }
  const K& key(std::int64_t i) const { return data_->keys[static_cast<std::size_t>(i)]; }
  const V& value(std::int64_t i) const { return data_->values[static_cast<std::size_t>(i)]; }

 private:
  struct Data {
    std::vector<K> keys;
    std::vector<V> values;
  };

  explicit SortedArray(Data d) : data_(std::make_shared<const Data>(std::move(d))) {
    for (std::size_t i = 1; i < data_->keys.size(); ++i) {
      if (!(data_->keys[i - 1] < data_->keys[i])) {
        throw std::invalid_argument("SortedArray: keys must be strictly ascending");
      }
    }
  }

  std::shared_ptr<const Data> data_;
};

namespace detail {

inline void count_probe(ProbeCounters* c) {
  if (c) ++c->probes;
}

// Baseline backend. Seeking gallops from the successor of the current index:
// the yielded pair is consumed, so the search resumes strictly past it.
template <typename K, typename V>
Iter<K, V> array_iter_at(SortedArray<K, V> a, ProbeCounters* c, std::int64_t lo) {
  if (lo >= a.size()) return Iter<K, V>::empty();
  detail::count_probe(c);
  return Iter<K, V>::yield(a.key(lo), a.value(lo), [a, c, lo](K target) {
    if (c) ++c->seeks;
    const std::int64_t i = gallop(
        [&](std::int64_t j) {
          detail::count_probe(c);
          return !(a.key(j) < target);
        },
        lo + 1, a.size());
    return array_iter_at(a, c, i);
  });
}

// Fair backend. Seeking gallops from the current index inclusive, so a seek
// toward a bound the current key already satisfies stays put (idempotence).
template <typename K, typename V>
Seek<K, V> array_seek_at(SortedArray<K, V> a, ProbeCounters* c, std::int64_t lo) {
  Position<K, V> posn = [&] {
    if (lo >= a.size()) return Position<K, V>::at_bound(Bound<K>::done());
    detail::count_probe(c);
    return Position<K, V>::found(a.key(lo), a.value(lo));
  }();
  return Seek<K, V>{std::move(posn), [a, c, lo](Bound<K> b) {
                      if (c) ++c->seeks;
                      const std::int64_t i = gallop(
                          [&](std::int64_t j) {
                            detail::count_probe(c);
                            return satisfies(b, a.key(j));
                          },
                          lo, a.size());
                      return array_seek_at(a, c, i);
                    }};
}

}  // namespace detail

template <typename K, typename V>
Iter<K, V> from_sorted_array_iter(const SortedArray<K, V>& a, ProbeCounters* counters = nullptr) {
  return detail::array_iter_at(a, counters, 0);
}

template <typename K, typename V>
Seek<K, V> from_sorted_array_seek(const SortedArray<K, V>& a, ProbeCounters* counters = nullptr) {
  return detail::array_seek_at(a, counters, 0);
}

// An array bound to a counter block; backends built from it record their
// probes and seeks there.
template <typename K, typename V>
struct InstrumentedArray {
  SortedArray<K, V> array;
  ProbeCounters* counters = nullptr;

  Iter<K, V> iter() const { return from_sorted_array_iter(array, counters); }
  Seek<K, V> seek() const { return from_sorted_array_seek(array, counters); }
};

template <typename K, typename V>
InstrumentedArray<K, V> with_counters(SortedArray<K, V> array, ProbeCounters& counters) {
  return InstrumentedArray<K, V>{std::move(array), &counters};
}

}  // namespace fairseek
