#pragma once

#include <functional>
#include <memory>
#include <type_traits>
#include <utility>
#include <vector>

#include "fairseek/detail/checks.hpp"

namespace fairseek {

// A seekable key/value iterator in strictly ascending key order. seek(target)
// iterates over the remaining pairs with key >= target, never including pairs
// already consumed. Passing the just-yielded key recovers the plain tail.
//
// Kept as the baseline interface: it cannot expose a lower bound without
// first finding a pair, so nested intersections serialize their work.
template <typename K, typename V>
class Iter {
 public:
  using SeekFn = std::function<Iter(K)>;

  Iter() = default;

  static Iter empty() { return Iter(); }

  static Iter yield(K key, V value, SeekFn seek) {
    return Iter(std::make_shared<const Node>(Node{std::move(key), std::move(value), std::move(seek)}));
  }

  bool is_empty() const { return node_ == nullptr; }

  const K& key() const { return node_->key; }
  const V& value() const { return node_->value; }

  Iter seek(K target) const { return node_->seek(std::move(target)); }

 private:
  struct Node {
    K key;
    V value;
    SeekFn seek;
  };

  explicit Iter(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

template <typename K, typename V>
std::vector<std::pair<K, V>> to_sorted_iter(Iter<K, V> it) {
  std::vector<std::pair<K, V>> out;
  while (!it.is_empty()) {
    out.emplace_back(it.key(), it.value());
    it = it.seek(it.key());
  }
  return out;
}

namespace detail {

template <typename K, typename V>
Iter<K, V> list_iter_at(std::shared_ptr<const std::vector<std::pair<K, V>>> pairs, std::size_t i) {
  if (i >= pairs->size()) return Iter<K, V>::empty();
  const auto& p = (*pairs)[i];
  return Iter<K, V>::yield(p.first, p.second, [pairs, i](K target) {
    std::size_t j = i + 1;
    while (j < pairs->size() && (*pairs)[j].first < target) ++j;
    return list_iter_at(pairs, j);
  });
}

}  // namespace detail

// List-backed iterator; seeking scans the tail linearly.
template <typename K, typename V>
Iter<K, V> from_sorted_iter(std::vector<std::pair<K, V>> pairs) {
  detail::require_strictly_ascending(pairs, "from_sorted_iter");
  auto data = std::make_shared<const std::vector<std::pair<K, V>>>(std::move(pairs));
  return detail::list_iter_at(data, 0);
}

// Leapfrog intersection: repeatedly seek the iterator at the smaller key
// toward the larger until the keys match or one side runs out. The search
// loop below can burn unbounded work before yielding, which is exactly the
// behavior the fair interface removes.
template <typename K, typename A, typename B, typename F,
          typename C = std::invoke_result_t<const F&, const A&, const B&>>
Iter<K, C> intersect_iter_with(Iter<K, A> s, Iter<K, B> t, F combine) {
  for (;;) {
    if (s.is_empty() || t.is_empty()) return Iter<K, C>::empty();
    if (s.key() < t.key()) {
      s = s.seek(t.key());
    } else if (t.key() < s.key()) {
      t = t.seek(s.key());
    } else {
      return Iter<K, C>::yield(s.key(), combine(s.value(), t.value()), [s, t, combine](K target) {
        return intersect_iter_with(s.seek(target), t.seek(target), combine);
      });
    }
  }
}

template <typename K, typename A, typename B>
Iter<K, std::pair<A, B>> intersect_iter(Iter<K, A> s, Iter<K, B> t) {
  return intersect_iter_with(std::move(s), std::move(t),
                             [](const A& a, const B& b) { return std::make_pair(a, b); });
}

}  // namespace fairseek
