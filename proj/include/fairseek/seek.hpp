#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "fairseek/bound.hpp"
#include "fairseek/detail/checks.hpp"

namespace fairseek {

// A fair seekable iterator: a position plus a seek toward a bound.
//
// Laws a backend must keep:
//  - posn found(k,v) means (k,v) is the least remaining pair; posn at a bound
//    means every remaining key satisfies it, with bound(done()) = exhausted.
//  - seek(b) keeps the current pair when its key already satisfies b, so
//    seeking is idempotent and never moves backwards.
//  - one seek call does a bounded amount of work, whether or not it lands on
//    a pair. That is the whole point: an iterator that is still searching can
//    publish what it knows (a bound) instead of blocking its siblings.
template <typename K, typename V>
struct Seek {
  using SeekFn = std::function<Seek(Bound<K>)>;

  Position<K, V> posn;
  SeekFn seek_fn;

  Seek seek(Bound<K> b) const { return seek_fn(std::move(b)); }
};

// Least bound satisfied by everything the iterator may still produce.
template <typename K, typename V>
Bound<K> bound_of(const Seek<K, V>& s) {
  return s.posn.is_found() ? Bound<K>::atleast(s.posn.key()) : s.posn.bound();
}

// Full enumeration: emit each found pair and advance past it; when only a
// bound is known, re-seek with that bound until a pair (or the end) shows up.
// A backend that twice in a row reports the same bound after being sought to
// it is broken, and we abort rather than spin forever.
template <typename K, typename V, typename Fn>
void enumerate_seek(Seek<K, V> s, Fn emit) {
  int stalls = 0;
  for (;;) {
    if (s.posn.is_found()) {
      const K key = s.posn.key();
      emit(key, s.posn.value());
      stalls = 0;
      s = s.seek(Bound<K>::greater(key));
      continue;
    }
    Bound<K> b = s.posn.bound();
    if (b.kind() == Bound<K>::Kind::Done) return;
    s = s.seek(b);
    if (!s.posn.is_found() && s.posn.bound() == b) {
      if (++stalls >= 2) {
        throw std::runtime_error("enumerate_seek: iterator stuck at a bound it was sought to");
      }
    } else {
      stalls = 0;
    }
  }
}

template <typename K, typename V>
std::vector<std::pair<K, V>> to_sorted_seek(Seek<K, V> s) {
  std::vector<std::pair<K, V>> out;
  enumerate_seek(std::move(s), [&](const K& k, const V& v) { out.emplace_back(k, v); });
  return out;
}

namespace detail {

template <typename K, typename V>
Seek<K, V> list_seek_at(std::shared_ptr<const std::vector<std::pair<K, V>>> pairs, std::size_t i) {
  Position<K, V> posn = i < pairs->size()
                            ? Position<K, V>::found((*pairs)[i].first, (*pairs)[i].second)
                            : Position<K, V>::at_bound(Bound<K>::done());
  return Seek<K, V>{std::move(posn), [pairs, i](Bound<K> b) {
                      std::size_t j = i;
                      while (j < pairs->size() && !satisfies(b, (*pairs)[j].first)) ++j;
                      return list_seek_at(pairs, j);
                    }};
}

}  // namespace detail

// List-backed fair iterator; seek(b) drops pairs (current one included) whose
// keys fail b, scanning linearly.
template <typename K, typename V>
Seek<K, V> from_sorted_seek(std::vector<std::pair<K, V>> pairs) {
  detail::require_strictly_ascending(pairs, "from_sorted_seek");
  auto data = std::make_shared<const std::vector<std::pair<K, V>>>(std::move(pairs));
  return detail::list_seek_at(data, 0);
}

// Fair intersection. A pair is exposed only when both sides sit on the same
// key; otherwise the position is the stronger of the two bounds, which is how
// progress on one side reaches the other no matter how intersections nest.
// Seeking does exactly one seek per child.
template <typename K, typename A, typename B, typename F,
          typename C = std::invoke_result_t<const F&, const A&, const B&>>
Seek<K, C> intersect_seek_with(Seek<K, A> s, Seek<K, B> t, F combine) {
  Position<K, C> posn = [&] {
    if (s.posn.is_found() && t.posn.is_found() && s.posn.key() == t.posn.key()) {
      return Position<K, C>::found(s.posn.key(), combine(s.posn.value(), t.posn.value()));
    }
    return Position<K, C>::at_bound(max_bound(bound_of(s), bound_of(t)));
  }();
  typename Seek<K, C>::SeekFn seek_fn = [s = std::move(s), t = std::move(t), combine](Bound<K> b) {
    return intersect_seek_with(s.seek(b), t.seek(b), combine);
  };
  return Seek<K, C>{std::move(posn), std::move(seek_fn)};
}

template <typename K, typename A, typename B>
Seek<K, std::pair<A, B>> intersect_seek(Seek<K, A> s, Seek<K, B> t) {
  return intersect_seek_with(std::move(s), std::move(t),
                             [](const A& a, const B& b) { return std::make_pair(a, b); });
}

// Keywise merge of two iterators over the same value type. A key present in
// both sides gets combine(left value, right value). A side's pair is exposed
// only once the other side's bound has moved strictly past its key; until
// then the position stays a bound, so no pair is emitted out of order.
template <typename K, typename V, typename F>
Seek<K, V> union_seek(Seek<K, V> s, Seek<K, V> t, F combine) {
  const Bound<K> bs = bound_of(s);
  const Bound<K> bt = bound_of(t);
  Position<K, V> posn = [&] {
    if (s.posn.is_found() && t.posn.is_found() && s.posn.key() == t.posn.key()) {
      return Position<K, V>::found(s.posn.key(), combine(s.posn.value(), t.posn.value()));
    }
    if (s.posn.is_found() && compare_bounds(Bound<K>::atleast(s.posn.key()), bt) < 0) {
      return Position<K, V>::found(s.posn.key(), s.posn.value());
    }
    if (t.posn.is_found() && compare_bounds(Bound<K>::atleast(t.posn.key()), bs) < 0) {
      return Position<K, V>::found(t.posn.key(), t.posn.value());
    }
    return Position<K, V>::at_bound(min_bound(bs, bt));
  }();
  typename Seek<K, V>::SeekFn seek_fn = [s = std::move(s), t = std::move(t), combine](Bound<K> b) {
    return union_seek(s.seek(b), t.seek(b), combine);
  };
  return Seek<K, V>{std::move(posn), std::move(seek_fn)};
}

}  // namespace fairseek
