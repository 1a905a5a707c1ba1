#pragma once

#include <compare>
#include <utility>
#include <variant>

namespace fairseek {

// A lower bound on every key an iterator may still produce.
//
//   atleast(k)  all future keys are >= k
//   greater(k)  all future keys are > k
//   done()      there are no future keys
template <typename K>
class Bound {
 public:
  enum class Kind { Atleast, Greater, Done };

  static Bound atleast(K k) { return Bound(Kind::Atleast, std::move(k)); }
  static Bound greater(K k) { return Bound(Kind::Greater, std::move(k)); }
  static Bound done() { return Bound(Kind::Done, K{}); }

  Kind kind() const { return kind_; }

  // Meaningless for done() bounds.
  const K& key() const { return key_; }

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::Done) return true;
    return !(a.key_ < b.key_) && !(b.key_ < a.key_);
  }

 private:
  Bound(Kind kind, K key) : kind_(kind), key_(std::move(key)) {}

  Kind kind_;
  K key_;
};

// True iff key k meets bound b.
template <typename K>
bool satisfies(const Bound<K>& b, const K& k) {
  switch (b.kind()) {
    case Bound<K>::Kind::Atleast:
      return !(k < b.key());
    case Bound<K>::Kind::Greater:
      return b.key() < k;
    case Bound<K>::Kind::Done:
      return false;
  }
  return false;  // unreachable
}

// Total order on bounds: p <= q iff every key satisfying q also satisfies p.
// Within one key, atleast(k) sorts before greater(k); done() is the maximum.
template <typename K>
std::strong_ordering compare_bounds(const Bound<K>& a, const Bound<K>& b) {
  using Kind = typename Bound<K>::Kind;
  const bool a_done = a.kind() == Kind::Done;
  const bool b_done = b.kind() == Kind::Done;
  if (a_done || b_done) return int(a_done) <=> int(b_done);
  if (a.key() < b.key()) return std::strong_ordering::less;
  if (b.key() < a.key()) return std::strong_ordering::greater;
  return int(a.kind() == Kind::Greater) <=> int(b.kind() == Kind::Greater);
}

template <typename K>
Bound<K> max_bound(const Bound<K>& a, const Bound<K>& b) {
  return compare_bounds(a, b) < 0 ? b : a;
}

template <typename K>
Bound<K> min_bound(const Bound<K>& a, const Bound<K>& b) {
  return compare_bounds(a, b) < 0 ? a : b;
}

// What an iterator currently exposes: either the least remaining pair, or a
// bound that every remaining key satisfies. bound(done()) means exhausted.
template <typename K, typename V>
class Position {
 public:
  static Position found(K key, V value) {
    return Position(Located{std::move(key), std::move(value)});
  }
  static Position at_bound(Bound<K> b) { return Position(std::move(b)); }

  bool is_found() const { return v_.index() == 0; }

  const K& key() const { return std::get<0>(v_).key; }
  const V& value() const { return std::get<0>(v_).value; }

  // Only valid when !is_found().
  const Bound<K>& bound() const { return std::get<1>(v_); }

  friend bool operator==(const Position& a, const Position& b) {
    if (a.is_found() != b.is_found()) return false;
    if (a.is_found()) return a.key() == b.key() && a.value() == b.value();
    return a.bound() == b.bound();
  }

 private:
  struct Located {
    K key;
    V value;
  };

  explicit Position(Located l) : v_(std::in_place_index<0>, std::move(l)) {}
  explicit Position(Bound<K> b) : v_(std::in_place_index<1>, std::move(b)) {}

  std::variant<Located, Bound<K>> v_;
};

}  // namespace fairseek
