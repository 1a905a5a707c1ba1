#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "fairseek/bound.hpp"
#include "fairseek/seek.hpp"
#include "fairseek/sorted_array.hpp"

namespace fairseek {

struct Unit {
  friend constexpr bool operator==(Unit, Unit) { return true; }
};

template <typename K>
class Trie;

// Value carried at a trie level: nothing at the innermost level, the next
// level's trie otherwise.
template <typename K>
using TrieValue = std::variant<Unit, Trie<K>>;

// A d-ary relation as d nested fair iterators: the root enumerates distinct
// first components, and each found key carries the trie of the remaining
// columns. Sub-tries are built when their key is first found, never ahead of
// time, so one seek stays bounded work.
template <typename K>
class Trie {
 public:
  using Level = Seek<K, TrieValue<K>>;

  Trie(Level root, int depth)
      : root_(std::make_shared<const Level>(std::move(root))), depth_(depth) {}

  int depth() const { return depth_; }
  const Level& root() const { return *root_; }

 private:
  std::shared_ptr<const Level> root_;
  int depth_;
};

namespace detail {

template <typename K>
struct RowTable {
  std::vector<K> cells;  // row-major
  std::size_t arity = 0;

  const K& at(std::int64_t row, std::size_t col) const {
    return cells[static_cast<std::size_t>(row) * arity + col];
  }
};

// One trie level over the row range [begin, end), all rows sharing the same
// prefix above `col`. Column values within the range are nondecreasing, so
// both the group split and seeking gallop.
template <typename K>
typename Trie<K>::Level trie_level(std::shared_ptr<const RowTable<K>> t, ProbeCounters* c,
                                   std::size_t col, std::int64_t begin, std::int64_t end) {
  Position<K, TrieValue<K>> posn = [&] {
    if (begin >= end) return Position<K, TrieValue<K>>::at_bound(Bound<K>::done());
    count_probe(c);
    const K& key = t->at(begin, col);
    const std::int64_t group_end = gallop(
        [&](std::int64_t row) {
          count_probe(c);
          return key < t->at(row, col);
        },
        begin, end);
    TrieValue<K> value = col + 1 == t->arity
                             ? TrieValue<K>(Unit{})
                             : TrieValue<K>(Trie<K>(trie_level(t, c, col + 1, begin, group_end),
                                                    static_cast<int>(t->arity - col) - 1));
    return Position<K, TrieValue<K>>::found(key, std::move(value));
  }();
  return typename Trie<K>::Level{std::move(posn), [t, c, col, begin, end](Bound<K> b) {
                                   if (c) ++c->seeks;
                                   const std::int64_t i = gallop(
                                       [&](std::int64_t row) {
                                         count_probe(c);
                                         return satisfies(b, t->at(row, col));
                                       },
                                       begin, end);
                                   return trie_level(t, c, col, i, end);
                                 }};
}

template <typename K>
bool lex_less(const std::vector<K>& a, const std::vector<K>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

}  // namespace detail

// Build a depth-d trie from lexicographically sorted, duplicate-free rows of
// uniform arity d.
template <typename K>
Trie<K> trie_from_sorted_tuples(const std::vector<std::vector<K>>& rows, int depth,
                                ProbeCounters* counters = nullptr) {
  if (depth < 1) throw std::invalid_argument("trie_from_sorted_tuples: depth must be positive");
  auto table = std::make_shared<detail::RowTable<K>>();
  table->arity = static_cast<std::size_t>(depth);
  table->cells.reserve(rows.size() * table->arity);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != table->arity) {
      throw std::invalid_argument("trie_from_sorted_tuples: row arity differs from depth");
    }
    if (i > 0 && !detail::lex_less(rows[i - 1], rows[i])) {
      throw std::invalid_argument(
          "trie_from_sorted_tuples: rows must be strictly ascending lexicographically");
    }
    table->cells.insert(table->cells.end(), rows[i].begin(), rows[i].end());
  }
  const std::int64_t n = static_cast<std::int64_t>(rows.size());
  return Trie<K>(detail::trie_level<K>(std::move(table), counters, 0, 0, n), depth);
}

// Binary trie intersection: fair intersection at this level, recursing into
// the sub-tries only when a shared key is found.
template <typename K>
Trie<K> intersect_trie_pair(const Trie<K>& a, const Trie<K>& b) {
  if (a.depth() != b.depth()) {
    throw std::invalid_argument("intersect_trie_pair: tries differ in depth");
  }
  const int depth = a.depth();
  auto combine = [depth](const TrieValue<K>& va, const TrieValue<K>& vb) -> TrieValue<K> {
    if (depth == 1) return Unit{};
    return intersect_trie_pair(std::get<Trie<K>>(va), std::get<Trie<K>>(vb));
  };
  return Trie<K>(intersect_seek_with(a.root(), b.root(), combine), depth);
}

// Multi-way intersection as a left fold of the binary one; the fair interface
// keeps the fold free of the usual nesting penalty.
template <typename K>
Trie<K> intersect_tries(const std::vector<Trie<K>>& ts) {
  if (ts.empty()) throw std::invalid_argument("intersect_tries: need at least one trie");
  Trie<K> acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = intersect_trie_pair(acc, ts[i]);
  return acc;
}

namespace detail {

template <typename K>
void trie_rows_into(const typename Trie<K>::Level& level, int depth, std::vector<K>& prefix,
                    std::vector<std::vector<K>>& out) {
  enumerate_seek(level, [&](const K& k, const TrieValue<K>& v) {
    prefix.push_back(k);
    if (depth == 1) {
      out.push_back(prefix);
    } else {
      trie_rows_into<K>(std::get<Trie<K>>(v).root(), depth - 1, prefix, out);
    }
    prefix.pop_back();
  });
}

}  // namespace detail

// Enumerate every tuple, lexicographically sorted.
template <typename K>
std::vector<std::vector<K>> trie_to_tuples(const Trie<K>& t) {
  std::vector<std::vector<K>> out;
  std::vector<K> prefix;
  detail::trie_rows_into<K>(t.root(), t.depth(), prefix, out);
  return out;
}

}  // namespace fairseek
