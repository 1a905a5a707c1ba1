#include "fairseek/seek.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <doctest.h>

#include "fairseek/naive_iter.hpp"
#include "oracles.hpp"

using namespace fairseek;

namespace {

using K = std::int64_t;
using B = Bound<K>;
using Pairs = std::vector<std::pair<K, std::string>>;

std::string concat(const std::string& a, const std::string& b) { return a + b; }

B random_bound(std::mt19937_64& rng, K lo, K hi) {
  std::uniform_int_distribution<int> kind(0, 8);
  std::uniform_int_distribution<K> key(lo, hi);
  const int k = kind(rng);
  if (k == 0) return B::done();
  return k % 2 ? B::atleast(key(rng)) : B::greater(key(rng));
}

// An iterator that reports the same bound no matter how it is sought.
Seek<K, std::string> stuck_at(K key) {
  return Seek<K, std::string>{Position<K, std::string>::at_bound(B::atleast(key)),
                              [key](Bound<K>) { return stuck_at(key); }};
}

}  // namespace

TEST_CASE("list-backed seek exposes the least pair or exhaustion") {
  CHECK_FALSE(from_sorted_seek(Pairs{}).posn.is_found());
  CHECK(from_sorted_seek(Pairs{}).posn.bound() == B::done());

  auto one = from_sorted_seek(Pairs{{2, "b"}});
  const auto kept = one.seek(B::atleast(2));
  REQUIRE(kept.posn.is_found());
  CHECK(kept.posn.key() == 2);
  CHECK(kept.posn.value() == "b");

  const auto past = one.seek(B::greater(2));
  CHECK_FALSE(past.posn.is_found());
  CHECK(past.posn.bound() == B::done());

  CHECK_THROWS_AS(from_sorted_seek(Pairs{{2, "a"}, {2, "b"}}), std::invalid_argument);
}

TEST_CASE("enumeration visits every pair in order") {
  const Pairs two = {{1, "a"}, {2, "b"}};
  CHECK(to_sorted_seek(from_sorted_seek(two)) == two);

  auto rng = oracles::make_rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const auto pairs = oracles::random_sorted_pairs(rng, iter % 40, 120);
    CHECK(to_sorted_seek(from_sorted_seek(pairs)) == pairs);
  }
}

TEST_CASE("bound_of reads the position") {
  auto found = Seek<K, std::string>{Position<K, std::string>::found(7, "x"),
                                    [](Bound<K>) { return stuck_at(0); }};
  CHECK(bound_of(found) == B::atleast(7));
  CHECK(bound_of(stuck_at(3)) == B::atleast(3));

  auto done = from_sorted_seek(Pairs{});
  CHECK(bound_of(done) == B::done());
  auto greater = Seek<K, std::string>{Position<K, std::string>::at_bound(B::greater(3)),
                                      [](Bound<K>) { return stuck_at(0); }};
  CHECK(bound_of(greater) == B::greater(3));
}

TEST_CASE("intersection exposes a pair only when both sides agree on the key") {
  auto s = from_sorted_seek(Pairs{{1, "a"}});
  auto t = from_sorted_seek(Pairs{{2, "c"}, {3, "d"}});
  const auto st = intersect_seek(s, t);
  REQUIRE_FALSE(st.posn.is_found());
  CHECK(st.posn.bound() == B::atleast(2));

  const auto exhausted = intersect_seek(s, from_sorted_seek(Pairs{}));
  CHECK_FALSE(exhausted.posn.is_found());
  CHECK(exhausted.posn.bound() == B::done());

  const auto got = to_sorted_seek(intersect_seek(from_sorted_seek(Pairs{{1, "a"}, {2, "b"}}),
                                                 from_sorted_seek(Pairs{{2, "c"}, {3, "d"}})));
  REQUIRE(got.size() == 1);
  CHECK(got[0].first == 2);
  CHECK(got[0].second == std::make_pair(std::string("b"), std::string("c")));

  Pairs evens, odds;
  for (K x = 0; x <= 20; x += 2) evens.emplace_back(x, "even");
  for (K x = 1; x <= 20; x += 2) odds.emplace_back(x, "odd");
  CHECK(to_sorted_seek(intersect_seek(from_sorted_seek(evens), from_sorted_seek(odds))).empty());
}

TEST_CASE("intersection agrees with the brute-force oracle and the baseline") {
  auto rng = oracles::make_rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = oracles::random_sorted_pairs(rng, iter % 50, 80);
    const auto b = oracles::random_sorted_pairs(rng, (iter * 7) % 50, 80);
    const auto fair = to_sorted_seek(intersect_seek(from_sorted_seek(a), from_sorted_seek(b)));
    CHECK(fair == oracles::brute_intersect(a, b));
    CHECK(fair == to_sorted_iter(intersect_iter(from_sorted_iter(a), from_sorted_iter(b))));
  }
}

TEST_CASE("union merges keywise and combines collisions") {
  auto first = [](const std::string& a, const std::string&) { return a; };
  CHECK(to_sorted_seek(union_seek(from_sorted_seek(Pairs{{1, "a"}}),
                                  from_sorted_seek(Pairs{{2, "b"}}), first)) ==
        Pairs{{1, "a"}, {2, "b"}});

  const Pairs solo = {{4, "x"}, {9, "y"}};
  CHECK(to_sorted_seek(union_seek(from_sorted_seek(solo), from_sorted_seek(Pairs{}), first)) ==
        solo);
  CHECK(to_sorted_seek(union_seek(from_sorted_seek(Pairs{}), from_sorted_seek(solo), first)) ==
        solo);

  CHECK(to_sorted_seek(union_seek(from_sorted_seek(Pairs{{1, "a"}}),
                                  from_sorted_seek(Pairs{{1, "b"}}), concat)) ==
        Pairs{{1, "ab"}});
}

TEST_CASE("union agrees with the sorted-merge oracle") {
  auto rng = oracles::make_rng(33);
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = oracles::random_sorted_pairs(rng, iter % 50, 80);
    const auto b = oracles::random_sorted_pairs(rng, (iter * 7) % 50, 80);
    CHECK(to_sorted_seek(union_seek(from_sorted_seek(a), from_sorted_seek(b), concat)) ==
          oracles::sorted_merge(a, b, concat));
  }
}

TEST_CASE("reassociating intersections changes only the value nesting") {
  auto rng = oracles::make_rng(34);
  for (int iter = 0; iter < 200; ++iter) {
    const auto a = oracles::random_sorted_pairs(rng, iter % 40, 50);
    const auto b = oracles::random_sorted_pairs(rng, (iter * 3) % 40, 50);
    const auto c = oracles::random_sorted_pairs(rng, (iter * 7) % 40, 50);

    const auto left = to_sorted_seek(intersect_seek(
        intersect_seek(from_sorted_seek(a), from_sorted_seek(b)), from_sorted_seek(c)));
    const auto right = to_sorted_seek(intersect_seek(
        from_sorted_seek(a), intersect_seek(from_sorted_seek(b), from_sorted_seek(c))));

    using Flat = std::vector<std::pair<K, std::tuple<std::string, std::string, std::string>>>;
    Flat lf, rf;
    for (const auto& [k, v] : left) lf.emplace_back(k, std::make_tuple(v.first.first, v.first.second, v.second));
    for (const auto& [k, v] : right) rf.emplace_back(k, std::make_tuple(v.first, v.second.first, v.second.second));
    CHECK(lf == rf);
    CHECK(lf == oracles::brute_intersect3(a, b, c));
  }
}

TEST_CASE("seeking is idempotent and never regresses") {
  auto rng = oracles::make_rng(35);
  for (int iter = 0; iter < 300; ++iter) {
    const auto pairs = oracles::random_sorted_pairs(rng, iter % 30, 60);
    auto s = from_sorted_seek(pairs);
    for (int hops = 0; hops < 8; ++hops) {
      const B b = random_bound(rng, -5, 65);
      const auto once = s.seek(b);
      const auto twice = once.seek(b);
      CHECK(once.posn == twice.posn);
      if (once.posn.is_found()) {
        CHECK(satisfies(b, once.posn.key()));
      } else {
        CHECK(compare_bounds(once.posn.bound(), b) != std::strong_ordering::less);
      }
      s = once;
    }
  }
}

TEST_CASE("an iterator that refuses to advance is reported, not spun on") {
  CHECK_THROWS_AS(to_sorted_seek(stuck_at(5)), std::runtime_error);
}
