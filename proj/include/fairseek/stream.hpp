#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace fairseek {

template <typename E>
class Stream;

namespace detail {

template <typename E>
struct EmptyNode {};

template <typename E>
struct YieldNode {
  E element;
  Stream<E> tail;
};

template <typename E>
struct LaterNode {
  Stream<E> tail;
};

template <typename E>
using StreamNode = std::variant<EmptyNode<E>, YieldNode<E>, LaterNode<E>>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

inline std::uint64_t& stream_force_counter() {
  thread_local std::uint64_t count = 0;
  return count;
}

}  // namespace detail

// Number of stream constructors materialized on this thread since the last
// reset. Materializing a constructor is the unit of work a stream may spend
// before handing back control, so tests use this to bound work per step.
inline std::uint64_t stream_force_count() { return detail::stream_force_counter(); }
inline void reset_stream_force_count() { detail::stream_force_counter() = 0; }

// A lazily produced sequence. Observing a stream gives one of three
// constructors: the end, an element plus a tail, or a bare progress marker
// (a "later") plus a tail. Tails are suspensions evaluated at most once.
//
// Streams built by this module are later-productive: a generator that can
// loop forever emits a later after finitely many elements, so forcing any
// single constructor is finite work. Forcing is single-threaded.
template <typename E>
class Stream {
 public:
  using Node = detail::StreamNode<E>;

  Stream() : Stream(empty()) {}

  static Stream empty() { return Stream(std::make_shared<Cell>(Node(detail::EmptyNode<E>{}))); }

  static Stream yield(E element, Stream tail) {
    return Stream(std::make_shared<Cell>(Node(detail::YieldNode<E>{std::move(element), std::move(tail)})));
  }

  static Stream later(Stream tail) {
    return Stream(std::make_shared<Cell>(Node(detail::LaterNode<E>{std::move(tail)})));
  }

  // A suspended constructor: produce() runs once, on first force.
  static Stream make(std::function<Node()> produce) {
    return Stream(std::make_shared<Cell>(std::move(produce)));
  }

  const Node& force() const {
    Cell& c = *cell_;
    if (!c.node) {
      if (!c.produce) throw std::logic_error("stream forced while producing its own constructor");
      auto produce = std::move(c.produce);
      c.produce = nullptr;
      c.node.emplace(produce());
      ++detail::stream_force_counter();
    }
    return *c.node;
  }

 private:
  struct Cell {
    explicit Cell(Node n) : node(std::move(n)) { ++detail::stream_force_counter(); }
    explicit Cell(std::function<Node()> p) : produce(std::move(p)) {}

    // Tear down forced chains iteratively; a recursive unwind overflows the
    // stack on long streams.
    ~Cell() {
      std::optional<Node> n = std::move(node);
      node.reset();
      while (n) {
        std::shared_ptr<Cell> tail_cell;
        if (auto* y = std::get_if<detail::YieldNode<E>>(&*n)) {
          tail_cell = std::move(y->tail.cell_);
        } else if (auto* l = std::get_if<detail::LaterNode<E>>(&*n)) {
          tail_cell = std::move(l->tail.cell_);
        }
        n.reset();
        if (tail_cell && tail_cell.use_count() == 1) {
          n = std::move(tail_cell->node);
          tail_cell->node.reset();
        }
      }
    }

    std::function<Node()> produce;
    std::optional<Node> node;
  };

  explicit Stream(std::shared_ptr<Cell> cell) : cell_(std::move(cell)) {}

  std::shared_ptr<Cell> cell_;
};

enum class ObserveStatus { Completed, GotCount, OutOfFuel };

template <typename E>
struct ObserveResult {
  std::vector<E> elements;
  ObserveStatus status = ObserveStatus::Completed;

  friend bool operator==(const ObserveResult&, const ObserveResult&) = default;
};

// Pull up to `count` elements, forcing at most `fuel` constructors. The count
// check wins when both limits land on the same step.
template <typename E>
ObserveResult<E> observe(Stream<E> s, std::size_t count, std::uint64_t fuel) {
  ObserveResult<E> r;
  for (;;) {
    if (r.elements.size() == count) {
      r.status = ObserveStatus::GotCount;
      return r;
    }
    if (fuel == 0) {
      r.status = ObserveStatus::OutOfFuel;
      return r;
    }
    --fuel;
    const auto& node = s.force();
    if (std::holds_alternative<detail::EmptyNode<E>>(node)) {
      r.status = ObserveStatus::Completed;
      return r;
    }
    if (const auto* y = std::get_if<detail::YieldNode<E>>(&node)) {
      r.elements.push_back(y->element);
      Stream<E> next = y->tail;
      s = std::move(next);
    } else {
      Stream<E> next = std::get<detail::LaterNode<E>>(node).tail;
      s = std::move(next);
    }
  }
}

namespace detail {

template <typename E>
Stream<E> from_list_at(std::shared_ptr<const std::vector<E>> xs, std::size_t i, std::size_t run,
                       std::size_t later_every) {
  return Stream<E>::make([xs = std::move(xs), i, run, later_every]() -> StreamNode<E> {
    if (run == later_every) return LaterNode<E>{from_list_at(xs, i, 0, later_every)};
    if (i == xs->size()) return EmptyNode<E>{};
    return YieldNode<E>{(*xs)[i], from_list_at(xs, i + 1, run + 1, later_every)};
  });
}

}  // namespace detail

// Stream of xs in order, with one later inserted after every `later_every`
// elements.
template <typename E>
Stream<E> from_list(std::vector<E> xs, std::size_t later_every) {
  if (later_every == 0) throw std::invalid_argument("from_list: later_every must be at least 1");
  auto data = std::make_shared<const std::vector<E>>(std::move(xs));
  return detail::from_list_at<E>(std::move(data), 0, 0, later_every);
}

// Endless progress markers; never an element, never the end.
template <typename E>
Stream<E> never_yield() {
  return Stream<E>::make([]() -> detail::StreamNode<E> {
    return detail::LaterNode<E>{never_yield<E>()};
  });
}

// start, start+1, start+2, ... with a later after each element.
inline Stream<std::int64_t> naturals_from(std::int64_t start) {
  using E = std::int64_t;
  return Stream<E>::make([start]() -> detail::StreamNode<E> {
    return detail::YieldNode<E>{start, Stream<E>::make([start]() -> detail::StreamNode<E> {
                                  return detail::LaterNode<E>{naturals_from(start + 1)};
                                })};
  });
}

// Concatenation. Inspects t only once s is exhausted, so an s that never
// ends starves t entirely.
template <typename E>
Stream<E> append_stream(Stream<E> s, Stream<E> t) {
  using Node = detail::StreamNode<E>;
  return Stream<E>::make([s = std::move(s), t = std::move(t)]() -> Node {
    return std::visit(detail::overloaded{
                          [&](const detail::EmptyNode<E>&) -> Node { return t.force(); },
                          [&](const detail::YieldNode<E>& y) -> Node {
                            return detail::YieldNode<E>{y.element, append_stream(y.tail, t)};
                          },
                          [&](const detail::LaterNode<E>& l) -> Node {
                            return detail::LaterNode<E>{append_stream(l.tail, t)};
                          },
                      },
                      s.force());
  });
}

// Alternates focus after each yielded element; a later keeps focus, so a
// stream stuck searching (all laters) still starves the other side.
template <typename E>
Stream<E> interleave_stream(Stream<E> s, Stream<E> t) {
  using Node = detail::StreamNode<E>;
  return Stream<E>::make([s = std::move(s), t = std::move(t)]() -> Node {
    return std::visit(detail::overloaded{
                          [&](const detail::EmptyNode<E>&) -> Node { return t.force(); },
                          [&](const detail::YieldNode<E>& y) -> Node {
                            return detail::YieldNode<E>{y.element, interleave_stream(t, y.tail)};
                          },
                          [&](const detail::LaterNode<E>& l) -> Node {
                            return detail::LaterNode<E>{interleave_stream(l.tail, t)};
                          },
                      },
                      s.force());
  });
}

// Fair union: an element keeps focus, a later hands focus to the other
// stream. Neither input can block the other for more than one work bound.
template <typename E>
Stream<E> union_stream(Stream<E> s, Stream<E> t) {
  using Node = detail::StreamNode<E>;
  return Stream<E>::make([s = std::move(s), t = std::move(t)]() -> Node {
    return std::visit(detail::overloaded{
                          [&](const detail::EmptyNode<E>&) -> Node { return t.force(); },
                          [&](const detail::YieldNode<E>& y) -> Node {
                            return detail::YieldNode<E>{y.element, union_stream(y.tail, t)};
                          },
                          [&](const detail::LaterNode<E>& l) -> Node {
                            return detail::LaterNode<E>{union_stream(t, l.tail)};
                          },
                      },
                      s.force());
  });
}

// Keeps exactly the elements satisfying pred, emitting nothing for dropped
// ones; every later of the input survives. Needs a later-productive input:
// the skip loop below runs until the next surviving constructor.
template <typename E, typename Pred>
Stream<E> filter_stream(Pred pred, Stream<E> s) {
  using Node = detail::StreamNode<E>;
  return Stream<E>::make([pred, s = std::move(s)]() -> Node {
    Stream<E> cur = s;
    for (;;) {
      const auto& node = cur.force();
      if (std::holds_alternative<detail::EmptyNode<E>>(node)) return detail::EmptyNode<E>{};
      if (const auto* l = std::get_if<detail::LaterNode<E>>(&node)) {
        return detail::LaterNode<E>{filter_stream<E, Pred>(pred, l->tail)};
      }
      const auto& y = std::get<detail::YieldNode<E>>(node);
      if (pred(y.element)) {
        return detail::YieldNode<E>{y.element, filter_stream<E, Pred>(pred, y.tail)};
      }
      Stream<E> next = y.tail;
      cur = std::move(next);
    }
  });
}

}  // namespace fairseek
