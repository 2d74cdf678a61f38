#ifndef CIRCDLP_OPCOUNT_HPP
#define CIRCDLP_OPCOUNT_HPP

#include <atomic>
#include <cstdint>

namespace circdlp {

/// A plain snapshot of operation tallies.
struct OpCounts {
  std::uint64_t field_adds = 0;
  std::uint64_t field_mults = 0;
  std::uint64_t field_squares = 0;
  std::uint64_t group_mults = 0;

  OpCounts operator-(const OpCounts& rhs) const {
    return {field_adds - rhs.field_adds, field_mults - rhs.field_mults,
            field_squares - rhs.field_squares, group_mults - rhs.group_mults};
  }
  bool operator==(const OpCounts&) const = default;
};

/// Contention-safe accumulator of field- and group-operation counts.
///
/// Counting is opt-in: operations tick the counter attached to the calling
/// thread via OpCounterScope, and are free-running otherwise. field_* counts
/// tick once per field add/multiply/square; group_mults ticks once per
/// group-level multiplication (circulant product, quotient-ring product or
/// unit-group product inside a solver). Squarings taken through the
/// permutation fast path tick field_squares only, never field_mults.
class OpCounter {
 public:
  void add_field_add() { field_adds_.fetch_add(1, std::memory_order_relaxed); }
  void add_field_mult() { field_mults_.fetch_add(1, std::memory_order_relaxed); }
  void add_field_square() { field_squares_.fetch_add(1, std::memory_order_relaxed); }
  void add_group_mult() { group_mults_.fetch_add(1, std::memory_order_relaxed); }

  /// Folds a snapshot in; lets nested measurement scopes forward their
  /// tallies to the enclosing counter.
  void add_counts(const OpCounts& c) {
    field_adds_.fetch_add(c.field_adds, std::memory_order_relaxed);
    field_mults_.fetch_add(c.field_mults, std::memory_order_relaxed);
    field_squares_.fetch_add(c.field_squares, std::memory_order_relaxed);
    group_mults_.fetch_add(c.group_mults, std::memory_order_relaxed);
  }

  OpCounts snapshot() const {
    return {field_adds_.load(std::memory_order_relaxed),
            field_mults_.load(std::memory_order_relaxed),
            field_squares_.load(std::memory_order_relaxed),
            group_mults_.load(std::memory_order_relaxed)};
  }

  void reset() {
    field_adds_ = 0;
    field_mults_ = 0;
    field_squares_ = 0;
    group_mults_ = 0;
  }

 private:
  std::atomic<std::uint64_t> field_adds_{0};
  std::atomic<std::uint64_t> field_mults_{0};
  std::atomic<std::uint64_t> field_squares_{0};
  std::atomic<std::uint64_t> group_mults_{0};
};

namespace detail {
inline thread_local OpCounter* tl_counter = nullptr;

inline void tick_field_add() {
  if (tl_counter) tl_counter->add_field_add();
}
inline void tick_field_mult() {
  if (tl_counter) tl_counter->add_field_mult();
}
inline void tick_field_square() {
  if (tl_counter) tl_counter->add_field_square();
}
inline void tick_group_mult() {
  if (tl_counter) tl_counter->add_group_mult();
}
}  // namespace detail

/// Attaches a counter to the current thread for the scope's lifetime.
/// Scopes nest; worker threads must attach their own scope.
class OpCounterScope {
 public:
  explicit OpCounterScope(OpCounter* counter) : prev_(detail::tl_counter) {
    detail::tl_counter = counter;
  }
  ~OpCounterScope() { detail::tl_counter = prev_; }
  OpCounterScope(const OpCounterScope&) = delete;
  OpCounterScope& operator=(const OpCounterScope&) = delete;

 private:
  OpCounter* prev_;
};

}  // namespace circdlp

#endif  // CIRCDLP_OPCOUNT_HPP
