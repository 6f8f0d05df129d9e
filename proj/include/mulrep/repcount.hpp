#ifndef MULREP_REPCOUNT_HPP
#define MULREP_REPCOUNT_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mulrep/arith.hpp"
#include "mulrep/integer_sets.hpp"

namespace mulrep {

/// n together with its exact representation count and the first few
/// representing tuples. `count` is exact even when `truncated` is set.
struct RepWitness {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  std::vector<std::vector<std::uint64_t>> tuples;
  bool truncated = false;
};

struct CountOptions {
  std::size_t tuple_cap = 64;
  FactorLimits limits{};
};

/// Number of ordered tuples (b_1, ..., b_h) with b_i in part i and product n.
/// Tuples are listed in lexicographic order.
RepWitness count_system_reps(const MultiplicativeSystem& system, std::uint64_t n, const CountOptions& opts = {});

RepWitness count_basis_reps(const SetDescription& set, unsigned h, std::uint64_t n, const CountOptions& opts = {});

/// Number of ordered h-tuples from A summing to n. 0 takes part only if A
/// contains it.
std::uint64_t count_additive_reps(const SetDescription& set, unsigned h, std::uint64_t n);

/// Exact extrema of g over a finite window. This is window evidence for the
/// asymptotic liminf/limsup, never a value of either.
struct WindowStats {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t min_count = 0;
  std::uint64_t argmin = 0;
  std::uint64_t max_count = 0;
  std::uint64_t argmax = 0;

  friend bool operator==(const WindowStats&, const WindowStats&) = default;
};

/// threads == 0 uses the hardware concurrency. The result does not depend on
/// the thread count; ties go to the smallest n.
WindowStats window_stats(const MultiplicativeSystem& system, std::uint64_t lo, std::uint64_t hi, unsigned threads = 0);

/// (n, g(n)) for every n in [lo, hi].
std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_counts(const MultiplicativeSystem& system, std::uint64_t lo,
                                                                 std::uint64_t hi, unsigned threads = 0);

namespace detail {
unsigned resolve_threads(unsigned requested, std::uint64_t work_items);
}

}  // namespace mulrep

#endif  // MULREP_REPCOUNT_HPP
