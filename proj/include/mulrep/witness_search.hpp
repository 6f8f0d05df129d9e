#ifndef MULREP_WITNESS_SEARCH_HPP
#define MULREP_WITNESS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mulrep/integer_sets.hpp"
#include "mulrep/repcount.hpp"

namespace mulrep {

enum class Strategy { squarefree_rich, exhaustive_scan, hybrid };

const char* strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& text);

struct SearchBudget {
  std::uint64_t max_candidates = 1'000'000;
  std::uint64_t max_n = 1'000'000;
  Strategy strategy = Strategy::hybrid;
};

/// Lazy, duplicate-free stream of candidates in [2, max_n].
///
///  - exhaustive_scan: 2, 3, 4, ...
///  - squarefree_rich: squarefree integers grouped by omega, the group with
///    the most prime factors first (so it opens with the largest primorial
///    <= max_n); ascending value inside each group.
///  - hybrid: alternates squarefree_rich and exhaustive_scan, starting with
///    squarefree_rich, skipping values already emitted.
class CandidateStream {
 public:
  CandidateStream(Strategy strategy, std::uint64_t max_n);

  std::optional<std::uint64_t> next();

 private:
  std::optional<std::uint64_t> next_scan();
  std::optional<std::uint64_t> next_rich();
  bool open_group();
  std::uint64_t prime(std::size_t index);

  Strategy strategy_;
  std::uint64_t max_n_;

  std::uint64_t scan_next_ = 2;

  using Entry = std::pair<std::uint64_t, std::vector<std::size_t>>;  // value, prime indices
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
  std::set<std::vector<std::size_t>> queued_;
  unsigned group_omega_ = 0;  // omega of the current group; 0 when exhausted
  bool rich_started_ = false;
  std::vector<std::uint64_t> primes_;

  bool turn_rich_ = true;
  bool rich_done_ = false, scan_done_ = false;
  std::unordered_set<std::uint64_t> rich_emitted_;
};

struct SearchOutcome {
  std::optional<RepWitness> witness;  // count >= target when present
  Strategy strategy = Strategy::hybrid;
  std::uint64_t target = 0;
  std::uint64_t candidates_tried = 0;
  std::uint64_t max_count_seen = 0;
  std::uint64_t argmax = 0;  // earliest candidate in stream order reaching max_count_seen

  /// What "first" means for this strategy.
  std::string guarantee() const;
};

/// Evaluates candidates in stream order and returns the earliest one with
/// g(n) >= target. The witness is recounted with tuples before it is returned.
SearchOutcome find_witness(const MultiplicativeSystem& system, std::uint64_t target, const SearchBudget& budget,
                           unsigned threads = 0, std::size_t tuple_cap = 64);

}  // namespace mulrep

#endif  // MULREP_WITNESS_SEARCH_HPP
