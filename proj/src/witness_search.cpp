#include "mulrep/witness_search.hpp"

#include <exception>
#include <thread>

#include "mulrep/arith.hpp"
#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"

namespace mulrep {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::squarefree_rich: return "squarefree-rich";
    case Strategy::exhaustive_scan: return "exhaustive-scan";
    case Strategy::hybrid: return "hybrid";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& text) {
  if (text == "squarefree-rich" || text == "SquarefreeRich") return Strategy::squarefree_rich;
  if (text == "exhaustive-scan" || text == "ExhaustiveScan") return Strategy::exhaustive_scan;
  if (text == "hybrid" || text == "Hybrid") return Strategy::hybrid;
  return std::nullopt;
}

CandidateStream::CandidateStream(Strategy strategy, std::uint64_t max_n) : strategy_(strategy), max_n_(max_n) {}

std::uint64_t CandidateStream::prime(std::size_t index) {
  while (primes_.size() <= index) primes_.push_back(primes_.empty() ? 2 : next_prime(primes_.back()));
  return primes_[index];
}

std::optional<std::uint64_t> CandidateStream::next_scan() {
  if (scan_next_ > max_n_) return std::nullopt;
  return scan_next_++;
}

bool CandidateStream::open_group() {
  if (!rich_started_) {
    rich_started_ = true;
    std::uint64_t p = 1;
    unsigned k = 0;
    while (mul_fits(p, prime(k), p) && p <= max_n_) ++k;
    group_omega_ = k + 1;  // decremented below
  }
  queued_.clear();
  if (group_omega_ <= 1) {
    group_omega_ = 0;
    return false;
  }
  --group_omega_;
  std::vector<std::size_t> idx(group_omega_);
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = i;
    value *= prime(i);
  }
  queued_.insert(idx);
  heap_.emplace(value, std::move(idx));
  return true;
}

std::optional<std::uint64_t> CandidateStream::next_rich() {
  while (heap_.empty()) {
    if (rich_started_ && group_omega_ == 0) return std::nullopt;
    if (!open_group()) return std::nullopt;
  }
  auto [value, idx] = heap_.top();
  heap_.pop();
  // Successors: bump one prime index while keeping indices strictly increasing.
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j + 1 < idx.size() && idx[j] + 1 >= idx[j + 1]) continue;
    auto succ = idx;
    ++succ[j];
    std::uint64_t v = value / prime(idx[j]);
    if (!mul_fits(v, prime(succ[j]), v) || v > max_n_) continue;
    if (queued_.insert(succ).second) heap_.emplace(v, std::move(succ));
  }
  return value;
}

std::optional<std::uint64_t> CandidateStream::next() {
  switch (strategy_) {
    case Strategy::exhaustive_scan: return next_scan();
    case Strategy::squarefree_rich: return next_rich();
    case Strategy::hybrid: break;
  }
  while (!(rich_done_ && scan_done_)) {
    const bool use_rich = (turn_rich_ && !rich_done_) || scan_done_;
    if (use_rich) {
      auto v = next_rich();
      if (!v) {
        rich_done_ = true;
        continue;
      }
      if (*v < scan_next_) continue;  // the scan already produced it
      rich_emitted_.insert(*v);
      turn_rich_ = false;
      return v;
    }
    auto v = next_scan();
    if (!v) {
      scan_done_ = true;
      continue;
    }
    if (rich_emitted_.count(*v)) continue;
    turn_rich_ = true;
    return v;
  }
  return std::nullopt;
}

std::string SearchOutcome::guarantee() const {
  switch (strategy) {
    case Strategy::exhaustive_scan:
      return "smallest qualifying n among the examined prefix 2, 3, ..., of [2, max_n]";
    case Strategy::squarefree_rich:
      return "earliest qualifying candidate in squarefree-rich order; a smaller qualifying n may exist";
    case Strategy::hybrid:
      return "earliest qualifying candidate in hybrid order; a smaller qualifying n may exist";
  }
  return "";
}

SearchOutcome find_witness(const MultiplicativeSystem& system, std::uint64_t target, const SearchBudget& budget,
                           unsigned threads, std::size_t tuple_cap) {
  if (target < 1) throw Error(Errc::invalid_argument, "target must be >= 1");
  if (budget.max_candidates < 1) throw Error(Errc::invalid_argument, "max_candidates must be >= 1");
  SearchOutcome out;
  out.strategy = budget.strategy;
  out.target = target;

  CandidateStream stream(budget.strategy, std::min<std::uint64_t>(budget.max_n, INT64_MAX));
  const unsigned workers = detail::resolve_threads(threads, budget.max_candidates);
  const std::size_t batch_size = 1024 * static_cast<std::size_t>(workers);
  const CountOptions opts{0, {}};

  std::vector<std::uint64_t> batch;
  std::vector<std::uint64_t> counts;
  std::vector<std::exception_ptr> errors;
  bool exhausted = false;
  while (!exhausted && out.candidates_tried < budget.max_candidates) {
    batch.clear();
    while (batch.size() < batch_size && out.candidates_tried + batch.size() < budget.max_candidates) {
      auto c = stream.next();
      if (!c) {
        exhausted = true;
        break;
      }
      batch.push_back(*c);
    }
    if (batch.empty()) break;
    counts.assign(batch.size(), 0);
    errors.assign(batch.size(), nullptr);
    auto work = [&](unsigned w) {
      for (std::size_t i = w; i < batch.size(); i += workers) {
        try {
          counts[i] = count_system_reps(system, batch[i], opts).count;
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      ++out.candidates_tried;
      if (out.candidates_tried == 1 || counts[i] > out.max_count_seen) {
        out.max_count_seen = counts[i];
        out.argmax = batch[i];
      }
      if (counts[i] >= target) {
        auto w = count_system_reps(system, batch[i], {tuple_cap, {}});
        if (w.count < target) throw Error(Errc::invalid_argument, "witness failed re-verification");
        out.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

}  // namespace mulrep
