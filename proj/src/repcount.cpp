#include "mulrep/repcount.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"

namespace mulrep {

namespace detail {

unsigned resolve_threads(unsigned requested, std::uint64_t work_items) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t useful = work_items / 256 + 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, useful));
}

}  // namespace detail

namespace {

struct Divisor {
  std::uint64_t value;
  std::vector<unsigned> exponents;
};

// Walks the divisor lattice of n one coordinate at a time.
class TupleCounter {
 public:
  TupleCounter(const MultiplicativeSystem& system, const Factorization& f, std::size_t cap)
      : system_(system), f_(f), cap_(cap) {}

  RepWitness run(std::uint64_t n) {
    witness_.n = n;
    std::vector<unsigned> exps(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i) exps[i] = f_[i].exponent;
    prefix_.clear();
    descend(0, n, exps);
    return std::move(witness_);
  }

 private:
  Factorization factorization_of(const std::vector<unsigned>& exps) const {
    Factorization out;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) out.push_back({f_[i].prime, exps[i]});
    return out;
  }

  std::vector<Divisor> divisors_of(const std::vector<unsigned>& exps) const {
    std::vector<Divisor> out{{1, std::vector<unsigned>(exps.size(), 0)}};
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const std::size_t base = out.size();
      std::uint64_t power = 1;
      for (unsigned e = 1; e <= exps[i]; ++e) {
        power *= f_[i].prime;
        for (std::size_t j = 0; j < base; ++j) {
          Divisor d = out[j];
          d.value *= power;
          d.exponents[i] = e;
          out.push_back(std::move(d));
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Divisor& a, const Divisor& b) { return a.value < b.value; });
    return out;
  }

  // Divisors of the remaining cofactor that can possibly lie in `set`. Sparse
  // kinds are generated directly; everything else walks the whole lattice.
  std::vector<Divisor> candidates(const SetDescription& set, std::uint64_t rest,
                                  const std::vector<unsigned>& exps) const {
    using namespace set_kind;
    const auto& kind = set.kind();
    const bool primes_only = std::holds_alternative<Primes>(kind);
    const bool primes_one = std::holds_alternative<PrimesWithOne>(kind);
    if (primes_only || primes_one) {
      std::vector<Divisor> out;
      if (primes_one) out.push_back({1, std::vector<unsigned>(exps.size(), 0)});
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i]) continue;
        Divisor d{f_[i].prime, std::vector<unsigned>(exps.size(), 0)};
        d.exponents[i] = 1;
        out.push_back(std::move(d));
      }
      return out;
    }
    if (const auto* single = std::get_if<Singleton>(&kind)) {
      std::vector<Divisor> out;
      for (auto v : single->values) {
        if (v == 0 || rest % v != 0) continue;
        Divisor d{v, std::vector<unsigned>(exps.size(), 0)};
        std::uint64_t m = v;
        for (std::size_t i = 0; i < exps.size(); ++i)
          while (m % f_[i].prime == 0) m /= f_[i].prime, ++d.exponents[i];
        out.push_back(std::move(d));
      }
      return out;
    }
    return divisors_of(exps);
  }

  void record() {
    witness_.count = checked_add(witness_.count, 1);
    if (witness_.tuples.size() < cap_)
      witness_.tuples.push_back(prefix_);
    else
      witness_.truncated = true;
  }

  void descend(std::size_t level, std::uint64_t rest, const std::vector<unsigned>& exps) {
    const std::size_t h = system_.order();
    if (level + 1 == h) {
      if (system_.part(level).contains_factored(rest, factorization_of(exps))) {
        prefix_.push_back(rest);
        record();
        prefix_.pop_back();
      }
      return;
    }
    for (const auto& d : candidates(system_.part(level), rest, exps)) {
      if (!system_.part(level).contains_factored(d.value, factorization_of(d.exponents))) continue;
      std::vector<unsigned> left(exps);
      for (std::size_t i = 0; i < left.size(); ++i) left[i] -= d.exponents[i];
      prefix_.push_back(d.value);
      descend(level + 1, rest / d.value, left);
      prefix_.pop_back();
    }
  }

  const MultiplicativeSystem& system_;
  const Factorization& f_;
  std::size_t cap_;
  std::vector<std::uint64_t> prefix_;
  RepWitness witness_;
};

}  // namespace

RepWitness count_system_reps(const MultiplicativeSystem& system, std::uint64_t n, const CountOptions& opts) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
  if (n > static_cast<std::uint64_t>(INT64_MAX)) throw Error(Errc::invalid_argument, "n must be < 2^63");
  const Factorization f = factor(n, opts.limits);
  return TupleCounter(system, f, opts.tuple_cap).run(n);
}

RepWitness count_basis_reps(const SetDescription& set, unsigned h, std::uint64_t n, const CountOptions& opts) {
  return count_system_reps(MultiplicativeSystem::basis(set, h), n, opts);
}

std::uint64_t count_additive_reps(const SetDescription& set, unsigned h, std::uint64_t n) {
  if (h < 2) throw Error(Errc::invalid_argument, "h must be >= 2");
  std::vector<std::uint64_t> members;
  if (set.contains(0)) members.push_back(0);
  if (n >= 1) {
    auto positive = set.enumerate_up_to(n);
    members.insert(members.end(), positive.begin(), positive.end());
  }
  std::vector<std::uint64_t> ways(n + 1, 0), next(n + 1);
  ways[0] = 1;
  for (unsigned step = 0; step < h; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint64_t s = 0; s <= n; ++s) {
      if (!ways[s]) continue;
      for (auto a : members) {
        if (a > n - s) break;
        next[s + a] = checked_add(next[s + a], ways[s]);
      }
    }
    ways.swap(next);
  }
  return ways[n];
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> scan_counts(const MultiplicativeSystem& system, std::uint64_t lo,
                                                                 std::uint64_t hi, unsigned threads) {
  if (lo < 1 || lo > hi) throw Error(Errc::invalid_argument, "scan window must satisfy 1 <= lo <= hi");
  const std::uint64_t total = hi - lo + 1;
  const unsigned workers = detail::resolve_threads(threads, total);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out(total);
  std::vector<std::exception_ptr> errors(workers);
  const CountOptions opts{0, {}};
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) out[i] = {lo + i, count_system_reps(system, lo + i, opts).count};
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  // Report the error from the lowest chunk so failures are deterministic.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

WindowStats window_stats(const MultiplicativeSystem& system, std::uint64_t lo, std::uint64_t hi, unsigned threads) {
  if (lo < 2 || lo > hi) throw Error(Errc::invalid_argument, "window must satisfy 2 <= lo <= hi");
  const std::uint64_t total = hi - lo + 1;
  const unsigned workers = detail::resolve_threads(threads, total);
  std::vector<WindowStats> partial(workers);
  std::vector<char> filled(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  const CountOptions opts{0, {}};
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = lo + total * w / workers, end = lo + total * (w + 1) / workers;
      WindowStats s;
      for (std::uint64_t n = begin; n < end; ++n) {
        const std::uint64_t c = count_system_reps(system, n, opts).count;
        if (n == begin || c < s.min_count) s.min_count = c, s.argmin = n;
        if (n == begin || c > s.max_count) s.max_count = c, s.argmax = n;
      }
      partial[w] = s;
      filled[w] = end > begin;
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Chunks are in increasing n, so strict comparisons keep the smallest argmin/argmax.
  WindowStats merged{lo, hi, 0, 0, 0, 0};
  bool first = true;
  for (unsigned w = 0; w < workers; ++w) {
    if (!filled[w]) continue;
    const auto& s = partial[w];
    if (first || s.min_count < merged.min_count) merged.min_count = s.min_count, merged.argmin = s.argmin;
    if (first || s.max_count > merged.max_count) merged.max_count = s.max_count, merged.argmax = s.argmax;
    first = false;
  }
  return merged;
}

}  // namespace mulrep
