// Brute-force reference implementations used by the test suites. They share
// no code with the library and favour obviousness over speed.
#ifndef MULREP_TESTS_ORACLES_HPP
#define MULREP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <vector>

namespace oracle {

using Pred = std::function<bool(std::uint64_t)>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return n >= 1;
}

inline unsigned omega(std::uint64_t n) { return static_cast<unsigned>(prime_divisors(n).size()); }

// 1-based index of prime p, by counting; memoized.
inline std::uint64_t prime_index(std::uint64_t p) {
  static std::map<std::uint64_t, std::uint64_t> memo;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  std::uint64_t idx = 0;
  for (std::uint64_t q = 2; q <= p; ++q)
    if (is_prime(q)) ++idx;
  memo[p] = idx;
  return idx;
}

inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; out.size() < count; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

inline unsigned v2(std::uint64_t n) {
  unsigned e = 0;
  while (n % 2 == 0) n /= 2, ++e;
  return e;
}

// Ordered tuples of divisors of n with product n, part i tested by preds[i].
inline std::uint64_t count_tuples(const std::vector<Pred>& preds, std::uint64_t n) {
  const auto divs = divisors(n);
  std::uint64_t total = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t rest) {
    if (i + 1 == preds.size()) {
      if (preds[i](rest)) ++total;
      return;
    }
    for (auto d : divs)
      if (rest % d == 0 && preds[i](d)) rec(i + 1, rest / d);
  };
  rec(0, n);
  return total;
}

inline Pred member_of(std::set<std::uint64_t> values) {
  return [values = std::move(values)](std::uint64_t n) { return values.count(n) > 0; };
}

// Part predicates of the catalog constructions, written from their definitions.
inline std::vector<Pred> fundamental_parts(unsigned h) {
  std::vector<Pred> parts;
  for (unsigned i = 0; i < h; ++i)
    parts.push_back([h, i](std::uint64_t b) {
      for (auto p : prime_divisors(b))
        if (prime_index(p) % h != (i + 1) % h) return false;
      return true;
    });
  return parts;
}

inline bool is_power_of_two(std::uint64_t b) { return b != 0 && (b & (b - 1)) == 0; }

inline std::vector<Pred> one_t_parts(unsigned h, std::uint64_t t) {
  std::vector<Pred> parts{[](std::uint64_t) { return true; },
                          [t](std::uint64_t b) { return is_power_of_two(b) && v2(b) + 1 <= t; }};
  while (parts.size() < h) parts.push_back([](std::uint64_t b) { return b == 1; });
  return parts;
}

inline std::vector<Pred> one_inf_parts(unsigned h) {
  std::vector<Pred> parts{[](std::uint64_t) { return true; }, is_power_of_two};
  while (parts.size() < h) parts.push_back([](std::uint64_t b) { return b == 1; });
  return parts;
}

inline std::vector<Pred> s_inf_parts(unsigned h, unsigned s) {
  std::vector<Pred> parts{[](std::uint64_t) { return true; }};
  for (unsigned i = 1; i < s; ++i) parts.push_back([](std::uint64_t b) { return b == 1 || is_prime(b); });
  while (parts.size() < h) parts.push_back([](std::uint64_t b) { return b == 1; });
  return parts;
}

// Assigns every element of S to one of h slots and counts assignments whose
// slot contents are accepted by the matching predicate.
inline std::uint64_t count_slot_assignments(const std::vector<std::uint64_t>& elements, unsigned h,
                                            const std::function<bool(unsigned, const std::vector<std::uint64_t>&)>& ok) {
  std::uint64_t total = 1, hits = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) total *= h;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::uint64_t>> slots(h);
    std::uint64_t c = code;
    for (auto e : elements) {
      slots[c % h].push_back(e);
      c /= h;
    }
    bool good = true;
    for (unsigned i = 0; i < h && good; ++i) {
      std::sort(slots[i].begin(), slots[i].end());
      good = ok(i, slots[i]);
    }
    if (good) ++hits;
  }
  return hits;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// All size-m subsets of {0..n-1} as index lists, lexicographic.
inline std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned)> rec = [&](unsigned start) {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (unsigned i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Homogeneity by looking up every k-subset through a color callback.
inline bool homogeneous(const std::vector<std::uint64_t>& subset, unsigned k,
                        const std::function<std::uint32_t(const std::vector<std::uint64_t>&)>& color) {
  std::set<std::uint32_t> seen;
  for (const auto& idx : combinations(static_cast<unsigned>(subset.size()), k)) {
    std::vector<std::uint64_t> s;
    for (auto i : idx) s.push_back(subset[i]);
    seen.insert(color(s));
  }
  return seen.size() <= 1;
}

}  // namespace oracle

#endif
