#include "mulrep/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"

namespace mulrep {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse: return "parse";
    case Errc::overflow: return "overflow";
    case Errc::resource_limit: return "resource_limit";
    case Errc::factorization_limit: return "factorization_limit";
    case Errc::not_squarefree: return "not_squarefree";
    case Errc::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Lucy's prime counting, O(x^{3/4}) time and O(sqrt x) memory.
std::uint64_t lucy_prime_pi(std::uint64_t x) {
  const std::uint64_t r = isqrt(x);
  std::vector<std::uint64_t> small(r + 1), large(r + 1);
  for (std::uint64_t v = 1; v <= r; ++v) {
    small[v] = v - 1;
    large[v] = x / v - 1;
  }
  for (std::uint64_t p = 2; p <= r; ++p) {
    if (small[p] == small[p - 1]) continue;
    const std::uint64_t below = small[p - 1];
    const std::uint64_t p2 = p * p;
    const std::uint64_t lim = std::min(r, x / p2);
    for (std::uint64_t i = 1; i <= lim; ++i) {
      const std::uint64_t d = i * p;
      const std::uint64_t sub = d <= r ? large[d] : small[x / d];
      large[i] -= sub - below;
    }
    for (std::uint64_t v = r; v >= p2; --v) small[v] -= small[v / p] - below;
  }
  return large[1];
}

}  // namespace

std::span<const std::uint64_t> small_primes() {
  static const std::vector<std::uint64_t> table = sieve(kSieveLimit);
  return table;
}

Factorization factor(std::uint64_t n, const FactorLimits& limits) {
  if (n == 0) throw Error(Errc::invalid_argument, "cannot factor 0");
  Factorization out;
  std::uint64_t m = n;
  auto strip = [&](std::uint64_t d) {
    if (m % d != 0) return;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.push_back({d, e});
  };
  for (std::uint64_t p : small_primes()) {
    if (p * p > m) break;
    if (p > limits.max_trial_divisor)
      throw Error(Errc::factorization_limit, "trial division budget exceeded for " + std::to_string(n));
    strip(p);
  }
  // Beyond the sieve: 6k +/- 1 wheel.
  std::uint64_t d = kSieveLimit + 1;
  while (d % 6 != 1) ++d;
  while (m > 1 && d <= m / d) {
    if (d > limits.max_trial_divisor)
      throw Error(Errc::factorization_limit, "trial division budget exceeded for " + std::to_string(n));
    strip(d);
    strip(d + 4);
    d += 6;
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::uint64_t value_of(const Factorization& f) {
  std::uint64_t v = 1;
  for (const auto& pp : f)
    for (unsigned i = 0; i < pp.exponent; ++i) v = checked_mul(v, pp.prime);
  return v;
}

bool is_prime(std::uint64_t n, const FactorLimits& limits) {
  if (n < 2) return false;
  if (n <= kSieveLimit) return std::binary_search(small_primes().begin(), small_primes().end(), n);
  const auto f = factor(n, limits);
  return f.size() == 1 && f[0].exponent == 1;
}

bool is_squarefree(std::uint64_t n, const FactorLimits& limits) {
  if (n == 0) return false;
  for (const auto& pp : factor(n, limits))
    if (pp.exponent > 1) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t p) {
  const auto primes = small_primes();
  auto it = std::upper_bound(primes.begin(), primes.end(), p);
  if (it != primes.end()) return *it;
  std::uint64_t c = p + 1;
  while (!is_prime(c)) c = checked_add(c, 1);
  return c;
}

std::uint64_t prime_pi(std::uint64_t x) {
  if (x <= kSieveLimit) {
    const auto primes = small_primes();
    return static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
  }
  if (x > kPrimeIndexLimit)
    throw Error(Errc::resource_limit, "prime counting above 2^40 is not supported: " + std::to_string(x));
  return lucy_prime_pi(x);
}

std::uint64_t prime_index(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
  return prime_pi(p);
}

std::uint64_t nth_prime(std::uint64_t k) {
  if (k == 0) throw Error(Errc::invalid_argument, "prime indices start at 1");
  const auto primes = small_primes();
  if (k <= primes.size()) return primes[k - 1];
  std::uint64_t p = primes.back();
  for (std::uint64_t i = primes.size(); i < k; ++i) p = next_prime(p);
  return p;
}

std::uint64_t primorial(unsigned k) {
  std::uint64_t v = 1;
  for (unsigned i = 1; i <= k; ++i) v = checked_mul(v, nth_prime(i));
  return v;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  if (n <= kSieveLimit) {
    const auto primes = small_primes();
    return {primes.begin(), std::upper_bound(primes.begin(), primes.end(), n)};
  }
  std::vector<std::uint64_t> out(small_primes().begin(), small_primes().end());
  for (std::uint64_t c = kSieveLimit + 1; c <= n; ++c)
    if (is_prime(c)) out.push_back(c);
  return out;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : f) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "valuation of 0");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

}  // namespace mulrep
