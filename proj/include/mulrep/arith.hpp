#ifndef MULREP_ARITH_HPP
#define MULREP_ARITH_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mulrep {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing; empty for 1.
using Factorization = std::vector<PrimePower>;

/// Bound on trial division. The default reaches sqrt(2^63), so every n < 2^63
/// factors completely; smaller values make large inputs fail fast with
/// Errc::factorization_limit.
struct FactorLimits {
  std::uint64_t max_trial_divisor = 3037000499ULL;
};

/// Largest value covered by the cached sieve.
inline constexpr std::uint64_t kSieveLimit = 1ULL << 22;

/// Prime counting above this bound is refused (memory grows as sqrt(p)).
inline constexpr std::uint64_t kPrimeIndexLimit = 1ULL << 40;

/// Primes up to kSieveLimit, ascending. Built once, shared by all threads.
std::span<const std::uint64_t> small_primes();

Factorization factor(std::uint64_t n, const FactorLimits& limits = {});

std::uint64_t value_of(const Factorization& f);

bool is_prime(std::uint64_t n, const FactorLimits& limits = {});

bool is_squarefree(std::uint64_t n, const FactorLimits& limits = {});

/// Smallest prime strictly greater than p.
std::uint64_t next_prime(std::uint64_t p);

/// 1-based index of a prime: prime_index(2) == 1, prime_index(3) == 2.
/// Throws Errc::invalid_argument if p is not prime.
std::uint64_t prime_index(std::uint64_t p);

/// Number of primes <= x.
std::uint64_t prime_pi(std::uint64_t x);

/// The k-th prime, 1-based.
std::uint64_t nth_prime(std::uint64_t k);

/// Product of the first k primes; throws Errc::overflow past 64 bits.
std::uint64_t primorial(unsigned k);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// All divisors in ascending order.
std::vector<std::uint64_t> divisors(const Factorization& f);

/// 2-adic valuation; n must be nonzero.
unsigned two_adic_valuation(std::uint64_t n);

}  // namespace mulrep

#endif  // MULREP_ARITH_HPP
