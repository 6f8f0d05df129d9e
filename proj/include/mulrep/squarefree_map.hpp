#ifndef MULREP_SQUAREFREE_MAP_HPP
#define MULREP_SQUAREFREE_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mulrep {

/// Finite set of distinct primes whose product fits in 64 bits.
class PrimeSet {
 public:
  PrimeSet() = default;

  /// Sorts the input; throws invalid_argument on non-primes or repeats and
  /// overflow when the product leaves 64 bits.
  static PrimeSet of(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  std::uint64_t product() const { return product_; }

  std::string to_string() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.primes_ == b.primes_; }

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t product_ = 1;
};

/// Prime divisors of a squarefree q; throws not_squarefree otherwise.
PrimeSet phi(std::uint64_t q);

std::uint64_t phi_inverse(const PrimeSet& s);

/// Number of distinct prime divisors.
unsigned omega(std::uint64_t n);

inline constexpr std::size_t kDefaultPartitionCap = 1u << 20;

/// Every ordered h-tuple of pairwise disjoint prime sets whose union is
/// phi(q). Order: lexicographic in the slot word (slot of smallest prime
/// first).
std::vector<std::vector<PrimeSet>> factorizations_as_partitions(std::uint64_t q, unsigned h,
                                                                std::size_t cap = kDefaultPartitionCap);

}  // namespace mulrep

#endif  // MULREP_SQUAREFREE_MAP_HPP
