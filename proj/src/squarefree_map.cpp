#include "mulrep/squarefree_map.hpp"

#include <algorithm>

#include "mulrep/arith.hpp"
#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"

namespace mulrep {

PrimeSet PrimeSet::of(std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
    throw Error(Errc::invalid_argument, "prime set has a repeated element");
  PrimeSet s;
  for (auto p : primes) {
    if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
    s.product_ = checked_mul(s.product_, p);
  }
  s.primes_ = std::move(primes);
  return s;
}

std::string PrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(primes_[i]);
  }
  return out + "}";
}

PrimeSet phi(std::uint64_t q) {
  if (q < 1) throw Error(Errc::invalid_argument, "phi is defined on positive integers");
  std::vector<std::uint64_t> primes;
  for (const auto& pp : factor(q)) {
    if (pp.exponent > 1) throw Error(Errc::not_squarefree, std::to_string(q) + " is not squarefree");
    primes.push_back(pp.prime);
  }
  return PrimeSet::of(std::move(primes));
}

std::uint64_t phi_inverse(const PrimeSet& s) {
  std::uint64_t v = 1;
  for (auto p : s.primes()) v = checked_mul(v, p);
  return v;
}

unsigned omega(std::uint64_t n) {
  if (n < 1) throw Error(Errc::invalid_argument, "omega is defined on positive integers");
  return static_cast<unsigned>(factor(n).size());
}

std::vector<std::vector<PrimeSet>> factorizations_as_partitions(std::uint64_t q, unsigned h, std::size_t cap) {
  if (h < 2) throw Error(Errc::invalid_argument, "h must be >= 2");
  const auto primes = phi(q).primes();
  const std::size_t k = primes.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i)
    if (!mul_fits(total, h, total) || total > cap)
      throw Error(Errc::resource_limit, "h^omega(q) exceeds the partition output cap");

  std::vector<std::vector<PrimeSet>> out;
  out.reserve(total);
  std::vector<unsigned> word(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::vector<std::uint64_t>> blocks(h);
    for (std::size_t i = 0; i < k; ++i) blocks[word[i]].push_back(primes[i]);
    std::vector<PrimeSet> tuple;
    tuple.reserve(h);
    for (auto& b : blocks) tuple.push_back(PrimeSet::of(std::move(b)));
    out.push_back(std::move(tuple));
    // Increment the word; the last prime's slot is the least significant digit.
    for (std::size_t i = k; i-- > 0;) {
      if (++word[i] < h) break;
      word[i] = 0;
    }
  }
  return out;
}

}  // namespace mulrep
