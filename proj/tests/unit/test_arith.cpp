#include <doctest.h>

#include <limits>
#include <random>

#include "mulrep/arith.hpp"
#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"
#include "errc_check.hpp"
#include "oracles.hpp"

using namespace mulrep;

TEST_SUITE("arith") {
  TEST_CASE("factor agrees with trial division") {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      const auto f = factor(n);
      CHECK(value_of(f) == n);
      std::vector<std::uint64_t> ps;
      for (auto [p, e] : f) {
        CHECK(e >= 1);
        ps.push_back(p);
      }
      CHECK(ps == oracle::prime_divisors(n));
    }
  }

  TEST_CASE("factor handles large semiprimes and prime powers") {
    const std::uint64_t p = 4294967291ULL, q = 2147483647ULL;  // 2^32-5, 2^31-1
    const auto f = factor(p * q);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == PrimePower{q, 1});
    CHECK(f[1] == PrimePower{p, 1});
    CHECK(factor(1ULL << 62) == Factorization{{2, 62}});
    CHECK(factor(1).empty());
  }

  TEST_CASE("factor reports the trial division limit") {
    FactorLimits tight{1000};
    CHECK_ERRC(factor(1000003ULL * 1000033ULL, tight), Errc::factorization_limit);
    CHECK(factor(991ULL * 997ULL, tight).size() == 2);
    CHECK_ERRC(factor(0), Errc::invalid_argument);
  }

  TEST_CASE("primes, indices and counts") {
    const FactorLimits tight{1 << 20};
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
    CHECK(is_prime(4294967291ULL));
    CHECK_ERRC(is_prime(18446744073709551557ULL, tight), Errc::factorization_limit);
    CHECK(prime_index(2) == 1);
    CHECK(prime_index(3) == 2);
    CHECK(prime_index(7919) == 1000);
    CHECK(nth_prime(1000) == 7919);
    CHECK(prime_pi(100) == 25);
    CHECK(prime_pi(10'000'000) == 664579);
    CHECK(prime_pi(1'000'000'000) == 50847534);
    CHECK_ERRC(prime_index(9), Errc::invalid_argument);
    CHECK(next_prime(13) == 17);
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  }

  TEST_CASE("primorials and overflow") {
    CHECK(primorial(0) == 1);
    CHECK(primorial(4) == 210);
    CHECK(primorial(15) == 614889782588491410ULL);
    CHECK_ERRC(primorial(16), Errc::overflow);
  }

  TEST_CASE("divisors and squarefree") {
    for (std::uint64_t n = 1; n <= 500; ++n) {
      CHECK(divisors(factor(n)) == oracle::divisors(n));
      CHECK(is_squarefree(n) == oracle::is_squarefree(n));
    }
    CHECK(two_adic_valuation(96) == 5);
  }

  TEST_CASE("checked arithmetic") {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    CHECK(checked_mul(1ULL << 31, 1ULL << 32) == 1ULL << 63);
    CHECK_ERRC(checked_mul(1ULL << 32, 1ULL << 32), Errc::overflow);
    CHECK_ERRC(checked_add(max, 1), Errc::overflow);
    std::uint64_t out = 0;
    CHECK_FALSE(mul_fits(max, 2, out));
    CHECK(mul_fits(3, 5, out));
    CHECK(out == 15);
  }
}
