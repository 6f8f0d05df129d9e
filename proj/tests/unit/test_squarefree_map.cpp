#include <doctest.h>

#include "errc_check.hpp"
#include "mulrep/squarefree_map.hpp"
#include "oracles.hpp"

using namespace mulrep;

TEST_SUITE("squarefree_map") {
  TEST_CASE("phi is a bijection on squarefree integers") {
    for (std::uint64_t q = 1; q <= 5000; ++q) {
      if (!oracle::is_squarefree(q)) {
        CHECK_ERRC(phi(q), Errc::not_squarefree);
        continue;
      }
      const auto s = phi(q);
      CHECK(s.primes() == oracle::prime_divisors(q));
      CHECK(phi_inverse(s) == q);
      CHECK(omega(q) == oracle::omega(q));
    }
    CHECK(phi(1).empty());
    CHECK(phi(30).to_string() == "{2,3,5}");
  }

  TEST_CASE("prime set validation") {
    CHECK(PrimeSet::of({5, 2, 3}).primes() == std::vector<std::uint64_t>{2, 3, 5});
    CHECK_ERRC(PrimeSet::of({2, 2}), Errc::invalid_argument);
    CHECK_ERRC(PrimeSet::of({4}), Errc::invalid_argument);
    CHECK_ERRC(PrimeSet::of({4294967291ULL, 4294967279ULL, 3}), Errc::overflow);
  }

  TEST_CASE("ordered partitions of the prime set") {
    for (unsigned h : {2u, 3u}) {
      for (std::uint64_t q : {1ULL, 2ULL, 30ULL, 210ULL, 2310ULL}) {
        const auto tuples = factorizations_as_partitions(q, h);
        std::uint64_t expected = 1;
        for (unsigned i = 0; i < omega(q); ++i) expected *= h;
        CHECK(tuples.size() == expected);
        for (const auto& t : tuples) {
          REQUIRE(t.size() == h);
          std::uint64_t prod = 1;
          for (const auto& s : t) prod *= s.product();
          CHECK(prod == q);
        }
      }
    }
    const auto t = factorizations_as_partitions(6, 2);
    CHECK(t.front()[0].to_string() == "{2,3}");
    CHECK(t.back()[1].to_string() == "{2,3}");
    CHECK_ERRC(factorizations_as_partitions(30, 2, 7), Errc::resource_limit);
    CHECK_ERRC(factorizations_as_partitions(12, 2), Errc::not_squarefree);
  }
}
