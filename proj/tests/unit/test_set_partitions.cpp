#include <doctest.h>

#include <random>

#include "errc_check.hpp"
#include "mulrep/catalog.hpp"
#include "mulrep/config.hpp"
#include "mulrep/set_partitions.hpp"
#include "oracles.hpp"

using namespace mulrep;

TEST_SUITE("set_partitions") {
  TEST_CASE("binomials and multinomials") {
    for (unsigned n = 0; n <= 20; ++n)
      for (unsigned k = 0; k <= n; ++k)
        CHECK(binomial(n, k) == oracle::factorial(n) / oracle::factorial(k) / oracle::factorial(n - k));
    CHECK(binomial(67, 33) == 14226520737620288370ULL);
    CHECK_ERRC(binomial(68, 34), Errc::overflow);
    const std::vector<unsigned> ks{2, 1, 1};
    CHECK(multinomial(4, ks) == 12);
    const std::vector<unsigned> bad{2, 1};
    CHECK_ERRC(multinomial(4, bad), Errc::invalid_argument);
  }

  TEST_CASE("cover counts match slot assignment") {
    std::mt19937_64 rng(5);
    const std::vector<std::uint64_t> elements{2, 3, 5, 7, 11};
    for (int trial = 0; trial < 40; ++trial) {
      const unsigned h = 2 + rng() % 2;
      std::vector<FamilyDescription> fams;
      std::vector<std::set<std::vector<std::uint64_t>>> raw(h);
      for (unsigned i = 0; i < h; ++i) {
        for (unsigned mask = 0; mask < 32; ++mask) {
          if (rng() % 3 != 0) continue;
          std::vector<std::uint64_t> s;
          for (unsigned b = 0; b < 5; ++b)
            if (mask >> b & 1) s.push_back(elements[b]);
          raw[i].insert(s);
        }
        fams.push_back(FamilyDescription::explicit_members({raw[i].begin(), raw[i].end()}));
      }
      const auto expected = oracle::count_slot_assignments(
          elements, h, [&](unsigned i, const std::vector<std::uint64_t>& s) { return raw[i].count(s) > 0; });
      CHECK(count_ordered_covers(elements, fams) == expected);
    }
  }

  TEST_CASE("cover limits") {
    std::vector<std::uint64_t> twenty(20), twentyone(21), repeated{1, 1};
    for (unsigned i = 0; i < 21; ++i) twentyone[i] = i + 1;
    std::copy(twentyone.begin(), twentyone.begin() + 20, twenty.begin());
    const std::vector<FamilyDescription> two{FamilyDescription::by_cardinality({10}),
                                             FamilyDescription::by_cardinality({10})};
    CHECK(count_ordered_covers(twenty, two) == 184756);
    CHECK_ERRC(count_ordered_covers(twentyone, two), Errc::resource_limit);
    CHECK_ERRC(count_ordered_covers(repeated, two), Errc::invalid_argument);
  }

  TEST_CASE("correspondence on catalog systems") {
    for (const auto& c : {build_fundamental(2), build_liminf_one_limsup_t(2, 2), build_liminf_s_limsup_inf(3, 3)})
      for (std::uint64_t q : {1ULL, 6ULL, 30ULL, 2310ULL, 9699690ULL}) {
        const auto r = verify_correspondence(c.system, q);
        CHECK(r.equal);
        CHECK(r.system_count == r.cover_count);
      }
    CHECK_ERRC(verify_correspondence(build_fundamental(2).system, 12), Errc::not_squarefree);
  }
}
