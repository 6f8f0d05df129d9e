#include <doctest.h>

#include <random>

#include "errc_check.hpp"
#include "mulrep/catalog.hpp"
#include "mulrep/config.hpp"
#include "mulrep/repcount.hpp"
#include "oracles.hpp"

using namespace mulrep;

namespace {

std::uint64_t product(const std::vector<std::uint64_t>& t) {
  std::uint64_t p = 1;
  for (auto v : t) p *= v;
  return p;
}

}  // namespace

TEST_SUITE("repcount") {
  TEST_CASE("small hand-computed counts") {
    const auto n2 = MultiplicativeSystem::basis(SetDescription::all_naturals(), 2);
    CHECK(count_system_reps(n2, 1).count == 1);
    CHECK(count_system_reps(n2, 12).count == 6);
    const auto n3 = MultiplicativeSystem::basis(SetDescription::all_naturals(), 3);
    CHECK(count_system_reps(n3, 12).count == 18);
    const auto p2 = MultiplicativeSystem::basis(SetDescription::primes(), 2);
    CHECK(count_system_reps(p2, 6).count == 2);
    CHECK(count_system_reps(p2, 9).count == 1);
    CHECK(count_system_reps(p2, 7).count == 0);
  }

  TEST_CASE("tuples are valid, lexicographic and capped") {
    const auto sys = parse_system("System(AllNaturals, PrimesWithOne, Squarefree)");
    const auto w = count_system_reps(sys, 360, {5, {}});
    CHECK(w.tuples.size() == 5);
    CHECK(w.truncated);
    const auto full = count_system_reps(sys, 360, {100000, {}});
    CHECK_FALSE(full.truncated);
    CHECK(full.tuples.size() == full.count);
    CHECK(std::is_sorted(full.tuples.begin(), full.tuples.end()));
    for (const auto& t : full.tuples) {
      CHECK(product(t) == 360);
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(sys.part(i).contains(t[i]));
    }
    for (std::size_t i = 0; i < w.tuples.size(); ++i) CHECK(w.tuples[i] == full.tuples[i]);
    CHECK(full.count == w.count);
  }

  TEST_CASE("random systems match the tuple oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
      const unsigned h = 2 + rng() % 2;
      std::vector<SetDescription> parts;
      std::vector<oracle::Pred> preds;
      for (unsigned i = 0; i < h; ++i) {
        std::set<std::uint64_t> vals{1};
        for (int j = 0; j < 12; ++j) vals.insert(rng() % 60 + 1);
        parts.push_back(SetDescription::singleton({vals.begin(), vals.end()}));
        preds.push_back(oracle::member_of(vals));
      }
      const MultiplicativeSystem sys(parts);
      const std::uint64_t n = rng() % 3000 + 1;
      CAPTURE(sys.to_string());
      CAPTURE(n);
      CHECK(count_system_reps(sys, n).count == oracle::count_tuples(preds, n));
    }
  }

  TEST_CASE("input range") {
    const auto n2 = MultiplicativeSystem::basis(SetDescription::all_naturals(), 2);
    CHECK_ERRC(count_system_reps(n2, 0), Errc::invalid_argument);
    CHECK_ERRC(count_system_reps(n2, 1ULL << 63), Errc::invalid_argument);
    CHECK(count_system_reps(n2, (1ULL << 62)).count == 63);
    CHECK(count_system_reps(n2, (1ULL << 61) - 1).count == 2);
  }

  TEST_CASE("additive counts") {
    const auto n0 = SetDescription::set_union({SetDescription::all_naturals(), SetDescription::singleton({0})});
    CHECK(count_additive_reps(n0, 2, 10) == 11);
    CHECK(count_additive_reps(SetDescription::all_naturals(), 2, 10) == 9);
    const auto even = SetDescription::residue(2, 0);
    CHECK(count_additive_reps(even, 2, 10) == 4);
    CHECK(count_additive_reps(even, 2, 9) == 0);
    CHECK(count_additive_reps(n0, 3, 4) == 15);
  }

  TEST_CASE("window statistics are independent of the thread count") {
    const auto sys = parse_system("one-t:h=2,t=5");
    const auto one = window_stats(sys, 2, 5000, 1);
    for (unsigned t : {2u, 3u, 8u}) CHECK(window_stats(sys, 2, 5000, t) == one);
    CHECK(one.min_count == 1);
    CHECK(one.argmin == 3);
    CHECK(one.max_count == 5);
    CHECK(one.argmax == 16);
    CHECK_ERRC(window_stats(sys, 1, 10), Errc::invalid_argument);
    CHECK_ERRC(window_stats(sys, 10, 9), Errc::invalid_argument);
  }

  TEST_CASE("scan counts") {
    const auto sys = parse_system("one-inf:h=2");
    const auto rows = scan_counts(sys, 1, 64, 4);
    REQUIRE(rows.size() == 64);
    for (auto [n, g] : rows) CHECK(g == oracle::v2(n) + 1);
  }
}
