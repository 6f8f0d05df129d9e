#include <doctest.h>

#include <set>

#include "errc_check.hpp"
#include "mulrep/catalog.hpp"
#include "mulrep/squarefree_map.hpp"
#include "mulrep/witness_search.hpp"
#include "oracles.hpp"

using namespace mulrep;

namespace {

std::vector<std::uint64_t> drain(Strategy s, std::uint64_t max_n) {
  CandidateStream stream(s, max_n);
  std::vector<std::uint64_t> out;
  while (auto v = stream.next()) out.push_back(*v);
  return out;
}

}  // namespace

TEST_SUITE("witness_search") {
  TEST_CASE("strategy names") {
    for (auto s : {Strategy::squarefree_rich, Strategy::exhaustive_scan, Strategy::hybrid})
      CHECK(parse_strategy(strategy_name(s)) == s);
    CHECK(parse_strategy("SquarefreeRich") == Strategy::squarefree_rich);
    CHECK_FALSE(parse_strategy("bogus"));
  }

  TEST_CASE("scan stream") {
    const auto v = drain(Strategy::exhaustive_scan, 50);
    REQUIRE(v.size() == 49);
    CHECK(v.front() == 2);
    CHECK(v.back() == 50);
  }

  TEST_CASE("rich stream lists squarefree numbers by decreasing omega") {
    const std::uint64_t max_n = 3000;
    const auto v = drain(Strategy::squarefree_rich, max_n);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= max_n; ++n)
      if (oracle::is_squarefree(n)) expected.push_back(n);
    std::stable_sort(expected.begin(), expected.end(),
                     [](auto a, auto b) { return oracle::omega(a) > oracle::omega(b); });
    CHECK(v == expected);
    CHECK(v.front() == 2310);
  }

  TEST_CASE("hybrid stream covers the range without repeats") {
    const auto v = drain(Strategy::hybrid, 2000);
    CHECK(v.size() == 1999);
    CHECK(std::set<std::uint64_t>(v.begin(), v.end()).size() == v.size());
    CHECK(v[0] == 210);
    CHECK(v[1] == 2);
  }

  TEST_CASE("witness search") {
    const auto n2 = MultiplicativeSystem::basis(SetDescription::all_naturals(), 2);
    const SearchBudget scan{1'000'000, 100'000, Strategy::exhaustive_scan};
    const auto o = find_witness(n2, 20, scan, 2);
    REQUIRE(o.witness);
    CHECK(o.witness->n == 240);
    CHECK(o.witness->count == 20);
    CHECK(oracle::divisors(240).size() == 20);
    CHECK(o.candidates_tried == 239);

    const SearchBudget tiny{50, 100'000, Strategy::exhaustive_scan};
    const auto none = find_witness(build_fundamental(2).system, 2, tiny, 1);
    CHECK_FALSE(none.witness);
    CHECK(none.candidates_tried == 50);
    CHECK(none.max_count_seen == 1);
  }
}
