#include <doctest.h>

#include "errc_check.hpp"
#include "mulrep/catalog.hpp"
#include "mulrep/repcount.hpp"
#include "oracles.hpp"

using namespace mulrep;

TEST_SUITE("catalog") {
  TEST_CASE("closed forms match the tuple oracle") {
    struct Case {
      NamedConstruction c;
      std::vector<oracle::Pred> parts;
    };
    const std::vector<Case> cases{
        {build_fundamental(2), oracle::fundamental_parts(2)},
        {build_fundamental(3), oracle::fundamental_parts(3)},
        {build_liminf_one_limsup_t(2, 3), oracle::one_t_parts(2, 3)},
        {build_liminf_one_limsup_t(3, 1), oracle::one_t_parts(3, 1)},
        {build_liminf_one_limsup_inf(3), oracle::one_inf_parts(3)},
        {build_liminf_s_limsup_inf(3, 2), oracle::s_inf_parts(3, 2)},
        {build_liminf_s_limsup_inf(3, 3), oracle::s_inf_parts(3, 3)},
        {build_liminf_s_limsup_inf(4, 4), oracle::s_inf_parts(4, 4)},
    };
    for (const auto& [c, parts] : cases) {
      CAPTURE(c.name());
      for (std::uint64_t n = 1; n <= 400; ++n) {
        const auto expected = oracle::count_tuples(parts, n);
        CHECK(closed_form_count(c, n) == expected);
        CHECK(count_system_reps(c.system, n).count == expected);
      }
    }
  }

  TEST_CASE("names and claimed pairs") {
    CHECK(build_liminf_one_limsup_t(2, 3).name() == "LiminfOneLimsupT(h=2,t=3)");
    CHECK(build_liminf_one_limsup_t(2, 3).claimed == ClaimedPair{1, 3});
    CHECK(build_liminf_one_limsup_inf(2).claimed == ClaimedPair{1, std::nullopt});
    CHECK(build_liminf_s_limsup_inf(3, 2).claimed == ClaimedPair{2, std::nullopt});
    CHECK(build_fundamental(3).claimed == ClaimedPair{1, 1});
    CHECK_ERRC(build_liminf_s_limsup_inf(3, 1), Errc::invalid_argument);
    CHECK_ERRC(build_liminf_one_limsup_t(2, 0), Errc::invalid_argument);
    CHECK_ERRC(build_fundamental(1), Errc::invalid_argument);
  }

  TEST_CASE("verification reports") {
    const auto r = verify(build_liminf_one_limsup_t(2, 5), 2000, 2);
    CHECK(r.passed());
    CHECK(r.mismatches == 0);
    CHECK(r.rows.size() == 2000);
    CHECK(r.window.min_count == 1);
    CHECK(r.window.max_count == 5);
    CHECK(r.evidence.empty());

    const auto s = verify(build_liminf_s_limsup_inf(3, 3), 1000, 2);
    CHECK(s.passed());
    CHECK(s.evidence.size() == 15);
    CHECK(s.evidence_strictly_increasing);
    for (const auto& b : s.bounds) {
      CAPTURE(b.description);
      CHECK(b.checked > 0);
      CHECK(b.violations == 0);
    }

    const auto inf = verify(build_liminf_one_limsup_inf(2), 500, 1);
    CHECK(inf.passed());
    CHECK(inf.evidence.back().count == 63);
  }

  TEST_CASE("M(h) table") {
    const auto rows = mh_table(3, 4);
    REQUIRE(rows.size() == 4 + 1 + 2);
    CHECK(rows[0].construction == "fundamental:h=3");
    CHECK(rows[3].t == 4u);
    CHECK(rows[4].construction == "one-inf:h=3");
    CHECK(rows[6].construction == "s-inf:h=3,s=3");
    for (const auto& row : rows) CHECK(row.s <= 3);
  }
}
