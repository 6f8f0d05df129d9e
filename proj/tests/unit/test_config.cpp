#include <doctest.h>

#include "errc_check.hpp"
#include "mulrep/catalog.hpp"
#include "mulrep/config.hpp"

using namespace mulrep;

TEST_SUITE("config") {
  TEST_CASE("terms") {
    const auto t = parse_term("  F(1, key=G(x), 7) # trailing comment");
    CHECK(t.head == "F");
    REQUIRE(t.args.size() == 3);
    CHECK(t.args[0].is_number);
    CHECK(t.args[0].number == 1);
    CHECK(t.args[1].key == "key");
    CHECK(t.args[1].head == "G");
    CHECK(t.args[2].number == 7);
  }

  TEST_CASE("parse errors carry the parse code") {
    CHECK_ERRC(parse_set("Primes("), Errc::parse);
    CHECK_ERRC(parse_set("NoSuchSet"), Errc::parse);
    CHECK_ERRC(parse_set("PowersOf(lo=2)"), Errc::parse);
    CHECK_ERRC(parse_set("AllNaturals extra"), Errc::parse);
    CHECK_ERRC(parse_system("System(Primes)"), Errc::invalid_argument);
    CHECK_ERRC(parse_number_list("1,,x"), Errc::parse);
  }

  TEST_CASE("construction shorthand and long forms agree") {
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"fundamental:h=2", "Fundamental(h=2)"},
        {"one-t:h=2,t=3", "LiminfOneLimsupT(h=2,t=3)"},
        {"one-inf:h=3", "LiminfOneLimsupInf(h=3)"},
        {"s-inf:h=3,s=2", "LiminfSLimsupInf(h=3,s=2)"},
    };
    for (const auto& [shorthand, long_form] : pairs) {
      const auto a = parse_construction(shorthand);
      const auto b = parse_construction(long_form);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(a->shorthand() == shorthand);
      CHECK(b->shorthand() == shorthand);
      CHECK(a->system.to_string() == b->system.to_string());
      CHECK(parse_construction(a->name())->shorthand() == shorthand);
    }
    CHECK_FALSE(parse_construction("System(Primes, Primes)"));
    CHECK_ERRC(parse_construction("s-inf:h=3,s=4"), Errc::invalid_argument);
  }

  TEST_CASE("systems from basis and explicit parts") {
    const auto b = parse_system("Basis(Primes, h=3)");
    CHECK(b.order() == 3);
    const auto s = parse_system("System(AllNaturals,PowersOf(base=2,lo=0,hi=2))");
    CHECK(s.to_string() == "System(AllNaturals,PowersOf(base=2,lo=0,hi=2))");
  }

  TEST_CASE("families") {
    const auto f = parse_family("Explicit(Set(2, 3), Set())");
    CHECK(f.contains(std::vector<std::uint64_t>{2, 3}));
    CHECK(f.contains(std::vector<std::uint64_t>{}));
    CHECK_FALSE(f.contains(std::vector<std::uint64_t>{2}));
    const auto c = parse_family("ByCardinality(1, 2)");
    CHECK(c.contains(std::vector<std::uint64_t>{5, 7}));
    CHECK_FALSE(c.contains(std::vector<std::uint64_t>{}));
    const auto img = parse_family("ImageOfSet(PrimesWithOne, universe=Set(2, 3, 5))");
    CHECK(img.contains(std::vector<std::uint64_t>{}));
    CHECK(img.contains(std::vector<std::uint64_t>{5}));
    CHECK_FALSE(img.contains(std::vector<std::uint64_t>{7}));
    CHECK_FALSE(img.contains(std::vector<std::uint64_t>{2, 3}));
    CHECK(parse_family(img.to_string()).to_string() == img.to_string());
    CHECK(parse_number_list("2,1,1") == std::vector<std::uint64_t>{2, 1, 1});
  }
}
