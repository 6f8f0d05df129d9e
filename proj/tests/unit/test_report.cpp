#include <doctest.h>

#include <json.hpp>

#include "mulrep/catalog.hpp"
#include "mulrep/config.hpp"
#include "mulrep/repcount.hpp"
#include "mulrep/report.hpp"

using namespace mulrep;

TEST_SUITE("report") {
  TEST_CASE("formats") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("text") == Format::text);
    CHECK_FALSE(parse_format("xml"));
  }

  TEST_CASE("window json keeps its key order") {
    const WindowStats s{2, 64, 1, 3, 3, 4};
    const auto j = nlohmann::ordered_json::parse(render_window(s, Format::json));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys.size() >= 6);
    CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 6) ==
          std::vector<std::string>{"lo", "hi", "min_count", "argmin", "max_count", "argmax"});
    CHECK(j["max_count"] == 3);
  }

  TEST_CASE("csv headers") {
    const auto sys = parse_system("one-t:h=2,t=2");
    const auto scan = render_scan(scan_counts(sys, 1, 4, 1), Format::csv);
    CHECK(scan == "n,count\n1,1\n2,2\n3,1\n4,2\n");
    const auto v = render_verify(verify(build_liminf_one_limsup_t(2, 2), 10, 1), Format::csv);
    CHECK(v.rfind("n,closed_form,brute_force,match\n", 0) == 0);
  }

  TEST_CASE("witness json") {
    const auto w = count_system_reps(parse_system("Basis(AllNaturals, h=2)"), 6);
    const auto j = nlohmann::json::parse(render_witness(w, Format::json));
    CHECK(j["n"] == 6);
    CHECK(j["count"] == 4);
    CHECK(j["tuples"].size() == 4);
  }

  TEST_CASE("subset rendering") {
    CHECK(render_subset(std::nullopt, Format::text) == "none\n");
    CHECK(render_subset(std::vector<std::uint64_t>{1, 2, 3}, Format::text).find("1") != std::string::npos);
  }
}
