#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mulrep/mulrep.h>

#include <string>
#include <thread>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  mulrep_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(mulrep_version()) == "0.1.0");
  CHECK(std::string(mulrep_status_string(MULREP_ERR_PARSE)) == "parse error");
  CHECK(std::string(mulrep_last_error()).empty());
}

TEST_CASE("sets") {
  mulrep_set* set = nullptr;
  REQUIRE(mulrep_set_parse("PowersOf(base=2, lo=0, hi=inf)", &set) == MULREP_OK);
  int in = 0;
  CHECK(mulrep_set_contains(set, 64, &in) == MULREP_OK);
  CHECK(in == 1);
  CHECK(mulrep_set_contains(set, 48, &in) == MULREP_OK);
  CHECK(in == 0);
  std::size_t count = 0;
  std::vector<std::uint64_t> buf(4);
  CHECK(mulrep_set_enumerate(set, 100, buf.data(), buf.size(), &count) == MULREP_OK);
  CHECK(count == 7);
  CHECK(buf == std::vector<std::uint64_t>{1, 2, 4, 8});
  char* text = nullptr;
  CHECK(mulrep_set_describe(set, &text) == MULREP_OK);
  CHECK(take(text) == "PowersOf(base=2,lo=0,hi=inf)");
  mulrep_set_free(set);
}

TEST_CASE("errors map to status codes with messages") {
  mulrep_set* set = nullptr;
  CHECK(mulrep_set_parse("Primes(", &set) == MULREP_ERR_PARSE);
  CHECK(set == nullptr);
  CHECK_FALSE(std::string(mulrep_last_error()).empty());
  CHECK(mulrep_set_parse(nullptr, &set) == MULREP_ERR_INVALID_ARGUMENT);
  std::uint64_t out = 0;
  unsigned ks[] = {40, 40};
  CHECK(mulrep_multinomial(80, ks, 2, &out) == MULREP_ERR_OVERFLOW);
  std::size_t n = 0;
  CHECK(mulrep_phi(12, nullptr, 0, &n) == MULREP_ERR_NOT_SQUAREFREE);
  std::uint64_t primes[] = {2, 3};
  CHECK(mulrep_phi_inverse(primes, 2, &out) == MULREP_OK);
  CHECK(out == 6);
  CHECK(std::string(mulrep_last_error()).empty());
}

TEST_CASE("last error is per thread") {
  mulrep_set* set = nullptr;
  CHECK(mulrep_set_parse("Primes(", &set) == MULREP_ERR_PARSE);
  std::string other = "unset";
  std::thread([&] { other = mulrep_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(mulrep_last_error()).empty());
}

TEST_CASE("counting through systems and witnesses") {
  mulrep_system* sys = nullptr;
  REQUIRE(mulrep_system_parse("Basis(AllNaturals, h=3)", &sys) == MULREP_OK);
  CHECK(mulrep_system_order(sys) == 3);
  mulrep_witness* w = nullptr;
  REQUIRE(mulrep_count(sys, 12, 2, &w) == MULREP_OK);
  CHECK(mulrep_witness_n(w) == 12);
  CHECK(mulrep_witness_count(w) == 18);
  CHECK(mulrep_witness_tuple_count(w) == 2);
  CHECK(mulrep_witness_truncated(w) == 1);
  std::uint64_t t[3] = {};
  CHECK(mulrep_witness_tuple(w, 0, t, 3) == MULREP_OK);
  CHECK(t[0] * t[1] * t[2] == 12);
  CHECK(mulrep_witness_tuple(w, 5, t, 3) == MULREP_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  CHECK(mulrep_witness_render(w, MULREP_FORMAT_JSON, &json) == MULREP_OK);
  CHECK(take(json).find("\"count\"") != std::string::npos);
  mulrep_witness_free(w);

  mulrep_window_stats stats{};
  CHECK(mulrep_window(sys, 2, 100, 0, &stats) == MULREP_OK);
  CHECK(stats.min_count == 3);
  CHECK(stats.max_count == 63);
  CHECK(stats.argmax == 96);
  CHECK(mulrep_window(sys, 0, 100, 0, &stats) == MULREP_ERR_INVALID_ARGUMENT);
  mulrep_system_free(sys);
}

TEST_CASE("systems from parts") {
  mulrep_set* a = nullptr;
  mulrep_set* b = nullptr;
  REQUIRE(mulrep_set_parse("AllNaturals", &a) == MULREP_OK);
  REQUIRE(mulrep_set_parse("Singleton(1, 2)", &b) == MULREP_OK);
  const mulrep_set* parts[] = {a, b};
  mulrep_system* sys = nullptr;
  REQUIRE(mulrep_system_from_parts(parts, 2, &sys) == MULREP_OK);
  mulrep_set_free(a);
  mulrep_set_free(b);
  mulrep_witness* w = nullptr;
  REQUIRE(mulrep_count(sys, 8, 0, &w) == MULREP_OK);
  CHECK(mulrep_witness_count(w) == 2);
  mulrep_witness_free(w);
  CHECK(mulrep_system_from_parts(parts, 1, &sys) == MULREP_ERR_INVALID_ARGUMENT);
  mulrep_system_free(sys);
}

TEST_CASE("catalog") {
  mulrep_construction* c = nullptr;
  REQUIRE(mulrep_construction_parse("one-t:h=2,t=3", &c) == MULREP_OK);
  std::uint64_t s = 0, t = 0, g = 0;
  int inf = -1;
  CHECK(mulrep_construction_claimed(c, &s, &t, &inf) == MULREP_OK);
  CHECK(s == 1);
  CHECK(t == 3);
  CHECK(inf == 0);
  CHECK(mulrep_construction_closed_form(c, 96, &g) == MULREP_OK);
  CHECK(g == 3);
  int passed = 0;
  char* report = nullptr;
  CHECK(mulrep_catalog_verify(c, 500, 1, MULREP_FORMAT_TEXT, &passed, &report) == MULREP_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("result: PASS") != std::string::npos);
  mulrep_construction_free(c);
  CHECK(mulrep_construction_parse("System(Primes, Primes)", &c) == MULREP_ERR_PARSE);
  char* table = nullptr;
  CHECK(mulrep_mh_table(2, 2, MULREP_FORMAT_CSV, &table) == MULREP_OK);
  CHECK(take(table).find("2,inf,\"s-inf:h=2,s=2\"") != std::string::npos);
}

TEST_CASE("partitions and correspondence") {
  mulrep_family* f = nullptr;
  REQUIRE(mulrep_family_parse("ByCardinality(1)", &f) == MULREP_OK);
  const mulrep_family* fams[] = {f, f, f};
  std::uint64_t elements[] = {1, 2, 3};
  std::uint64_t covers = 0;
  CHECK(mulrep_count_covers(elements, 3, fams, 3, &covers) == MULREP_OK);
  CHECK(covers == 6);
  mulrep_family_free(f);

  mulrep_system* sys = nullptr;
  REQUIRE(mulrep_system_parse("s-inf:h=3,s=3", &sys) == MULREP_OK);
  mulrep_correspondence r{};
  CHECK(mulrep_correspondence_check(sys, 30, nullptr, 0, &r) == MULREP_OK);
  CHECK(r.equal == 1);
  CHECK(r.system_count == r.cover_count);
  std::uint64_t universe[] = {2, 3, 5, 7};
  CHECK(mulrep_correspondence_check(sys, 30, universe, 4, &r) == MULREP_OK);
  CHECK(r.equal == 1);
  mulrep_system_free(sys);

  char* out = nullptr;
  std::size_t count = 0;
  CHECK(mulrep_partitions_render(30, 3, 0, MULREP_FORMAT_CSV, &out, &count) == MULREP_OK);
  CHECK(count == 27);
  mulrep_string_free(out);
  CHECK(mulrep_partitions_render(30, 3, 10, MULREP_FORMAT_CSV, &out, &count) == MULREP_ERR_RESOURCE_LIMIT);
}

TEST_CASE("witness search") {
  mulrep_system* sys = nullptr;
  REQUIRE(mulrep_system_parse("Basis(AllNaturals, h=2)", &sys) == MULREP_OK);
  const mulrep_search_budget budget{100000, 10000, MULREP_STRATEGY_EXHAUSTIVE_SCAN};
  mulrep_search_result r{};
  CHECK(mulrep_find_witness(sys, 12, &budget, 2, &r, MULREP_FORMAT_TEXT, nullptr) == MULREP_OK);
  CHECK(r.found == 1);
  CHECK(r.n == 60);
  CHECK(r.count == 12);
  mulrep_system_free(sys);
}

TEST_CASE("ramsey") {
  const char* pentagon =
      "ground: 1 2 3 4 5\nk: 2\n"
      "1 2 : 0\n2 3 : 0\n3 4 : 0\n4 5 : 0\n1 5 : 0\n"
      "1 3 : 1\n1 4 : 1\n2 4 : 1\n2 5 : 1\n3 5 : 1\n";
  mulrep_coloring* c = nullptr;
  REQUIRE(mulrep_coloring_parse(pentagon, &c) == MULREP_OK);
  CHECK(mulrep_coloring_ground_size(c) == 5);
  CHECK(mulrep_coloring_k(c) == 2);
  std::uint64_t subset[3] = {};
  int found = -1;
  CHECK(mulrep_find_homogeneous(c, 3, 0, subset, &found) == MULREP_OK);
  CHECK(found == 0);
  char* text = nullptr;
  CHECK(mulrep_homogeneous_render(c, 3, 0, MULREP_FORMAT_TEXT, &found, &text) == MULREP_OK);
  CHECK(take(text) == "none\n");
  std::uint64_t pair[] = {1, 2};
  int homogeneous = 0;
  CHECK(mulrep_is_homogeneous(c, pair, 2, &homogeneous) == MULREP_OK);
  CHECK(homogeneous == 1);

  mulrep_coloring* r = nullptr;
  REQUIRE(mulrep_coloring_random(5, 2, 2, 77, &r) == MULREP_OK);
  const mulrep_coloring* factors[] = {c, r};
  mulrep_coloring* p = nullptr;
  REQUIRE(mulrep_product_coloring(factors, 2, &p) == MULREP_OK);
  CHECK(mulrep_find_homogeneous(p, 3, 0, subset, &found) == MULREP_OK);
  CHECK(found == 0);
  mulrep_coloring_free(p);
  mulrep_coloring_free(r);

  std::uint64_t hits = 0, failures = 0;
  CHECK(mulrep_ramsey_random_trials(6, 2, 2, 3, 200, 9, 0, &hits, &failures) == MULREP_OK);
  CHECK(hits == 200);
  CHECK(failures == 0);
  CHECK(mulrep_coloring_parse("ground: 1 2\nk: 2\n", &r) == MULREP_ERR_PARSE);
  mulrep_coloring_free(c);
}
