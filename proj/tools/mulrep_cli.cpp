#include <mulrep/mulrep.h>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

void check(mulrep_status s, const std::string& context) {
  if (s == MULREP_OK) return;
  std::string msg = context + ": " + mulrep_status_string(s);
  if (*mulrep_last_error()) msg += ": " + std::string(mulrep_last_error());
  throw CliError{msg};
}

struct StringDeleter {
  void operator()(char* s) const { mulrep_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using SetPtr = std::unique_ptr<mulrep_set, HandleDeleter<mulrep_set, mulrep_set_free>>;
using SystemPtr = std::unique_ptr<mulrep_system, HandleDeleter<mulrep_system, mulrep_system_free>>;
using WitnessPtr = std::unique_ptr<mulrep_witness, HandleDeleter<mulrep_witness, mulrep_witness_free>>;
using FamilyPtr = std::unique_ptr<mulrep_family, HandleDeleter<mulrep_family, mulrep_family_free>>;
using ConstructionPtr =
    std::unique_ptr<mulrep_construction, HandleDeleter<mulrep_construction, mulrep_construction_free>>;
using ColoringPtr = std::unique_ptr<mulrep_coloring, HandleDeleter<mulrep_coloring, mulrep_coloring_free>>;

void emit(char* raw) {
  OwnedString s(raw);
  std::fputs(s.get(), stdout);
}

// A config value is either inline text or the path of a file holding it.
std::string load_text(const std::string& value) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(value, ec)) return value;
  std::ifstream in(value);
  if (!in) throw CliError{"cannot read " + value};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

SystemPtr parse_system(const std::string& value) {
  mulrep_system* out = nullptr;
  check(mulrep_system_parse(load_text(value).c_str(), &out), "system");
  return SystemPtr(out);
}

SetPtr parse_set(const std::string& value) {
  mulrep_set* out = nullptr;
  check(mulrep_set_parse(load_text(value).c_str(), &out), "set");
  return SetPtr(out);
}

ColoringPtr parse_coloring(const std::string& value) {
  mulrep_coloring* out = nullptr;
  check(mulrep_coloring_parse(load_text(value).c_str(), &out), "coloring " + value);
  return ColoringPtr(out);
}

mulrep_format to_format(const std::string& name) {
  if (name == "text") return MULREP_FORMAT_TEXT;
  if (name == "json") return MULREP_FORMAT_JSON;
  return MULREP_FORMAT_CSV;
}

mulrep_strategy to_strategy(const std::string& name) {
  if (name == "squarefree-rich") return MULREP_STRATEGY_SQUAREFREE_RICH;
  if (name == "exhaustive-scan") return MULREP_STRATEGY_EXHAUSTIVE_SCAN;
  return MULREP_STRATEGY_HYBRID;
}

struct Options {
  std::string format = "text";
  unsigned threads = 0;

  std::string system;
  std::string set;
  unsigned h = 2;
  std::uint64_t n = 0;
  bool additive = false;
  std::size_t tuple_cap = 64;

  std::uint64_t lo = 2;
  std::uint64_t hi = 0;
  bool scan = false;

  std::string construction;
  std::uint64_t scan_bound = 10000;
  std::uint64_t t_cutoff = 3;

  std::uint64_t target = 0;
  std::uint64_t max_n = 1000000;
  std::uint64_t max_candidates = 1000000;
  std::string strategy = "hybrid";

  std::string coloring;
  std::vector<std::string> product;
  std::size_t m = 0;
  std::uint64_t max_nodes = 0;
  std::uint64_t random_trials = 0;
  std::size_t ground_size = 6;
  unsigned k = 2;
  std::uint32_t colors = 2;
  std::uint64_t seed = 1;
  std::vector<std::string> chain;
  std::vector<std::string> levels;
  std::vector<std::size_t> sizes;

  unsigned multinomial = 0;
  std::vector<unsigned> parts;
  std::vector<std::uint64_t> universe;
  std::vector<std::string> families;
  std::uint64_t factorizations = 0;
  std::size_t cap = 0;

  std::uint64_t q = 0;
};

int run_count(const Options& o) {
  const auto fmt = to_format(o.format);
  if (o.additive) {
    if (o.set.empty()) throw CliError{"--additive requires --set"};
    auto set = parse_set(o.set);
    std::uint64_t count = 0;
    check(mulrep_count_additive(set.get(), o.h, o.n, &count), "count");
    if (fmt == MULREP_FORMAT_JSON)
      std::printf("{\"n\":%llu,\"h\":%u,\"count\":%llu}\n", static_cast<unsigned long long>(o.n), o.h,
                  static_cast<unsigned long long>(count));
    else if (fmt == MULREP_FORMAT_CSV)
      std::printf("n,count\n%llu,%llu\n", static_cast<unsigned long long>(o.n),
                  static_cast<unsigned long long>(count));
    else
      std::printf("n = %llu\ncount = %llu\n", static_cast<unsigned long long>(o.n),
                  static_cast<unsigned long long>(count));
    return kExitOk;
  }
  SystemPtr system;
  if (!o.system.empty()) {
    system = parse_system(o.system);
  } else if (!o.set.empty()) {
    auto set = parse_set(o.set);
    std::vector<const mulrep_set*> parts(o.h, set.get());
    mulrep_system* out = nullptr;
    check(mulrep_system_from_parts(parts.data(), parts.size(), &out), "system");
    system.reset(out);
  } else {
    throw CliError{"count requires --system or --set"};
  }
  mulrep_witness* w = nullptr;
  check(mulrep_count(system.get(), o.n, o.tuple_cap, &w), "count");
  WitnessPtr witness(w);
  char* report = nullptr;
  check(mulrep_witness_render(witness.get(), fmt, &report), "render");
  emit(report);
  return kExitOk;
}

int run_window(const Options& o) {
  auto system = parse_system(o.system);
  const auto fmt = to_format(o.format);
  char* report = nullptr;
  if (o.scan) {
    check(mulrep_scan_render(system.get(), o.lo, o.hi, o.threads, fmt, &report), "scan");
  } else {
    mulrep_window_stats stats{};
    check(mulrep_window(system.get(), o.lo, o.hi, o.threads, &stats), "window");
    check(mulrep_window_render(&stats, fmt, &report), "render");
  }
  emit(report);
  return kExitOk;
}

int run_catalog_verify(const Options& o) {
  mulrep_construction* c = nullptr;
  check(mulrep_construction_parse(o.construction.c_str(), &c), "construction");
  ConstructionPtr construction(c);
  int passed = 0;
  char* report = nullptr;
  check(mulrep_catalog_verify(construction.get(), o.scan_bound, o.threads, to_format(o.format), &passed, &report),
        "catalog-verify");
  emit(report);
  if (!passed) {
    std::fprintf(stderr, "catalog-verify: mismatch against the closed form or claimed bounds\n");
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_mh_table(const Options& o) {
  char* report = nullptr;
  check(mulrep_mh_table(o.h, o.t_cutoff, to_format(o.format), &report), "mh-table");
  emit(report);
  return kExitOk;
}

int run_witness(const Options& o) {
  auto system = parse_system(o.system);
  const mulrep_search_budget budget{o.max_candidates, o.max_n, to_strategy(o.strategy)};
  mulrep_search_result result{};
  char* report = nullptr;
  check(mulrep_find_witness(system.get(), o.target, &budget, o.threads, &result, to_format(o.format), &report),
        "witness");
  emit(report);
  return kExitOk;
}

int run_ramsey(const Options& o) {
  const auto fmt = to_format(o.format);
  if (o.random_trials > 0) {
    std::uint64_t found = 0, failures = 0;
    check(mulrep_ramsey_random_trials(o.ground_size, o.k, o.colors, o.m, o.random_trials, o.seed, o.max_nodes,
                                      &found, &failures),
          "ramsey");
    if (fmt == MULREP_FORMAT_JSON)
      std::printf("{\"trials\":%llu,\"found\":%llu,\"checker_failures\":%llu,\"seed\":%llu}\n",
                  static_cast<unsigned long long>(o.random_trials), static_cast<unsigned long long>(found),
                  static_cast<unsigned long long>(failures), static_cast<unsigned long long>(o.seed));
    else if (fmt == MULREP_FORMAT_CSV)
      std::printf("trials,found,checker_failures,seed\n%llu,%llu,%llu,%llu\n",
                  static_cast<unsigned long long>(o.random_trials), static_cast<unsigned long long>(found),
                  static_cast<unsigned long long>(failures), static_cast<unsigned long long>(o.seed));
    else
      std::printf("trials = %llu\nfound = %llu\nchecker_failures = %llu\nseed = %llu\n",
                  static_cast<unsigned long long>(o.random_trials), static_cast<unsigned long long>(found),
                  static_cast<unsigned long long>(failures), static_cast<unsigned long long>(o.seed));
    return failures ? kExitVerifyFailed : kExitOk;
  }

  if (!o.chain.empty() || !o.levels.empty()) {
    const std::size_t depth = o.chain.empty() ? o.levels.size() : o.chain.size();
    if (o.sizes.size() != depth) throw CliError{"--sizes needs one entry per chain level"};
    std::vector<ColoringPtr> owned;
    std::vector<const mulrep_coloring*> flat;
    std::vector<std::size_t> counts;
    if (!o.chain.empty()) {
      for (const auto& file : o.chain) owned.push_back(parse_coloring(file));
    } else {
      for (const auto& level : o.levels) {
        const auto files = split_commas(level);
        counts.push_back(files.size());
        for (const auto& file : files) owned.push_back(parse_coloring(file));
      }
    }
    for (const auto& c : owned) flat.push_back(c.get());
    int found = 0;
    char* report = nullptr;
    if (!o.chain.empty())
      check(mulrep_iterated_chain(flat.data(), depth, o.sizes.data(), o.max_nodes, fmt, &found, &report), "chain");
    else
      check(mulrep_doubly_iterated_chain(flat.data(), counts.data(), depth, o.sizes.data(), o.max_nodes, fmt, &found,
                                         &report),
            "chain");
    emit(report);
    return kExitOk;
  }

  ColoringPtr coloring;
  if (!o.product.empty()) {
    std::vector<ColoringPtr> owned;
    std::vector<const mulrep_coloring*> factors;
    for (const auto& file : o.product) owned.push_back(parse_coloring(file));
    for (const auto& c : owned) factors.push_back(c.get());
    mulrep_coloring* out = nullptr;
    check(mulrep_product_coloring(factors.data(), factors.size(), &out), "product");
    coloring.reset(out);
  } else if (!o.coloring.empty()) {
    coloring = parse_coloring(o.coloring);
  } else {
    throw CliError{"ramsey requires --coloring, --product, --chain, --level or --random-trials"};
  }
  int found = 0;
  char* report = nullptr;
  check(mulrep_homogeneous_render(coloring.get(), o.m, o.max_nodes, fmt, &found, &report), "ramsey");
  emit(report);
  return kExitOk;
}

int run_partitions(const Options& o) {
  const auto fmt = to_format(o.format);
  if (o.factorizations > 0) {
    char* report = nullptr;
    std::size_t count = 0;
    check(mulrep_partitions_render(o.factorizations, o.h, o.cap, fmt, &report, &count), "partitions");
    emit(report);
    return kExitOk;
  }
  std::uint64_t value = 0;
  if (!o.parts.empty()) {
    check(mulrep_multinomial(o.multinomial, o.parts.data(), o.parts.size(), &value), "multinomial");
  } else if (!o.families.empty()) {
    std::vector<FamilyPtr> owned;
    std::vector<const mulrep_family*> families;
    for (const auto& text : o.families) {
      mulrep_family* f = nullptr;
      check(mulrep_family_parse(load_text(text).c_str(), &f), "family");
      owned.emplace_back(f);
      families.push_back(f);
    }
    check(mulrep_count_covers(o.universe.data(), o.universe.size(), families.data(), families.size(), &value),
          "covers");
  } else {
    throw CliError{"partitions requires --parts, --family or --factorizations"};
  }
  if (fmt == MULREP_FORMAT_JSON)
    std::printf("{\"count\":%llu}\n", static_cast<unsigned long long>(value));
  else if (fmt == MULREP_FORMAT_CSV)
    std::printf("count\n%llu\n", static_cast<unsigned long long>(value));
  else
    std::printf("count = %llu\n", static_cast<unsigned long long>(value));
  return kExitOk;
}

int run_correspond(const Options& o) {
  auto system = parse_system(o.system);
  mulrep_correspondence result{};
  check(mulrep_correspondence_check(system.get(), o.q, o.universe.data(), o.universe.size(), &result),
        "correspond");
  char* report = nullptr;
  check(mulrep_correspondence_render(o.q, &result, to_format(o.format), &report), "render");
  emit(report);
  if (!result.equal) {
    std::fprintf(stderr, "correspond: system count and cover count differ\n");
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative representation counts, constructions and Ramsey extraction"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", std::string(mulrep_version()));
  app.set_config("--config", "", "TOML or INI file with option values; command-line flags override it");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", o.threads, "Worker threads, 0 for all cores");

  auto* count = app.add_subcommand("count", "Count ordered representations of n");
  count->add_option("--system", o.system, "System text or file");
  count->add_option("--set", o.set, "Set text or file; used as every part");
  count->add_option("--h", o.h, "Order when --set is given");
  count->add_option("--n", o.n, "Integer to represent")->required();
  count->add_flag("--additive", o.additive, "Count additive representations over --set");
  count->add_option("--tuple-cap", o.tuple_cap, "Maximum tuples listed");

  auto* window = app.add_subcommand("window", "Min and max counts over [lo, hi]");
  window->add_option("--system", o.system, "System text or file")->required();
  window->add_option("--lo", o.lo, "Lower end");
  window->add_option("--hi", o.hi, "Upper end")->required();
  window->add_flag("--scan", o.scan, "Emit every count instead of the summary");

  auto* verify = app.add_subcommand("catalog-verify", "Check a named construction against its closed form");
  verify->add_option("--construction", o.construction, "Construction name")->required();
  verify->add_option("--N", o.scan_bound, "Scan bound");

  auto* mh = app.add_subcommand("mh-table", "Constructions realizing each (liminf, limsup) pair");
  mh->add_option("--h", o.h, "Order")->required();
  mh->add_option("--T", o.t_cutoff, "Largest finite limsup listed");

  auto* witness = app.add_subcommand("witness", "Search for n with count at least target");
  witness->add_option("--system", o.system, "System text or file")->required();
  witness->add_option("--target", o.target, "Required count")->required();
  witness->add_option("--max-n", o.max_n, "Largest candidate");
  witness->add_option("--max-candidates", o.max_candidates, "Candidate budget");
  witness->add_option("--strategy", o.strategy, "Candidate order")
      ->check(CLI::IsMember({"squarefree-rich", "exhaustive-scan", "hybrid"}));

  auto* ramsey = app.add_subcommand("ramsey", "Homogeneous subsets and iterated chains");
  ramsey->add_option("--coloring", o.coloring, "Coloring file");
  ramsey->add_option("--product", o.product, "Factor coloring files; searches their product");
  ramsey->add_option("--m", o.m, "Subset size");
  ramsey->add_option("--max-nodes", o.max_nodes, "Search node budget, 0 for the default");
  ramsey->add_option("--random-trials", o.random_trials, "Number of seeded random colorings");
  ramsey->add_option("--ground-size", o.ground_size, "Ground size for random colorings");
  ramsey->add_option("--k", o.k, "Subset size colored by random colorings");
  ramsey->add_option("--colors", o.colors, "Number of colors for random colorings");
  ramsey->add_option("--seed", o.seed, "Random seed");
  ramsey->add_option("--chain", o.chain, "One coloring file per level, level k coloring k-subsets");
  ramsey->add_option("--level", o.levels, "Comma-separated factor files of one level of a doubly iterated chain");
  ramsey->add_option("--sizes", o.sizes, "Subset size at each level");

  auto* partitions = app.add_subcommand("partitions", "Multinomials, ordered covers and squarefree factorizations");
  partitions->add_option("--multinomial", o.multinomial, "Size n of the ground set");
  partitions->add_option("--parts", o.parts, "Block sizes");
  partitions->add_option("--universe", o.universe, "Ground set elements");
  partitions->add_option("--family", o.families, "Family text or file, one per slot");
  partitions->add_option("--factorizations", o.factorizations, "Squarefree q to split into slots");
  partitions->add_option("--h", o.h, "Number of slots");
  partitions->add_option("--cap", o.cap, "Maximum tuples, 0 for the default");

  auto* correspond = app.add_subcommand("correspond", "Compare a system count with its prime-set cover count");
  correspond->add_option("--system", o.system, "System text or file")->required();
  correspond->add_option("--q", o.q, "Squarefree integer")->required();
  correspond->add_option("--universe", o.universe, "Prime universe, default the primes of q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(o);
    if (window->parsed()) return run_window(o);
    if (verify->parsed()) return run_catalog_verify(o);
    if (mh->parsed()) return run_mh_table(o);
    if (witness->parsed()) return run_witness(o);
    if (ramsey->parsed()) return run_ramsey(o);
    if (partitions->parsed()) return run_partitions(o);
    if (correspond->parsed()) return run_correspond(o);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitUsage;
  }
  return kExitUsage;
}
