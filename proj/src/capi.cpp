#include "mulrep/mulrep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mulrep/catalog.hpp"
#include "mulrep/config.hpp"
#include "mulrep/error.hpp"
#include "mulrep/integer_sets.hpp"
#include "mulrep/ramsey.hpp"
#include "mulrep/repcount.hpp"
#include "mulrep/report.hpp"
#include "mulrep/set_partitions.hpp"
#include "mulrep/squarefree_map.hpp"
#include "mulrep/witness_search.hpp"

struct mulrep_set {
  mulrep::SetDescription value;
};
struct mulrep_system {
  mulrep::MultiplicativeSystem value;
};
struct mulrep_witness {
  mulrep::RepWitness value;
  std::size_t order;
};
struct mulrep_family {
  mulrep::FamilyDescription value;
};
struct mulrep_construction {
  mulrep::NamedConstruction value;
};
struct mulrep_coloring {
  mulrep::Coloring value;
};

namespace {

thread_local std::string g_last_error;

mulrep_status to_status(mulrep::Errc code) {
  using mulrep::Errc;
  switch (code) {
    case Errc::invalid_argument: return MULREP_ERR_INVALID_ARGUMENT;
    case Errc::parse: return MULREP_ERR_PARSE;
    case Errc::overflow: return MULREP_ERR_OVERFLOW;
    case Errc::resource_limit: return MULREP_ERR_RESOURCE_LIMIT;
    case Errc::factorization_limit: return MULREP_ERR_FACTORIZATION_LIMIT;
    case Errc::not_squarefree: return MULREP_ERR_NOT_SQUAREFREE;
    case Errc::budget_exhausted: return MULREP_ERR_BUDGET_EXHAUSTED;
  }
  return MULREP_ERR_INTERNAL;
}

mulrep_status fail(mulrep_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs fn and converts any exception into a status code.
template <class Fn>
mulrep_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return MULREP_OK;
  } catch (const mulrep::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MULREP_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(MULREP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MULREP_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw mulrep::Error(mulrep::Errc::invalid_argument, std::string("null or invalid argument: ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mulrep::Format to_format(mulrep_format f) {
  switch (f) {
    case MULREP_FORMAT_TEXT: return mulrep::Format::text;
    case MULREP_FORMAT_JSON: return mulrep::Format::json;
    case MULREP_FORMAT_CSV: return mulrep::Format::csv;
  }
  throw mulrep::Error(mulrep::Errc::invalid_argument, "unknown output format");
}

mulrep::RamseyBudget to_budget(std::uint64_t max_nodes) {
  mulrep::RamseyBudget b;
  if (max_nodes) b.max_nodes = max_nodes;
  return b;
}

}  // namespace

extern "C" {

const char* mulrep_version(void) { return "0.1.0"; }

const char* mulrep_status_string(mulrep_status status) {
  switch (status) {
    case MULREP_OK: return "ok";
    case MULREP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MULREP_ERR_PARSE: return "parse error";
    case MULREP_ERR_OVERFLOW: return "overflow";
    case MULREP_ERR_RESOURCE_LIMIT: return "resource limit";
    case MULREP_ERR_FACTORIZATION_LIMIT: return "factorization limit";
    case MULREP_ERR_NOT_SQUAREFREE: return "not squarefree";
    case MULREP_ERR_BUDGET_EXHAUSTED: return "search budget exhausted";
    case MULREP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mulrep_last_error(void) { return g_last_error.c_str(); }

void mulrep_string_free(char* s) { std::free(s); }

// ---- sets -------------------------------------------------------------------

mulrep_status mulrep_set_parse(const char* text, mulrep_set** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = new mulrep_set{mulrep::parse_set(text)};
  });
}

void mulrep_set_free(mulrep_set* set) { delete set; }

mulrep_status mulrep_set_contains(const mulrep_set* set, uint64_t n, int* out) {
  return guarded([&] {
    require(set && out, "set/out");
    *out = set->value.contains(n) ? 1 : 0;
  });
}

mulrep_status mulrep_set_enumerate(const mulrep_set* set, uint64_t n_max, uint64_t* buf, size_t buf_len,
                                   size_t* count) {
  return guarded([&] {
    require(set && count, "set/count");
    const auto members = set->value.enumerate_up_to(n_max);
    *count = members.size();
    if (buf)
      for (std::size_t i = 0; i < members.size() && i < buf_len; ++i) buf[i] = members[i];
  });
}

mulrep_status mulrep_set_describe(const mulrep_set* set, char** out) {
  return guarded([&] {
    require(set && out, "set/out");
    *out = copy_string(set->value.to_string());
  });
}

// ---- systems ----------------------------------------------------------------

mulrep_status mulrep_system_parse(const char* text, mulrep_system** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = new mulrep_system{mulrep::parse_system(text)};
  });
}

mulrep_status mulrep_system_from_parts(const mulrep_set* const* parts, size_t h, mulrep_system** out) {
  return guarded([&] {
    require(parts && out, "parts/out");
    std::vector<mulrep::SetDescription> v;
    for (std::size_t i = 0; i < h; ++i) {
      require(parts[i] != nullptr, "parts[i]");
      v.push_back(parts[i]->value);
    }
    *out = new mulrep_system{mulrep::MultiplicativeSystem(std::move(v))};
  });
}

void mulrep_system_free(mulrep_system* system) { delete system; }

size_t mulrep_system_order(const mulrep_system* system) { return system ? system->value.order() : 0; }

mulrep_status mulrep_system_describe(const mulrep_system* system, char** out) {
  return guarded([&] {
    require(system && out, "system/out");
    *out = copy_string(system->value.to_string());
  });
}

// ---- counts -----------------------------------------------------------------

mulrep_status mulrep_count(const mulrep_system* system, uint64_t n, size_t tuple_cap, mulrep_witness** out) {
  return guarded([&] {
    require(system && out, "system/out");
    *out = new mulrep_witness{mulrep::count_system_reps(system->value, n, {tuple_cap, {}}), system->value.order()};
  });
}

void mulrep_witness_free(mulrep_witness* w) { delete w; }
uint64_t mulrep_witness_n(const mulrep_witness* w) { return w ? w->value.n : 0; }
uint64_t mulrep_witness_count(const mulrep_witness* w) { return w ? w->value.count : 0; }
size_t mulrep_witness_order(const mulrep_witness* w) { return w ? w->order : 0; }
size_t mulrep_witness_tuple_count(const mulrep_witness* w) { return w ? w->value.tuples.size() : 0; }
int mulrep_witness_truncated(const mulrep_witness* w) { return w && w->value.truncated ? 1 : 0; }

mulrep_status mulrep_witness_tuple(const mulrep_witness* w, size_t index, uint64_t* out, size_t out_len) {
  return guarded([&] {
    require(w && out, "witness/out");
    require(index < w->value.tuples.size(), "tuple index");
    const auto& t = w->value.tuples[index];
    require(out_len >= t.size(), "out_len");
    std::copy(t.begin(), t.end(), out);
  });
}

mulrep_status mulrep_witness_render(const mulrep_witness* w, mulrep_format format, char** out) {
  return guarded([&] {
    require(w && out, "witness/out");
    *out = copy_string(mulrep::render_witness(w->value, to_format(format)));
  });
}

mulrep_status mulrep_count_additive(const mulrep_set* set, unsigned h, uint64_t n, uint64_t* out) {
  return guarded([&] {
    require(set && out, "set/out");
    *out = mulrep::count_additive_reps(set->value, h, n);
  });
}

mulrep_status mulrep_window(const mulrep_system* system, uint64_t lo, uint64_t hi, unsigned threads,
                            mulrep_window_stats* out) {
  return guarded([&] {
    require(system && out, "system/out");
    const auto s = mulrep::window_stats(system->value, lo, hi, threads);
    *out = {s.lo, s.hi, s.min_count, s.argmin, s.max_count, s.argmax};
  });
}

mulrep_status mulrep_window_render(const mulrep_window_stats* stats, mulrep_format format, char** out) {
  return guarded([&] {
    require(stats && out, "stats/out");
    const mulrep::WindowStats s{stats->lo, stats->hi, stats->min_count, stats->argmin, stats->max_count, stats->argmax};
    *out = copy_string(mulrep::render_window(s, to_format(format)));
  });
}

mulrep_status mulrep_scan_render(const mulrep_system* system, uint64_t lo, uint64_t hi, unsigned threads,
                                 mulrep_format format, char** out) {
  return guarded([&] {
    require(system && out, "system/out");
    *out = copy_string(mulrep::render_scan(mulrep::scan_counts(system->value, lo, hi, threads), to_format(format)));
  });
}

// ---- squarefree -------------------------------------------------------------

mulrep_status mulrep_phi(uint64_t q, uint64_t* primes, size_t primes_len, size_t* count) {
  return guarded([&] {
    require(count != nullptr, "count");
    const auto s = mulrep::phi(q);
    *count = s.size();
    if (primes)
      for (std::size_t i = 0; i < s.size() && i < primes_len; ++i) primes[i] = s.primes()[i];
  });
}

mulrep_status mulrep_phi_inverse(const uint64_t* primes, size_t count, uint64_t* out) {
  return guarded([&] {
    require(out && (primes || count == 0), "primes/out");
    std::vector<std::uint64_t> v(primes, primes + count);
    *out = mulrep::phi_inverse(mulrep::PrimeSet::of(std::move(v)));
  });
}

mulrep_status mulrep_omega(uint64_t n, unsigned* out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = mulrep::omega(n);
  });
}

mulrep_status mulrep_partitions_render(uint64_t q, unsigned h, size_t cap, mulrep_format format, char** out,
                                       size_t* count) {
  return guarded([&] {
    require(out != nullptr, "out");
    const auto tuples = mulrep::factorizations_as_partitions(q, h, cap ? cap : mulrep::kDefaultPartitionCap);
    if (count) *count = tuples.size();
    *out = copy_string(mulrep::render_partitions(q, tuples, to_format(format)));
  });
}

// ---- set partitions ---------------------------------------------------------

mulrep_status mulrep_multinomial(unsigned n, const unsigned* ks, size_t h, uint64_t* out) {
  return guarded([&] {
    require(out && (ks || h == 0), "ks/out");
    *out = mulrep::multinomial(n, std::span<const unsigned>(ks, h));
  });
}

mulrep_status mulrep_family_parse(const char* text, mulrep_family** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = new mulrep_family{mulrep::parse_family(text)};
  });
}

void mulrep_family_free(mulrep_family* family) { delete family; }

mulrep_status mulrep_count_covers(const uint64_t* elements, size_t n, const mulrep_family* const* families, size_t h,
                                  uint64_t* out) {
  return guarded([&] {
    require(out && families && (elements || n == 0), "elements/families/out");
    std::vector<mulrep::FamilyDescription> fs;
    for (std::size_t i = 0; i < h; ++i) {
      require(families[i] != nullptr, "families[i]");
      fs.push_back(families[i]->value);
    }
    *out = mulrep::count_ordered_covers(std::span<const std::uint64_t>(elements, n), fs);
  });
}

mulrep_status mulrep_correspondence_check(const mulrep_system* system, uint64_t q, const uint64_t* universe,
                                          size_t universe_len, mulrep_correspondence* out) {
  return guarded([&] {
    require(system && out, "system/out");
    const auto r = universe_len
                       ? mulrep::verify_correspondence(system->value, q,
                                                       std::span<const std::uint64_t>(universe, universe_len))
                       : mulrep::verify_correspondence(system->value, q);
    *out = {r.system_count, r.cover_count, r.equal ? 1 : 0};
  });
}

mulrep_status mulrep_correspondence_render(uint64_t q, const mulrep_correspondence* result, mulrep_format format,
                                           char** out) {
  return guarded([&] {
    require(result && out, "result/out");
    const mulrep::CorrespondenceResult r{result->system_count, result->cover_count, result->equal != 0};
    *out = copy_string(mulrep::render_correspondence(q, mulrep::phi(q), r, to_format(format)));
  });
}

// ---- catalog ----------------------------------------------------------------

mulrep_status mulrep_construction_parse(const char* text, mulrep_construction** out) {
  return guarded([&] {
    require(text && out, "text/out");
    auto c = mulrep::parse_construction(text);
    if (!c) throw mulrep::Error(mulrep::Errc::parse, std::string("not a construction name: ") + text);
    *out = new mulrep_construction{std::move(*c)};
  });
}

void mulrep_construction_free(mulrep_construction* c) { delete c; }

mulrep_status mulrep_construction_system(const mulrep_construction* c, mulrep_system** out) {
  return guarded([&] {
    require(c && out, "construction/out");
    *out = new mulrep_system{c->value.system};
  });
}

mulrep_status mulrep_construction_claimed(const mulrep_construction* c, uint64_t* s, uint64_t* t, int* t_infinite) {
  return guarded([&] {
    require(c && s && t && t_infinite, "construction/s/t/t_infinite");
    *s = c->value.claimed.s;
    *t_infinite = c->value.claimed.t ? 0 : 1;
    *t = c->value.claimed.t.value_or(0);
  });
}

mulrep_status mulrep_construction_closed_form(const mulrep_construction* c, uint64_t n, uint64_t* out) {
  return guarded([&] {
    require(c && out, "construction/out");
    *out = mulrep::closed_form_count(c->value, n);
  });
}

mulrep_status mulrep_catalog_verify(const mulrep_construction* c, uint64_t scan_bound, unsigned threads,
                                    mulrep_format format, int* passed, char** report) {
  return guarded([&] {
    require(c && passed && report, "construction/passed/report");
    const auto r = mulrep::verify(c->value, scan_bound, threads);
    *passed = r.passed() ? 1 : 0;
    *report = copy_string(mulrep::render_verify(r, to_format(format)));
  });
}

mulrep_status mulrep_mh_table(unsigned h, uint64_t t_cutoff, mulrep_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    *out = copy_string(mulrep::render_mh_table(h, mulrep::mh_table(h, t_cutoff), to_format(format)));
  });
}

// ---- witness search ---------------------------------------------------------

mulrep_status mulrep_find_witness(const mulrep_system* system, uint64_t target, const mulrep_search_budget* budget,
                                  unsigned threads, mulrep_search_result* out, mulrep_format format, char** report) {
  return guarded([&] {
    require(system && budget && out, "system/budget/out");
    mulrep::SearchBudget b;
    b.max_candidates = budget->max_candidates;
    b.max_n = budget->max_n;
    switch (budget->strategy) {
      case MULREP_STRATEGY_SQUAREFREE_RICH: b.strategy = mulrep::Strategy::squarefree_rich; break;
      case MULREP_STRATEGY_EXHAUSTIVE_SCAN: b.strategy = mulrep::Strategy::exhaustive_scan; break;
      case MULREP_STRATEGY_HYBRID: b.strategy = mulrep::Strategy::hybrid; break;
      default: require(false, "strategy");
    }
    const auto o = mulrep::find_witness(system->value, target, b, threads);
    *out = {o.witness ? 1 : 0,       o.witness ? o.witness->n : 0, o.witness ? o.witness->count : 0,
            o.candidates_tried, o.max_count_seen,               o.argmax};
    if (report) *report = copy_string(mulrep::render_search(o, to_format(format)));
  });
}

// ---- Ramsey -----------------------------------------------------------------

mulrep_status mulrep_coloring_parse(const char* text, mulrep_coloring** out) {
  return guarded([&] {
    require(text && out, "text/out");
    *out = new mulrep_coloring{mulrep::parse_coloring(text)};
  });
}

mulrep_status mulrep_coloring_random(size_t ground_size, unsigned k, uint32_t colors, uint64_t seed,
                                     mulrep_coloring** out) {
  return guarded([&] {
    require(out != nullptr, "out");
    std::mt19937_64 rng(seed);
    *out = new mulrep_coloring{mulrep::Coloring::random(ground_size, k, colors, rng)};
  });
}

void mulrep_coloring_free(mulrep_coloring* c) { delete c; }
size_t mulrep_coloring_ground_size(const mulrep_coloring* c) { return c ? c->value.ground().size() : 0; }
unsigned mulrep_coloring_k(const mulrep_coloring* c) { return c ? c->value.k() : 0; }

mulrep_status mulrep_coloring_render(const mulrep_coloring* c, char** out) {
  return guarded([&] {
    require(c && out, "coloring/out");
    *out = copy_string(mulrep::format_coloring(c->value));
  });
}

mulrep_status mulrep_product_coloring(const mulrep_coloring* const* factors, size_t count, mulrep_coloring** out) {
  return guarded([&] {
    require(out && (factors || count == 0), "factors/out");
    std::vector<mulrep::Coloring> fs;
    for (std::size_t i = 0; i < count; ++i) {
      require(factors[i] != nullptr, "factors[i]");
      fs.push_back(factors[i]->value);
    }
    *out = new mulrep_coloring{mulrep::product_coloring(fs)};
  });
}

mulrep_status mulrep_find_homogeneous(const mulrep_coloring* c, size_t m, uint64_t max_nodes, uint64_t* subset,
                                      int* found) {
  return guarded([&] {
    require(c && found && (subset || m == 0), "coloring/subset/found");
    const auto r = mulrep::find_homogeneous(c->value, m, to_budget(max_nodes));
    *found = r ? 1 : 0;
    if (r) std::copy(r->begin(), r->end(), subset);
  });
}

mulrep_status mulrep_is_homogeneous(const mulrep_coloring* c, const uint64_t* subset, size_t len, int* out) {
  return guarded([&] {
    require(c && out && (subset || len == 0), "coloring/subset/out");
    *out = mulrep::is_homogeneous(c->value, std::span<const std::uint64_t>(subset, len)) ? 1 : 0;
  });
}

mulrep_status mulrep_homogeneous_render(const mulrep_coloring* c, size_t m, uint64_t max_nodes, mulrep_format format,
                                        int* found, char** out) {
  return guarded([&] {
    require(c && found && out, "coloring/found/out");
    const auto r = mulrep::find_homogeneous(c->value, m, to_budget(max_nodes));
    *found = r ? 1 : 0;
    *out = copy_string(mulrep::render_subset(r, to_format(format)));
  });
}

mulrep_status mulrep_iterated_chain(const mulrep_coloring* const* per_level, size_t levels, const size_t* sizes,
                                    uint64_t max_nodes, mulrep_format format, int* found, char** report) {
  return guarded([&] {
    require(per_level && sizes && found && report, "per_level/sizes/found/report");
    std::vector<mulrep::Coloring> cs;
    for (std::size_t k = 0; k < levels; ++k) {
      require(per_level[k] != nullptr, "per_level[k]");
      cs.push_back(per_level[k]->value);
    }
    const auto chain = mulrep::iterated_chain(cs, std::span<const std::size_t>(sizes, levels), to_budget(max_nodes));
    if (chain && !mulrep::verify_chain(cs, *chain))
      throw mulrep::Error(mulrep::Errc::invalid_argument, "emitted chain failed independent verification");
    *found = chain ? 1 : 0;
    *report = copy_string(mulrep::render_chain(chain, to_format(format)));
  });
}

mulrep_status mulrep_doubly_iterated_chain(const mulrep_coloring* const* colorings, const size_t* index_counts,
                                           size_t levels, const size_t* sizes, uint64_t max_nodes,
                                           mulrep_format format, int* found, char** report) {
  return guarded([&] {
    require(index_counts && sizes && found && report, "index_counts/sizes/found/report");
    std::vector<std::vector<mulrep::Coloring>> per_level(levels);
    std::size_t at = 0;
    for (std::size_t k = 0; k < levels; ++k)
      for (std::size_t i = 0; i < index_counts[k]; ++i, ++at) {
        require(colorings && colorings[at], "colorings[i]");
        per_level[k].push_back(colorings[at]->value);
      }
    const auto chain =
        mulrep::doubly_iterated_chain(per_level, std::span<const std::size_t>(sizes, levels), to_budget(max_nodes));
    *found = chain ? 1 : 0;
    *report = copy_string(mulrep::render_chain(chain, to_format(format)));
  });
}

mulrep_status mulrep_ramsey_random_trials(size_t ground_size, unsigned k, uint32_t colors, size_t m, uint64_t trials,
                                          uint64_t seed, uint64_t max_nodes, uint64_t* found,
                                          uint64_t* checker_failures) {
  return guarded([&] {
    require(found && checker_failures, "found/checker_failures");
    const auto s = mulrep::random_trials(ground_size, k, colors, m, trials, seed, to_budget(max_nodes));
    *found = s.found;
    *checker_failures = s.checker_failures;
  });
}

}  // extern "C"
