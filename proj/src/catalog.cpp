#include "mulrep/catalog.hpp"

#include <algorithm>

#include "mulrep/arith.hpp"
#include "mulrep/error.hpp"
#include "mulrep/set_partitions.hpp"
#include "mulrep/squarefree_map.hpp"

namespace mulrep {

namespace {

void require_order(unsigned h) {
  if (h < 2) throw Error(Errc::invalid_argument, "construction order h must be >= 2");
}

std::vector<SetDescription> padded(std::vector<SetDescription> head, unsigned h) {
  while (head.size() < h) head.push_back(SetDescription::singleton({1}));
  return head;
}

// Primes whose count check is part of every verification.
constexpr unsigned kPrimeChecks = 100;

}  // namespace

std::string NamedConstruction::name() const {
  const std::string hs = "h=" + std::to_string(h);
  switch (kind) {
    case ConstructionKind::fundamental: return "Fundamental(" + hs + ")";
    case ConstructionKind::liminf_one_limsup_t: return "LiminfOneLimsupT(" + hs + ",t=" + std::to_string(param) + ")";
    case ConstructionKind::liminf_one_limsup_inf: return "LiminfOneLimsupInf(" + hs + ")";
    case ConstructionKind::liminf_s_limsup_inf: return "LiminfSLimsupInf(" + hs + ",s=" + std::to_string(param) + ")";
  }
  return "?";
}

std::string NamedConstruction::shorthand() const {
  const std::string hs = "h=" + std::to_string(h);
  switch (kind) {
    case ConstructionKind::fundamental: return "fundamental:" + hs;
    case ConstructionKind::liminf_one_limsup_t: return "one-t:" + hs + ",t=" + std::to_string(param);
    case ConstructionKind::liminf_one_limsup_inf: return "one-inf:" + hs;
    case ConstructionKind::liminf_s_limsup_inf: return "s-inf:" + hs + ",s=" + std::to_string(param);
  }
  return "?";
}

NamedConstruction build_fundamental(unsigned h) {
  require_order(h);
  std::vector<SetDescription> parts;
  // Part i holds the primes p_j with j = i+1 (mod h), so 2 = p_1 lands in part 0.
  for (unsigned i = 0; i < h; ++i)
    parts.push_back(SetDescription::smooth_over(PrimeClass::index_residue(h, (i + 1) % h)));
  return {ConstructionKind::fundamental, h, 0, MultiplicativeSystem(std::move(parts)), {1, 1}};
}

NamedConstruction build_liminf_one_limsup_t(unsigned h, std::uint64_t t) {
  require_order(h);
  if (t < 1) throw Error(Errc::invalid_argument, "t must be >= 1");
  auto parts = padded({SetDescription::all_naturals(), SetDescription::powers_of(2, 0, t - 1)}, h);
  return {ConstructionKind::liminf_one_limsup_t, h, t, MultiplicativeSystem(std::move(parts)), {1, t}};
}

NamedConstruction build_liminf_one_limsup_inf(unsigned h) {
  require_order(h);
  auto parts = padded({SetDescription::all_naturals(), SetDescription::powers_of(2, 0, std::nullopt)}, h);
  return {ConstructionKind::liminf_one_limsup_inf, h, 0, MultiplicativeSystem(std::move(parts)), {1, std::nullopt}};
}

NamedConstruction build_liminf_s_limsup_inf(unsigned h, std::uint64_t s) {
  require_order(h);
  if (s < 2 || s > h) throw Error(Errc::invalid_argument, "s must satisfy 2 <= s <= h");
  std::vector<SetDescription> head{SetDescription::all_naturals()};
  for (std::uint64_t i = 2; i <= s; ++i) head.push_back(SetDescription::primes_with_one());
  return {ConstructionKind::liminf_s_limsup_inf, h, s, MultiplicativeSystem(padded(std::move(head), h)),
          {s, std::nullopt}};
}

std::uint64_t closed_form_count(const NamedConstruction& c, std::uint64_t n) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be >= 1");
  switch (c.kind) {
    case ConstructionKind::fundamental:
      return 1;
    case ConstructionKind::liminf_one_limsup_t: {
      const std::uint64_t ell = two_adic_valuation(n) + 1;
      return std::min(ell, c.param);
    }
    case ConstructionKind::liminf_one_limsup_inf:
      return two_adic_valuation(n) + 1;
    case ConstructionKind::liminf_s_limsup_inf: {
      // Fill m = s-1 ordered slots with 1 or a prime of n, prime p used at most
      // e_p times; B_1 = N absorbs the cofactor. ways[u] counts fillings that
      // place u primes.
      const unsigned m = static_cast<unsigned>(c.param - 1);
      std::vector<std::uint64_t> ways(m + 1, 0);
      ways[0] = 1;
      for (const auto& pp : factor(n)) {
        std::vector<std::uint64_t> next(m + 1, 0);
        for (unsigned used = 0; used <= m; ++used) {
          if (!ways[used]) continue;
          for (unsigned take = 0; take <= pp.exponent && used + take <= m; ++take)
            next[used + take] += ways[used] * binomial(m - used, take);
        }
        ways.swap(next);
      }
      std::uint64_t total = 0;
      for (auto w : ways) total += w;
      return total;
    }
  }
  return 0;
}

bool VerifyReport::passed() const {
  if (mismatches) return false;
  for (const auto& b : bounds)
    if (b.violations) return false;
  if (!evidence_label.empty() && !evidence_strictly_increasing) return false;
  return true;
}

VerifyReport verify(const NamedConstruction& c, std::uint64_t scan_bound, unsigned threads) {
  if (scan_bound < 2) throw Error(Errc::invalid_argument, "scan bound must be >= 2");
  VerifyReport r;
  r.construction = c.name();
  r.claimed = c.claimed;
  r.scan_bound = scan_bound;

  const auto counts = scan_counts(c.system, 1, scan_bound, threads);
  r.rows.reserve(counts.size());
  for (const auto& [n, brute] : counts) {
    const std::uint64_t closed = closed_form_count(c, n);
    r.rows.push_back({n, closed, brute, closed == brute});
    if (closed != brute) ++r.mismatches;
  }

  r.window = {2, scan_bound, 0, 0, 0, 0};
  for (std::size_t i = 1; i < counts.size(); ++i) {
    const auto [n, g] = counts[i];
    if (i == 1 || g < r.window.min_count) r.window.min_count = g, r.window.argmin = n;
    if (i == 1 || g > r.window.max_count) r.window.max_count = g, r.window.argmax = n;
  }

  auto g = [&](std::uint64_t n) { return count_system_reps(c.system, n, {0, {}}).count; };
  auto add_check = [&](BoundCheck b) { r.bounds.push_back(std::move(b)); };

  {
    // Every part contains 1, so a prime has at most h representations.
    BoundCheck cap{"g(p) <= h for primes p <= " + std::to_string(scan_bound)};
    for (const auto& [n, brute] : counts) {
      if (!is_prime(n)) continue;
      ++cap.checked;
      if (brute > c.h && cap.violations++ == 0) cap.first_violation = n;
    }
    add_check(cap);
  }

  if (c.kind == ConstructionKind::liminf_s_limsup_inf) {
    BoundCheck at_primes{"g(p) = s for the first " + std::to_string(kPrimeChecks) + " primes"};
    for (unsigned i = 1; i <= kPrimeChecks; ++i) {
      const auto p = nth_prime(i);
      ++at_primes.checked;
      if (g(p) != c.param && at_primes.violations++ == 0) at_primes.first_violation = p;
    }
    add_check(at_primes);

    BoundCheck floor_s{"g(n) >= s for 2 <= n <= " + std::to_string(scan_bound)};
    BoundCheck floor_omega{"g(n) >= omega(n) for 1 <= n <= " + std::to_string(scan_bound)};
    for (const auto& [n, brute] : counts) {
      if (n >= 2) {
        ++floor_s.checked;
        if (brute < c.param && floor_s.violations++ == 0) floor_s.first_violation = n;
      }
      ++floor_omega.checked;
      if (brute < omega(n) && floor_omega.violations++ == 0) floor_omega.first_violation = n;
    }
    add_check(floor_s);
    add_check(floor_omega);

    r.evidence_label = "EVIDENCE ONLY: g(primorial_k) for k = 1..15; a growing sequence, not a computed limsup";
    for (unsigned k = 1; k <= 15; ++k) {
      const auto n = primorial(k);
      r.evidence.push_back({n, g(n)});
    }
  } else if (c.kind == ConstructionKind::liminf_one_limsup_inf) {
    r.evidence_label = "EVIDENCE ONLY: g(2^j) for j = 0..62; a growing sequence, not a computed limsup";
    for (unsigned j = 0; j <= 62; ++j) {
      const std::uint64_t n = 1ULL << j;
      r.evidence.push_back({n, g(n)});
    }
  }
  r.evidence_strictly_increasing =
      !r.evidence.empty() && std::adjacent_find(r.evidence.begin(), r.evidence.end(), [](const auto& a, const auto& b) {
                               return b.count <= a.count;
                             }) == r.evidence.end();
  return r;
}

std::vector<MhRow> mh_table(unsigned h, std::uint64_t t_cutoff) {
  require_order(h);
  std::vector<MhRow> rows;
  for (std::uint64_t t = 1; t <= t_cutoff; ++t) {
    auto c = t == 1 ? build_fundamental(h) : build_liminf_one_limsup_t(h, t);
    rows.push_back({1, t, c.shorthand()});
  }
  rows.push_back({1, std::nullopt, build_liminf_one_limsup_inf(h).shorthand()});
  for (std::uint64_t s = 2; s <= h; ++s) rows.push_back({s, std::nullopt, build_liminf_s_limsup_inf(h, s).shorthand()});
  return rows;
}

}  // namespace mulrep
