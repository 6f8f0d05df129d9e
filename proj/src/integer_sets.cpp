#include "mulrep/integer_sets.hpp"

#include <algorithm>
#include <cmath>

#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"

namespace mulrep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

class CappedList {
 public:
  explicit CappedList(std::size_t cap) : cap_(cap) {}
  void push(std::uint64_t v) {
    if (values_.size() >= cap_)
      throw Error(Errc::resource_limit, "enumeration exceeds element cap of " + std::to_string(cap_));
    values_.push_back(v);
  }
  std::vector<std::uint64_t> take() { return std::move(values_); }

 private:
  std::size_t cap_;
  std::vector<std::uint64_t> values_;
};

}  // namespace

// ---- PrimeClass -------------------------------------------------------------

PrimeClass PrimeClass::index_residue(std::uint64_t modulus, std::uint64_t residue) {
  if (modulus < 2) throw Error(Errc::invalid_argument, "IndexResidue modulus must be >= 2");
  if (residue >= modulus) throw Error(Errc::invalid_argument, "IndexResidue residue must be < modulus");
  return PrimeClass(IndexResidue{modulus, residue});
}

PrimeClass PrimeClass::explicit_list(std::vector<std::uint64_t> primes) {
  sort_unique(primes);
  for (auto p : primes)
    if (!is_prime(p)) throw Error(Errc::invalid_argument, "ExplicitList entry " + std::to_string(p) + " is not prime");
  return PrimeClass(ExplicitList{std::move(primes)});
}

PrimeClass PrimeClass::complement(PrimeClass inner, std::uint64_t universe_bound) {
  return PrimeClass(Complement{std::make_shared<const PrimeClass>(std::move(inner)), universe_bound});
}

bool PrimeClass::contains_prime(std::uint64_t p) const {
  return std::visit(overloaded{
                        [&](const IndexResidue& m) { return prime_pi(p) % m.modulus == m.residue; },
                        [&](const ExplicitList& m) { return std::binary_search(m.primes.begin(), m.primes.end(), p); },
                        [&](const Complement& m) { return p <= m.universe_bound && !m.inner->contains_prime(p); },
                    },
                    mode_);
}

std::string PrimeClass::to_string() const {
  return std::visit(overloaded{
                        [](const IndexResidue& m) {
                          return "IndexResidue(modulus=" + std::to_string(m.modulus) +
                                 ",residue=" + std::to_string(m.residue) + ")";
                        },
                        [](const ExplicitList& m) { return "ExplicitList(" + join_numbers(m.primes) + ")"; },
                        [](const Complement& m) {
                          return "Complement(" + m.inner->to_string() + ",universe=" +
                                 std::to_string(m.universe_bound) + ")";
                        },
                    },
                    mode_);
}

// ---- SetDescription ---------------------------------------------------------

SetDescription SetDescription::all_naturals() { return SetDescription(set_kind::AllNaturals{}); }

SetDescription SetDescription::singleton(std::vector<std::uint64_t> values) {
  sort_unique(values);
  return SetDescription(set_kind::Singleton{std::move(values)});
}

SetDescription SetDescription::powers_of(std::uint64_t base, std::uint64_t lo, std::optional<std::uint64_t> hi) {
  if (base < 2) throw Error(Errc::invalid_argument, "PowersOf base must be >= 2");
  if (hi && *hi < lo) throw Error(Errc::invalid_argument, "PowersOf exponent range is empty");
  return SetDescription(set_kind::PowersOf{base, lo, hi});
}

SetDescription SetDescription::primes() { return SetDescription(set_kind::Primes{}); }
SetDescription SetDescription::primes_with_one() { return SetDescription(set_kind::PrimesWithOne{}); }
SetDescription SetDescription::squarefree() { return SetDescription(set_kind::Squarefree{}); }

SetDescription SetDescription::smooth_over(PrimeClass primes) {
  return SetDescription(set_kind::SmoothOver{std::move(primes)});
}

SetDescription SetDescription::residue(std::uint64_t modulus, std::uint64_t residue) {
  if (modulus < 1) throw Error(Errc::invalid_argument, "Residue modulus must be >= 1");
  if (residue >= modulus) throw Error(Errc::invalid_argument, "Residue residue must be < modulus");
  return SetDescription(set_kind::Residue{modulus, residue});
}

SetDescription SetDescription::set_union(std::vector<SetDescription> parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "Union needs at least one part");
  return SetDescription(set_kind::Union{std::move(parts)});
}

SetDescription SetDescription::set_intersection(std::vector<SetDescription> parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "Intersection needs at least one part");
  return SetDescription(set_kind::Intersection{std::move(parts)});
}

bool SetDescription::needs_factorization() const {
  using namespace set_kind;
  return std::visit(overloaded{
                        [](const Primes&) { return true; },
                        [](const PrimesWithOne&) { return true; },
                        [](const Squarefree&) { return true; },
                        [](const SmoothOver&) { return true; },
                        [](const Union& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(),
                                             [](const auto& p) { return p.needs_factorization(); });
                        },
                        [](const Intersection& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(),
                                             [](const auto& p) { return p.needs_factorization(); });
                        },
                        [](const auto&) { return false; },
                    },
                    *kind_);
}

bool SetDescription::contains(std::uint64_t n, const FactorLimits& limits) const {
  using namespace set_kind;
  if (n == 0) {
    return std::visit(overloaded{
                          [](const Singleton& s) { return !s.values.empty() && s.values.front() == 0; },
                          [](const Union& u) {
                            return std::any_of(u.parts.begin(), u.parts.end(),
                                               [](const auto& p) { return p.contains(0); });
                          },
                          [](const Intersection& u) {
                            return std::all_of(u.parts.begin(), u.parts.end(),
                                               [](const auto& p) { return p.contains(0); });
                          },
                          [](const auto&) { return false; },
                      },
                      *kind_);
  }
  if (!needs_factorization()) return contains_factored(n, {});
  return contains_factored(n, factor(n, limits));
}

bool SetDescription::contains_factored(std::uint64_t n, const Factorization& f) const {
  using namespace set_kind;
  if (n == 0) return contains(0);
  return std::visit(
      overloaded{
          [](const AllNaturals&) { return true; },
          [&](const Singleton& s) { return std::binary_search(s.values.begin(), s.values.end(), n); },
          [&](const PowersOf& s) {
            std::uint64_t m = n, e = 0;
            while (m % s.base == 0) {
              m /= s.base;
              ++e;
            }
            return m == 1 && e >= s.lo && (!s.hi || e <= *s.hi);
          },
          [&](const Primes&) { return f.size() == 1 && f[0].exponent == 1; },
          [&](const PrimesWithOne&) { return n == 1 || (f.size() == 1 && f[0].exponent == 1); },
          [&](const Squarefree&) {
            return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
          },
          [&](const SmoothOver& s) {
            return std::all_of(f.begin(), f.end(),
                               [&](const PrimePower& pp) { return s.primes.contains_prime(pp.prime); });
          },
          [&](const Residue& s) { return n % s.modulus == s.residue; },
          [&](const Union& u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const auto& p) { return p.contains_factored(n, f); });
          },
          [&](const Intersection& u) {
            return std::all_of(u.parts.begin(), u.parts.end(),
                               [&](const auto& p) { return p.contains_factored(n, f); });
          },
      },
      *kind_);
}

std::vector<std::uint64_t> SetDescription::enumerate_up_to(std::uint64_t n_max, std::size_t cap) const {
  using namespace set_kind;
  if (n_max < 1) throw Error(Errc::invalid_argument, "enumeration bound must be >= 1");
  CappedList out(cap);
  std::visit(
      overloaded{
          [&](const AllNaturals&) {
            if (n_max > cap)
              throw Error(Errc::resource_limit, "enumeration exceeds element cap of " + std::to_string(cap));
            for (std::uint64_t i = 1; i <= n_max; ++i) out.push(i);
          },
          [&](const Singleton& s) {
            for (auto v : s.values)
              if (v >= 1 && v <= n_max) out.push(v);
          },
          [&](const PowersOf& s) {
            std::uint64_t v = 1;
            bool fits = true;
            for (std::uint64_t e = 0; e < s.lo && fits; ++e) fits = mul_fits(v, s.base, v);
            for (std::uint64_t e = s.lo; fits && v <= n_max && (!s.hi || e <= *s.hi); ++e) {
              out.push(v);
              fits = mul_fits(v, s.base, v);
            }
          },
          [&](const Primes&) {
            for (auto p : primes_up_to(n_max)) out.push(p);
          },
          [&](const PrimesWithOne&) {
            out.push(1);
            for (auto p : primes_up_to(n_max)) out.push(p);
          },
          [&](const Squarefree&) {
            // At least half of [1, n] is squarefree, so refuse absurd bounds before allocating.
            if (n_max / 2 > cap)
              throw Error(Errc::resource_limit, "enumeration exceeds element cap of " + std::to_string(cap));
            std::vector<bool> bad(n_max + 1, false);
            for (std::uint64_t p = 2; p * p <= n_max; ++p)
              for (std::uint64_t j = p * p; j <= n_max; j += p * p) bad[j] = true;
            for (std::uint64_t i = 1; i <= n_max; ++i)
              if (!bad[i]) out.push(i);
          },
          [&](const Residue& s) {
            std::uint64_t first = s.residue == 0 ? s.modulus : s.residue;
            for (std::uint64_t v = first; v <= n_max; v += s.modulus) {
              out.push(v);
              if (n_max - v < s.modulus) break;
            }
          },
          [&](const Union& u) {
            std::vector<std::uint64_t> all;
            for (const auto& p : u.parts) {
              auto part = p.enumerate_up_to(n_max, cap);
              all.insert(all.end(), part.begin(), part.end());
            }
            sort_unique(all);
            for (auto v : all) out.push(v);
          },
          [&](const Intersection& u) {
            for (auto v : u.parts.front().enumerate_up_to(n_max, cap)) {
              bool all = std::all_of(u.parts.begin() + 1, u.parts.end(), [&](const auto& p) { return p.contains(v); });
              if (all) out.push(v);
            }
          },
          [&](const SmoothOver&) {
            if (n_max > 64 * static_cast<std::uint64_t>(cap))
              throw Error(Errc::resource_limit, "enumeration bound too large for a filtered scan");
            for (std::uint64_t i = 1; i <= n_max; ++i)
              if (contains(i)) out.push(i);
          },
      },
      *kind_);
  return out.take();
}

std::string SetDescription::to_string() const {
  using namespace set_kind;
  auto join_sets = [](const std::vector<SetDescription>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += parts[i].to_string();
    }
    return s;
  };
  return std::visit(overloaded{
                        [](const AllNaturals&) -> std::string { return "AllNaturals"; },
                        [](const Singleton& s) { return "Singleton(" + join_numbers(s.values) + ")"; },
                        [](const PowersOf& s) {
                          return "PowersOf(base=" + std::to_string(s.base) + ",lo=" + std::to_string(s.lo) +
                                 ",hi=" + (s.hi ? std::to_string(*s.hi) : std::string("inf")) + ")";
                        },
                        [](const Primes&) -> std::string { return "Primes"; },
                        [](const PrimesWithOne&) -> std::string { return "PrimesWithOne"; },
                        [](const Squarefree&) -> std::string { return "Squarefree"; },
                        [](const SmoothOver& s) { return "SmoothOver(" + s.primes.to_string() + ")"; },
                        [](const Residue& s) {
                          return "Residue(modulus=" + std::to_string(s.modulus) +
                                 ",residue=" + std::to_string(s.residue) + ")";
                        },
                        [&](const Union& u) { return "Union(" + join_sets(u.parts) + ")"; },
                        [&](const Intersection& u) { return "Intersection(" + join_sets(u.parts) + ")"; },
                    },
                    *kind_);
}

// ---- MultiplicativeSystem ---------------------------------------------------

MultiplicativeSystem::MultiplicativeSystem(std::vector<SetDescription> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw Error(Errc::invalid_argument, "a multiplicative system needs h >= 2 parts");
}

MultiplicativeSystem MultiplicativeSystem::basis(const SetDescription& set, unsigned h) {
  return MultiplicativeSystem(std::vector<SetDescription>(h, set));
}

std::string MultiplicativeSystem::to_string() const {
  std::string s = "System(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += parts_[i].to_string();
  }
  return s + ")";
}

}  // namespace mulrep
