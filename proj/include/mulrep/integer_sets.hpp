#ifndef MULREP_INTEGER_SETS_HPP
#define MULREP_INTEGER_SETS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mulrep/arith.hpp"

namespace mulrep {

/// A set of primes. IndexResidue(h, r) holds the primes p_j (p_1 = 2) with
/// j = r (mod h); for a fixed h the h residue classes partition the primes.
class PrimeClass {
 public:
  struct IndexResidue {
    std::uint64_t modulus;
    std::uint64_t residue;
  };
  struct ExplicitList {
    std::vector<std::uint64_t> primes;  // sorted, distinct
  };
  struct Complement {
    std::shared_ptr<const PrimeClass> inner;
    std::uint64_t universe_bound;  // complement taken within primes <= bound
  };
  using Mode = std::variant<IndexResidue, ExplicitList, Complement>;

  static PrimeClass index_residue(std::uint64_t modulus, std::uint64_t residue);
  static PrimeClass explicit_list(std::vector<std::uint64_t> primes);
  static PrimeClass complement(PrimeClass inner, std::uint64_t universe_bound);

  /// p must be prime.
  bool contains_prime(std::uint64_t p) const;

  const Mode& mode() const { return mode_; }
  std::string to_string() const;

 private:
  explicit PrimeClass(Mode m) : mode_(std::move(m)) {}
  Mode mode_;
};

class SetDescription;

namespace set_kind {
struct AllNaturals {};
struct Singleton {
  std::vector<std::uint64_t> values;  // sorted, distinct; may contain 0
};
struct PowersOf {
  std::uint64_t base;
  std::uint64_t lo;
  std::optional<std::uint64_t> hi;  // nullopt: unbounded
};
struct Primes {};
struct PrimesWithOne {};
struct Squarefree {};
struct SmoothOver {
  PrimeClass primes;
};
struct Residue {
  std::uint64_t modulus;
  std::uint64_t residue;
};
struct Union {
  std::vector<SetDescription> parts;
};
struct Intersection {
  std::vector<SetDescription> parts;
};
}  // namespace set_kind

inline constexpr std::size_t kDefaultEnumerateCap = 10'000'000;

/// Symbolic description of a set of positive integers with decidable
/// membership. Immutable; copies share the underlying tree.
class SetDescription {
 public:
  using Kind = std::variant<set_kind::AllNaturals, set_kind::Singleton, set_kind::PowersOf, set_kind::Primes,
                            set_kind::PrimesWithOne, set_kind::Squarefree, set_kind::SmoothOver,
                            set_kind::Residue, set_kind::Union, set_kind::Intersection>;

  static SetDescription all_naturals();
  static SetDescription singleton(std::vector<std::uint64_t> values);
  static SetDescription powers_of(std::uint64_t base, std::uint64_t lo, std::optional<std::uint64_t> hi);
  static SetDescription primes();
  static SetDescription primes_with_one();
  static SetDescription squarefree();
  static SetDescription smooth_over(PrimeClass primes);
  static SetDescription residue(std::uint64_t modulus, std::uint64_t residue);
  static SetDescription set_union(std::vector<SetDescription> parts);
  static SetDescription set_intersection(std::vector<SetDescription> parts);

  /// Membership. 0 is a member only when listed in a Singleton.
  bool contains(std::uint64_t n, const FactorLimits& limits = {}) const;

  /// Membership when the factorization of n is already known.
  bool contains_factored(std::uint64_t n, const Factorization& f) const;

  /// Members in [1, n_max], ascending. Throws Errc::resource_limit when more
  /// than `cap` members would be returned.
  std::vector<std::uint64_t> enumerate_up_to(std::uint64_t n_max, std::size_t cap = kDefaultEnumerateCap) const;

  const Kind& kind() const { return *kind_; }

  /// Canonical text in the config grammar; parse_set(to_string()) round-trips.
  std::string to_string() const;

 private:
  explicit SetDescription(Kind k) : kind_(std::make_shared<const Kind>(std::move(k))) {}
  bool needs_factorization() const;
  std::shared_ptr<const Kind> kind_;
};

/// Ordered h-tuple of sets, h >= 2. A basis of order h is h equal parts.
class MultiplicativeSystem {
 public:
  explicit MultiplicativeSystem(std::vector<SetDescription> parts);
  static MultiplicativeSystem basis(const SetDescription& set, unsigned h);

  unsigned order() const { return static_cast<unsigned>(parts_.size()); }
  const std::vector<SetDescription>& parts() const { return parts_; }
  const SetDescription& part(std::size_t i) const { return parts_.at(i); }

  std::string to_string() const;

 private:
  std::vector<SetDescription> parts_;
};

}  // namespace mulrep

#endif  // MULREP_INTEGER_SETS_HPP
