#ifndef MULREP_SET_PARTITIONS_HPP
#define MULREP_SET_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mulrep/integer_sets.hpp"

namespace mulrep {

/// A set of finite subsets of a universe. Subsets are passed sorted ascending.
class FamilyDescription {
 public:
  struct Explicit {
    std::vector<std::vector<std::uint64_t>> members;  // each sorted; list sorted
  };
  struct ByCardinality {
    std::vector<unsigned> sizes;  // sorted, distinct
  };
  // {phi(b) : b in Q and b in set}, optionally restricted to subsets of a prime universe.
  struct ImageOfSet {
    SetDescription set;
    std::optional<std::vector<std::uint64_t>> universe;
  };
  using Mode = std::variant<Explicit, ByCardinality, ImageOfSet>;

  static FamilyDescription explicit_members(std::vector<std::vector<std::uint64_t>> members);
  static FamilyDescription by_cardinality(std::vector<unsigned> sizes);
  static FamilyDescription image_of_set(SetDescription set,
                                        std::optional<std::vector<std::uint64_t>> universe = std::nullopt);

  bool contains(std::span<const std::uint64_t> subset) const;

  const Mode& mode() const { return mode_; }
  std::string to_string() const;

 private:
  explicit FamilyDescription(Mode m) : mode_(std::move(m)) {}
  Mode mode_;
};

/// Cover counting is refused when h^|S| would exceed this many assignments.
inline constexpr std::uint64_t kDefaultCoverAssignmentCap = 1594323;  // 3^13

/// Number of ordered tuples (A_1, ..., A_h), A_i in families[i], pairwise
/// disjoint with union S. Elements of S must be distinct.
std::uint64_t count_ordered_covers(std::span<const std::uint64_t> elements, std::span<const FamilyDescription> families,
                                   std::uint64_t assignment_cap = kDefaultCoverAssignmentCap);

/// n! / (k_1! ... k_h!), exact; throws overflow past 64 bits.
std::uint64_t multinomial(unsigned n, std::span<const unsigned> ks);

std::uint64_t binomial(unsigned n, unsigned k);

/// ImageOfSet family for each part of the system.
std::vector<FamilyDescription> image_families(const MultiplicativeSystem& system,
                                              std::optional<std::vector<std::uint64_t>> universe = std::nullopt);

struct CorrespondenceResult {
  std::uint64_t system_count = 0;
  std::uint64_t cover_count = 0;
  bool equal = false;
};

/// g_B(q) next to the number of ordered covers of phi(q) by the image
/// families. The two must agree for squarefree q.
CorrespondenceResult verify_correspondence(const MultiplicativeSystem& system, std::uint64_t q,
                                           std::span<const std::uint64_t> universe);

/// Same, with the universe taken to be phi(q) itself.
CorrespondenceResult verify_correspondence(const MultiplicativeSystem& system, std::uint64_t q);

}  // namespace mulrep

#endif  // MULREP_SET_PARTITIONS_HPP
