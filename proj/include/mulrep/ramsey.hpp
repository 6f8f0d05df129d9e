#ifndef MULREP_RAMSEY_HPP
#define MULREP_RAMSEY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace mulrep {

inline constexpr std::size_t kMaxGround = 64;
inline constexpr unsigned kMaxColoringK = 4;

/// Total map from the k-subsets of a finite ordered ground set to colors
/// 0..max_color. Subsets are addressed either by element values or by
/// positions (indices into the ground list).
class Coloring {
 public:
  using ColorFn = std::function<std::uint32_t(std::span<const std::uint64_t>)>;

  /// Calls fn once per k-subset (sorted element values).
  static Coloring from_function(std::vector<std::uint64_t> ground, unsigned k, const ColorFn& fn);

  /// Colors indexed by colex rank of position subsets.
  static Coloring from_ranked(std::vector<std::uint64_t> ground, unsigned k, std::vector<std::uint32_t> colors,
                              std::optional<std::uint32_t> max_color = std::nullopt);

  static Coloring random(std::size_t ground_size, unsigned k, std::uint32_t num_colors, std::mt19937_64& rng);

  const std::vector<std::uint64_t>& ground() const { return ground_; }
  unsigned k() const { return k_; }
  std::uint32_t max_color() const { return max_color_; }
  std::size_t subset_count() const { return colors_.size(); }

  /// positions must be strictly increasing and have size k.
  std::uint32_t color_at(std::span<const unsigned> positions) const;
  /// Element values in any order; throws invalid_argument if not in the ground set.
  std::uint32_t color_of(std::span<const std::uint64_t> elements) const;

  std::vector<unsigned> positions_of(std::span<const std::uint64_t> elements) const;

  const std::vector<std::uint32_t>& ranked_colors() const { return colors_; }

 private:
  Coloring() = default;
  std::vector<std::uint64_t> ground_;
  unsigned k_ = 0;
  std::vector<std::uint32_t> colors_;
  std::uint32_t max_color_ = 0;
};

/// Colex rank of a strictly increasing position list.
std::uint64_t colex_rank(std::span<const unsigned> positions);

/// Parses the interchange format:
///   ground: 1 2 3 4 5
///   k: 2
///   1 2 : 0
///   ...
/// One line per k-subset, every subset exactly once. '#' starts a comment.
Coloring parse_coloring(const std::string& text);
std::string format_coloring(const Coloring& c);

struct RamseyBudget {
  std::uint64_t max_nodes = 50'000'000;
};

/// Lexicographically least size-m subset whose k-subsets all share a color,
/// or nullopt when none exists. Throws budget_exhausted when the node budget
/// runs out first.
std::optional<std::vector<std::uint64_t>> find_homogeneous(const Coloring& c, std::size_t m,
                                                           const RamseyBudget& budget = {});

/// Independent checker: enumerates every k-subset of `subset`.
bool is_homogeneous(const Coloring& c, std::span<const std::uint64_t> subset);

struct HomogeneousChain {
  std::vector<std::vector<std::uint64_t>> subsets;  // X_0 ⊇ X_1 ⊇ ... ⊇ X_K
  std::vector<std::uint32_t> epsilons;              // color of [X_k]^k
  std::vector<std::vector<std::uint32_t>> epsilon_tuples;  // doubly iterated only
};

/// colorings[k] colors the k-subsets of one common ground set. X_0 is the
/// whole ground; for k >= 1, X_k is a size-sizes[k] subset of X_{k-1} with
/// [X_k]^k monochromatic. Backtracks across levels, so nullopt means no
/// chain of the requested sizes exists.
std::optional<HomogeneousChain> iterated_chain(std::span<const Coloring> colorings, std::span<const std::size_t> sizes,
                                               const RamseyBudget& budget = {});

/// Checks containment and [X_n]^k ⊆ C^k_{eps_k} for every k <= n.
bool verify_chain(std::span<const Coloring> colorings, const HomogeneousChain& chain);

/// Product coloring: each subset gets the tuple of its factor colors, encoded
/// row-major with the first factor slowest.
Coloring product_coloring(std::span<const Coloring> factors);

/// Inverse of the product encoding for the given factor color counts.
std::vector<std::uint32_t> decode_product_color(std::uint32_t index, std::span<const std::uint32_t> radices);

/// per_level[k] holds the factor colorings for level k (same ground, same k).
std::optional<HomogeneousChain> doubly_iterated_chain(std::span<const std::vector<Coloring>> per_level,
                                                      std::span<const std::size_t> sizes,
                                                      const RamseyBudget& budget = {});

struct RandomTrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t found = 0;             // trials where a homogeneous m-subset exists
  std::uint64_t checker_failures = 0;  // emitted subsets rejected by is_homogeneous
};

/// Runs find_homogeneous on `trials` random colorings drawn from mt19937_64(seed).
RandomTrialSummary random_trials(std::size_t ground_size, unsigned k, std::uint32_t num_colors, std::size_t m,
                                 std::uint64_t trials, std::uint64_t seed, const RamseyBudget& budget = {});

}  // namespace mulrep

#endif  // MULREP_RAMSEY_HPP
