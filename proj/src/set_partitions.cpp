#include "mulrep/set_partitions.hpp"

#include <algorithm>
#include <limits>

#include "mulrep/arith.hpp"
#include "mulrep/checked.hpp"
#include "mulrep/error.hpp"
#include "mulrep/repcount.hpp"
#include "mulrep/squarefree_map.hpp"

namespace mulrep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

class CoverCounter {
 public:
  CoverCounter(std::size_t n, std::vector<std::vector<char>> member)
      : full_((1ULL << n) - 1), member_(std::move(member)), memo_(member_.size()) {
    for (std::size_t level = 1; level + 1 < member_.size(); ++level) memo_[level].assign(1ULL << n, kUnset);
  }

  std::uint64_t run() { return count(0, full_); }

 private:
  std::uint64_t count(std::size_t level, std::uint64_t mask) {
    if (level + 1 == member_.size()) return member_[level][mask] ? 1 : 0;
    if (level > 0 && memo_[level][mask] != kUnset) return memo_[level][mask];
    std::uint64_t total = 0;
    // All submasks of mask, including 0 and mask itself.
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      if (member_[level][sub]) total = checked_add(total, count(level + 1, mask ^ sub));
      if (sub == 0) break;
    }
    if (level > 0) memo_[level][mask] = total;
    return total;
  }

  std::uint64_t full_;
  std::vector<std::vector<char>> member_;
  std::vector<std::vector<std::uint64_t>> memo_;
};

}  // namespace

FamilyDescription FamilyDescription::explicit_members(std::vector<std::vector<std::uint64_t>> members) {
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
      throw Error(Errc::invalid_argument, "family member has a repeated element");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return FamilyDescription(Explicit{std::move(members)});
}

FamilyDescription FamilyDescription::by_cardinality(std::vector<unsigned> sizes) {
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return FamilyDescription(ByCardinality{std::move(sizes)});
}

FamilyDescription FamilyDescription::image_of_set(SetDescription set,
                                                  std::optional<std::vector<std::uint64_t>> universe) {
  if (universe) {
    std::sort(universe->begin(), universe->end());
    universe->erase(std::unique(universe->begin(), universe->end()), universe->end());
    for (auto p : *universe)
      if (!is_prime(p)) throw Error(Errc::invalid_argument, "universe element " + std::to_string(p) + " is not prime");
  }
  return FamilyDescription(ImageOfSet{std::move(set), std::move(universe)});
}

bool FamilyDescription::contains(std::span<const std::uint64_t> subset) const {
  return std::visit(
      overloaded{
          [&](const Explicit& m) {
            std::vector<std::uint64_t> key(subset.begin(), subset.end());
            return std::binary_search(m.members.begin(), m.members.end(), key);
          },
          [&](const ByCardinality& m) {
            return std::binary_search(m.sizes.begin(), m.sizes.end(), static_cast<unsigned>(subset.size()));
          },
          [&](const ImageOfSet& m) {
            Factorization f;
            std::uint64_t product = 1;
            for (auto p : subset) {
              if (m.universe && !std::binary_search(m.universe->begin(), m.universe->end(), p)) return false;
              if (!is_prime(p) || !mul_fits(product, p, product)) return false;
              f.push_back({p, 1});
            }
            return m.set.contains_factored(product, f);
          },
      },
      mode_);
}

std::string FamilyDescription::to_string() const {
  return std::visit(overloaded{
                        [](const Explicit& m) {
                          std::string s = "Explicit(";
                          for (std::size_t i = 0; i < m.members.size(); ++i) {
                            if (i) s += ",";
                            s += "Set(" + join(m.members[i]) + ")";
                          }
                          return s + ")";
                        },
                        [](const ByCardinality& m) {
                          std::string s = "ByCardinality(";
                          for (std::size_t i = 0; i < m.sizes.size(); ++i) {
                            if (i) s += ",";
                            s += std::to_string(m.sizes[i]);
                          }
                          return s + ")";
                        },
                        [](const ImageOfSet& m) {
                          std::string s = "ImageOfSet(" + m.set.to_string();
                          if (m.universe) s += ",universe=Set(" + join(*m.universe) + ")";
                          return s + ")";
                        },
                    },
                    mode_);
}

std::uint64_t count_ordered_covers(std::span<const std::uint64_t> elements, std::span<const FamilyDescription> families,
                                   std::uint64_t assignment_cap) {
  const std::size_t h = families.size();
  if (h < 2) throw Error(Errc::invalid_argument, "cover counting needs h >= 2 families");
  std::vector<std::uint64_t> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::invalid_argument, "the covered set has a repeated element");
  const std::size_t n = sorted.size();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (!mul_fits(assignments, h, assignments) || assignments > assignment_cap)
      throw Error(Errc::resource_limit, "h^|S| exceeds the cover-counting cap of " + std::to_string(assignment_cap));

  std::vector<std::vector<char>> member(h, std::vector<char>(1ULL << n));
  std::vector<std::uint64_t> block;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    block.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) block.push_back(sorted[i]);
    for (std::size_t f = 0; f < h; ++f) member[f][mask] = families[f].contains(block) ? 1 : 0;
  }
  return CoverCounter(n, std::move(member)).run();
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw Error(Errc::overflow, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t multinomial(unsigned n, std::span<const unsigned> ks) {
  std::uint64_t sum = 0;
  for (auto k : ks) sum += k;
  if (sum != n) throw Error(Errc::invalid_argument, "multinomial parts must sum to n");
  std::uint64_t result = 1;
  unsigned placed = 0;
  for (auto k : ks) {
    placed += k;
    result = checked_mul(result, binomial(placed, k));
  }
  return result;
}

std::vector<FamilyDescription> image_families(const MultiplicativeSystem& system,
                                              std::optional<std::vector<std::uint64_t>> universe) {
  std::vector<FamilyDescription> out;
  for (const auto& part : system.parts()) out.push_back(FamilyDescription::image_of_set(part, universe));
  return out;
}

CorrespondenceResult verify_correspondence(const MultiplicativeSystem& system, std::uint64_t q,
                                           std::span<const std::uint64_t> universe) {
  const PrimeSet s = phi(q);
  std::vector<std::uint64_t> u(universe.begin(), universe.end());
  std::sort(u.begin(), u.end());
  for (auto p : s.primes())
    if (!std::binary_search(u.begin(), u.end(), p))
      throw Error(Errc::invalid_argument, "phi(q) is not contained in the prime universe");
  CorrespondenceResult r;
  r.system_count = count_system_reps(system, q, {0, {}}).count;
  const auto families = image_families(system, std::move(u));
  r.cover_count = count_ordered_covers(s.primes(), families);
  r.equal = r.system_count == r.cover_count;
  return r;
}

CorrespondenceResult verify_correspondence(const MultiplicativeSystem& system, std::uint64_t q) {
  const PrimeSet s = phi(q);
  return verify_correspondence(system, q, s.primes());
}

}  // namespace mulrep
