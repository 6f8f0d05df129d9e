#ifndef MULREP_CATALOG_HPP
#define MULREP_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mulrep/integer_sets.hpp"
#include "mulrep/repcount.hpp"

namespace mulrep {

enum class ConstructionKind {
  fundamental,           // B_i = integers smooth over the i-th index-residue prime class
  liminf_one_limsup_t,   // (N, {2^k : 0 <= k <= t-1}, {1}, ...)
  liminf_one_limsup_inf, // (N, {2^k : k >= 0}, {1}, ...)
  liminf_s_limsup_inf,   // (N, P+1 x (s-1), {1} x (h-s))
};

/// (liminf, limsup) pair; limsup == nullopt stands for infinity.
struct ClaimedPair {
  std::uint64_t s = 1;
  std::optional<std::uint64_t> t;

  friend bool operator==(const ClaimedPair&, const ClaimedPair&) = default;
};

struct NamedConstruction {
  ConstructionKind kind;
  unsigned h;
  std::uint64_t param;  // t for liminf_one_limsup_t, s for liminf_s_limsup_inf, else 0
  MultiplicativeSystem system;
  ClaimedPair claimed;

  /// E.g. "LiminfOneLimsupT(h=2,t=3)".
  std::string name() const;
  /// E.g. "one-t:h=2,t=3".
  std::string shorthand() const;
};

NamedConstruction build_fundamental(unsigned h);
NamedConstruction build_liminf_one_limsup_t(unsigned h, std::uint64_t t);
NamedConstruction build_liminf_one_limsup_inf(unsigned h);
NamedConstruction build_liminf_s_limsup_inf(unsigned h, std::uint64_t s);

/// g(n) for the construction, computed from its closed form rather than by
/// enumeration. For liminf_s_limsup_inf this counts the ordered choices of
/// s-1 factors from P+1 whose product divides n.
std::uint64_t closed_form_count(const NamedConstruction& c, std::uint64_t n);

struct VerifyRow {
  std::uint64_t n;
  std::uint64_t closed_form;
  std::uint64_t brute_force;
  bool match;
};

/// One named lower-bound check run as part of verification.
struct BoundCheck {
  std::string description;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t first_violation = 0;
};

struct EvidencePoint {
  std::uint64_t n;
  std::uint64_t count;
};

struct VerifyReport {
  std::string construction;
  ClaimedPair claimed;
  std::uint64_t scan_bound = 0;
  std::vector<VerifyRow> rows;  // n = 1..scan_bound
  std::uint64_t mismatches = 0;
  WindowStats window;           // over [2, scan_bound]
  std::vector<BoundCheck> bounds;
  std::string evidence_label;   // empty when the claimed limsup is finite
  std::vector<EvidencePoint> evidence;
  bool evidence_strictly_increasing = false;

  bool passed() const;
};

/// Compares closed form with enumeration on every n <= scan_bound and gathers
/// the window and unboundedness evidence. Mismatches are reported, not thrown.
VerifyReport verify(const NamedConstruction& c, std::uint64_t scan_bound, unsigned threads = 0);

struct MhRow {
  std::uint64_t s;
  std::optional<std::uint64_t> t;
  std::string construction;
};

/// Rows (1,1)..(1,T), (1,inf), (2,inf)..(h,inf), each with a witnessing construction.
std::vector<MhRow> mh_table(unsigned h, std::uint64_t t_cutoff);

}  // namespace mulrep

#endif  // MULREP_CATALOG_HPP
