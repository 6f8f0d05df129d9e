#ifndef MULREP_CONFIG_HPP
#define MULREP_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mulrep/catalog.hpp"
#include "mulrep/integer_sets.hpp"
#include "mulrep/set_partitions.hpp"

namespace mulrep {

/// Generic term of the config grammar:
///
///   term  := NAME [ '(' [ arg { ',' arg } ] ')' ] | NUMBER | 'inf'
///   arg   := [ NAME '=' ] term
///
/// Whitespace and '#' comments are ignored.
struct Term {
  std::string head;                 // name, or the literal text of a number / inf
  bool is_number = false;
  std::uint64_t number = 0;
  std::optional<std::string> key;  // set when the term is a `key=value` argument
  std::vector<Term> args;
};

Term parse_term(const std::string& text);

/// Set grammar, one name per kind:
///   AllNaturals | Singleton(v, ...) | PowersOf(base=b, lo=a, hi=c|inf) | Primes
///   | PrimesWithOne | Squarefree | SmoothOver(<prime class>) | Residue(modulus=m, residue=r)
///   | Union(<set>, ...) | Intersection(<set>, ...)
/// Prime classes:
///   IndexResidue(modulus=h, residue=r) | ExplicitList(p, ...) | Complement(<class>, universe=N)
SetDescription parse_set(const std::string& text);
PrimeClass parse_prime_class(const std::string& text);

/// "fundamental:h=2", "one-t:h=2,t=3", "one-inf:h=2", "s-inf:h=3,s=2", or the
/// long forms Fundamental(h=2), LiminfOneLimsupT(h=2,t=3), LiminfOneLimsupInf(h=2),
/// LiminfSLimsupInf(h=3,s=2). nullopt when the text names no construction.
std::optional<NamedConstruction> parse_construction(const std::string& text);

/// A construction (either form above), System(<set>, <set>, ...), or
/// Basis(<set>, h=2).
MultiplicativeSystem parse_system(const std::string& text);

/// Explicit(Set(a, b), Set(), ...) | ByCardinality(k, ...) |
/// ImageOfSet(<set> [, universe=Set(p, ...)] [, upto=N])
FamilyDescription parse_family(const std::string& text);

/// Comma-separated unsigned integers, e.g. "2,1,1".
std::vector<std::uint64_t> parse_number_list(const std::string& text);

}  // namespace mulrep

#endif  // MULREP_CONFIG_HPP
