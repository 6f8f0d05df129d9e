#ifndef MULREP_CHECKED_HPP
#define MULREP_CHECKED_HPP

#include <cstdint>

#include "mulrep/error.hpp"

namespace mulrep {

[[nodiscard]] inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in addition");
  return r;
}

[[nodiscard]] inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in multiplication");
  return r;
}

// Like checked_mul but reports overflow through the return value.
[[nodiscard]] inline bool mul_fits(std::uint64_t a, std::uint64_t b, std::uint64_t& out) noexcept {
  return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace mulrep

#endif  // MULREP_CHECKED_HPP
