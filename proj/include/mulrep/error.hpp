#ifndef MULREP_ERROR_HPP
#define MULREP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mulrep {

enum class Errc {
  invalid_argument = 1,
  parse,
  overflow,
  resource_limit,
  factorization_limit,
  not_squarefree,
  budget_exhausted,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them 1:1 onto its status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mulrep

#endif  // MULREP_ERROR_HPP
