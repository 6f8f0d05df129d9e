#ifndef MULREP_TESTS_ERRC_CHECK_HPP
#define MULREP_TESTS_ERRC_CHECK_HPP

#include <doctest.h>

#include "mulrep/error.hpp"

// Checks that expr throws mulrep::Error carrying the given code.
#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const mulrep::Error& e_) {                          \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), "what: " << e_.what()); \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected an exception: " #expr);     \
  } while (0)

#endif
