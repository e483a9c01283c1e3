#pragma once

#include <doctest.h>

#include "trigpoly/errors.hpp"

// Checks that `expr` throws trigpoly::Error with the given code.
#define CHECK_THROWS_CODE(expr, errc)                          \
  do {                                                         \
    bool thrown_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const trigpoly::Error& e) {                       \
      thrown_ = true;                                          \
      CHECK_MESSAGE(e.code() == (errc), "code: ", trigpoly::to_string(e.code())); \
    }                                                          \
    CHECK_MESSAGE(thrown_, "expected trigpoly::Error from " #expr); \
  } while (false)
