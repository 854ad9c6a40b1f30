#pragma once

#include <doctest.h>

#include "walsh/error.hpp"

// Asserts that `expr` throws walsh::Error with the given code.
#define CHECK_ERRC(expr, errc)                                  \
  do {                                                          \
    bool thrown_ = false;                                       \
    try {                                                       \
      (void)(expr);                                             \
    } catch (const walsh::Error& e_) {                          \
      thrown_ = true;                                           \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());            \
    }                                                           \
    CHECK_MESSAGE(thrown_, "expected walsh::Error from " #expr); \
  } while (false)
