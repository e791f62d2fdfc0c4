#pragma once

#include "doctest.h"
#include "ndsig/errors.hpp"

#define CHECK_ERROR_KIND(expr, expected)                              \
  do {                                                                \
    bool thrown_ = false;                                             \
    try {                                                             \
      (void)(expr);                                                   \
    } catch (const ndsig::Error& e_) {                                \
      thrown_ = true;                                                 \
      INFO("message: " << e_.what());                                 \
      CHECK(ndsig::to_string(e_.kind()) == ndsig::to_string(expected)); \
    }                                                                 \
    CHECK_MESSAGE(thrown_, "expected " << ndsig::to_string(expected)); \
  } while (false)
