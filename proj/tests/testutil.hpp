#pragma once

#include "boxchrom/error.hpp"
#include "doctest.h"

// Checks that `expr` throws bxc::Error with the given code.
#define CHECK_ERROR(expr, wanted)                     \
  do {                                                \
    bool hit_ = false;                                \
    try {                                             \
      expr;                                           \
    } catch (const bxc::Error& e_) {                  \
      hit_ = true;                                    \
      CHECK(e_.code() == bxc::ErrorCode::wanted);     \
    }                                                 \
    CHECK_MESSAGE(hit_, "expected " #wanted " from " #expr); \
  } while (0)
