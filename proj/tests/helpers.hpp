#pragma once

#include "doctest.h"
#include "tda/error.hpp"

namespace tda::test {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tda::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace tda::test
