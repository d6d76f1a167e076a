#pragma once

#include <Eigen/Core>

#include "lmov/ratfunc.hpp"

namespace Eigen {

// Exact field scalar: no epsilon, no vectorisation.
template <>
struct NumTraits<lmov::RatFunc> : GenericNumTraits<lmov::RatFunc> {
  using Real = lmov::RatFunc;
  using NonInteger = lmov::RatFunc;
  using Nested = lmov::RatFunc;
  using Literal = lmov::RatFunc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 200
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lmov {

using RatMatrix = Eigen::Matrix<RatFunc, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<RatFunc, Eigen::Dynamic, 1>;

}  // namespace lmov
