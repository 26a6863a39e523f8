#pragma once

#include <Eigen/Core>

#include "nonrat/quadext.hpp"
#include "nonrat/ratfunc.hpp"
#include "nonrat/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<nonrat::Rational> : GenericNumTraits<nonrat::Rational> {
  typedef nonrat::Rational Real;
  typedef nonrat::Rational NonInteger;
  typedef nonrat::Rational Nested;
  typedef nonrat::Rational Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};

template <>
struct NumTraits<nonrat::QuadExt> : GenericNumTraits<nonrat::QuadExt> {
  typedef nonrat::QuadExt Real;
  typedef nonrat::QuadExt NonInteger;
  typedef nonrat::QuadExt Nested;
  typedef nonrat::QuadExt Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 120,
    MulCost = 200
  };
};

template <>
struct NumTraits<nonrat::RatFunc> : GenericNumTraits<nonrat::RatFunc> {
  typedef nonrat::RatFunc Real;
  typedef nonrat::RatFunc NonInteger;
  typedef nonrat::RatFunc Nested;
  typedef nonrat::RatFunc Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 400,
    MulCost = 800
  };
};

}  // namespace Eigen

namespace nonrat {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;
template <class F>
using Vec3 = Eigen::Matrix<F, 3, 1>;
template <class F>
using Vec4 = Eigen::Matrix<F, 4, 1>;

using MatQ = Mat<Rational>;
using MatE = Mat<QuadExt>;
using MatR = Mat<RatFunc>;

/// Exact sign for ordered scalar types; RatFunc is not ordered and has no
/// overload on purpose.
inline int exact_sign(const Rational& x) { return x.sign(); }
inline int exact_sign(const QuadExt& x) { return x.sign(); }

template <class F>
bool is_exact_zero(const F& x) {
  return x == F(0);
}

}  // namespace nonrat
