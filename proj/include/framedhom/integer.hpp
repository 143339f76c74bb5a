#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

// Eigen needs NumTraits for the GMP integer scalar. Precision-related members
// are zero: every comparison in this library is exact.
namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace framedhom {

using Integer = mpz_class;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;

// Mod-2 data is held in plain int matrices with entries in {0, 1}.
using Mod2Vector = Eigen::VectorXi;
using Mod2Matrix = Eigen::MatrixXi;

inline int mod2(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; }
inline int mod2(long v) { return static_cast<int>(v & 1L); }
inline int mod2(int v) { return v & 1; }

/// Entrywise reduction into {0, 1}; works for any integer scalar.
template <typename Derived>
Eigen::MatrixXi reduce_mod2(const Eigen::MatrixBase<Derived>& m) {
  Eigen::MatrixXi out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mod2(m(i, j));
  return out;
}

template <typename Derived>
Mod2Vector reduce_mod2_vec(const Eigen::MatrixBase<Derived>& v) {
  Mod2Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = mod2(v(i));
  return out;
}

/// Lift an int matrix (e.g. a mod-2 representative) to exact integers.
template <typename Derived>
IntMatrix to_integer(const Eigen::MatrixBase<Derived>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(static_cast<long>(m(i, j)));
  return out;
}

Integer gcd_of(const IntVector& v);
bool is_primitive(const IntVector& v);

/// Floor division, exact for negative operands.
Integer floor_div(const Integer& a, const Integer& b);

std::string to_string(const Integer& v);

}  // namespace framedhom
