#pragma once

// Dense exact linear algebra on Eigen containers.
//
// The scalars are GMP integers and rationals.  Eigen is used for storage and
// block access only; the arithmetic kernels below are written against
// Eigen::MatrixBase so they work for any exact ring scalar.

#include "fixdiv/arith.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace fixdiv {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

/// Fraction-free (Bareiss) determinant over an exact integral domain.
///
/// Every intermediate is itself a minor of the input, so all divisions are
/// exact.  Row swaps on a zero pivot track the sign.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  if (input.rows() != input.cols()) throw DomainError("determinant of a non-square matrix");
  const Index n = input.rows();
  if (n == 0) return Scalar(1);

  Matrix<Scalar> m = input;
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Determinant of a rational matrix: clear each row's denominators, run
/// Bareiss over Z, then divide the scale back out.
Rational determinant(const RatMatrix& matrix);
Integer determinant(const IntMatrix& matrix);

/// Solve L x = b for lower-triangular L with nonzero diagonal (field scalars).
template <typename DerivedL, typename DerivedB>
Vector<typename DerivedL::Scalar> forward_substitute(const Eigen::MatrixBase<DerivedL>& lower,
                                                     const Eigen::MatrixBase<DerivedB>& rhs) {
  using Scalar = typename DerivedL::Scalar;
  const Eigen::Index n = lower.rows();
  if (lower.cols() != n || rhs.size() != n) throw DomainError("forward_substitute: shape mismatch");
  Vector<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar acc = rhs(i);
    for (Eigen::Index j = 0; j < i; ++j)
      if (lower(i, j) != 0) acc -= lower(i, j) * x(j);
    if (lower(i, i) == 0) throw InvariantViolation("forward_substitute: zero on the diagonal");
    x(i) = acc / lower(i, i);
  }
  return x;
}

}  // namespace fixdiv
