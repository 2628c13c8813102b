#include "fixdiv/linalg.hpp"

namespace fixdiv {

Integer determinant(const IntMatrix& matrix) { return bareiss_determinant(matrix); }

Rational determinant(const RatMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw DomainError("determinant of a non-square matrix");
  IntMatrix scaled(matrix.rows(), matrix.cols());
  Integer scale = 1;
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    Integer den = 1;
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) den = lcm(den, matrix(i, j).get_den());
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      Rational v = matrix(i, j) * den;
      scaled(i, j) = v.get_num();
    }
    scale *= den;
  }
  Rational det(bareiss_determinant(scaled), scale);
  det.canonicalize();
  return det;
}

}  // namespace fixdiv
