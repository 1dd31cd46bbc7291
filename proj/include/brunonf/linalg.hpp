#ifndef BRUNONF_LINALG_HPP
#define BRUNONF_LINALG_HPP

#include <vector>

#include "brunonf/scalar.hpp"

namespace brunonf {

using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix matrix_identity(int n, ScalarKind kind) {
  Matrix a(n, std::vector<Scalar>(n, Scalar::zero(kind)));
  for (int i = 0; i < n; ++i) a[i][i] = Scalar::one(kind);
  return a;
}

// Gauss-Jordan; returns false if singular. Exact kinds pivot on any nonzero
// entry; floats pick the largest magnitude.
bool matrix_invert(const Matrix& a, Matrix& out);

Matrix matrix_mul(const Matrix& a, const Matrix& b);

std::vector<Scalar> matrix_apply(const Matrix& a, const std::vector<Scalar>& v);

}  // namespace brunonf

#endif
