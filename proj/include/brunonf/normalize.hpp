#ifndef BRUNONF_NORMALIZE_HPP
#define BRUNONF_NORMALIZE_HPP

#include <vector>

#include "brunonf/automorphism.hpp"
#include "brunonf/derivation.hpp"

namespace brunonf {

// Diagonal part plus nonlinear remainder: d = L(lambda) + R with ord(R) >= 1.
struct SPerturbation {
  std::vector<Scalar> lambda;
  LogDerivation R;
  int order = 0;

  static SPerturbation from_derivation(const LogDerivation& d);
  LogDerivation S() const { return LogDerivation::diagonal(lambda, order); }
  LogDerivation field() const { return S() + R; }
  int dim() const { return (int)lambda.size(); }
  ScalarKind kind() const { return R.kind(); }
};

struct NormalizationStep {
  int k = 0;
  LogDerivation U;
  Series f0;               // resonant unit perturbation after the step
  LogDerivation residual;  // field minus S after the step
  int u_ord = 0, u_deg = 0;
};

struct NormalizationTrace {
  std::vector<NormalizationStep> steps;
};

struct NormalizationResult {
  SPerturbation delta;  // normalized field
  // Coordinate map psi of the total substitution: delta(f) o psi = d(f o psi)
  // for the input field d, i.e. delta = Psi^{-1} d Psi with Psi(f) = f o psi.
  Automorphism psi;
  NormalizationTrace trace;
};

// Solves [(1+f0) L(lambda), U] = -W_* mod m^trunc (default trunc = 2^{k+1})
// by the explicit inverse adjoint; U has no resonant component.
LogDerivation solve_truncated_bracket(const std::vector<Scalar>& lambda,
                                      const Series& f0, const LogDerivation& W,
                                      int k, int trunc = -1);

// Coordinate images of exp(U): x_i -> sum_j U^j(x_i)/j!  (requires ord(U) >= 1).
Automorphism exp_automorphism(const LogDerivation& U, int N);

// exp(ad_U) d = d + [d,U] + [[d,U],U]/2 + ...
LogDerivation conjugate(const LogDerivation& d, const LogDerivation& U, int N);

// Component series of Psi^{-1} d Psi where Psi(f) = f o phi; the result need
// not be logarithmic for arbitrary phi.
std::vector<Series> conjugate_components(const LogDerivation& d,
                                         const Automorphism& phi, int N);
LogDerivation conjugate_by(const LogDerivation& d, const Automorphism& phi, int N);

// Newton doubling: step k clears nonresonant terms of orders [2^k, 2^{k+1}).
// N must be a power of two. With polynomial_change the coordinate change of
// each step is x + U(x) instead of exp(U); the normal form agrees per step
// modulo the next jet order.
NormalizationResult newton_normalize(const SPerturbation& d, int N,
                                     bool polynomial_change = false);

// Degree-by-degree elimination oracle (f0 = 0 at each homogeneous level).
NormalizationResult graded_normalize(const SPerturbation& d, int N);

}  // namespace brunonf

#endif
