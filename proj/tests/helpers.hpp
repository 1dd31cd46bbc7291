#ifndef BRUNONF_TEST_HELPERS_HPP
#define BRUNONF_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "brunonf/derivation.hpp"

namespace testutil {

using namespace brunonf;

inline Scalar small_scalar(std::mt19937& rng, ScalarKind kind, bool nonzero = false) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    int re = d(rng);
    int im = kind == ScalarKind::Rational ? 0 : d(rng);
    if (nonzero && re == 0 && im == 0) continue;
    switch (kind) {
      case ScalarKind::Rational: return Scalar::rational(re);
      case ScalarKind::Gauss: return Scalar::gauss(re, im);
      case ScalarKind::Float: return Scalar::cfloat({(double)re, (double)im});
    }
  }
}

inline Exponent random_exponent(std::mt19937& rng, int n, int min_deg, int max_deg) {
  std::uniform_int_distribution<int> dd(min_deg, max_deg);
  int deg = dd(rng);
  Exponent m(n, 0);
  std::uniform_int_distribution<int> slot(0, n - 1);
  for (int i = 0; i < deg; ++i) m[slot(rng)] += 1;
  return m;
}

inline std::vector<Scalar> random_vector(std::mt19937& rng, int n, ScalarKind kind) {
  std::vector<Scalar> v;
  v.reserve(n);
  bool nonzero = false;
  for (int i = 0; i < n; ++i) {
    v.push_back(small_scalar(rng, kind));
    nonzero = nonzero || !v.back().is_zero();
  }
  if (!nonzero) v[0] = Scalar::one(kind);
  return v;
}

// Random polynomial perturbation with terms of degree min_deg..max_deg.
inline LogDerivation random_nonlinear(std::mt19937& rng, int n, int order,
                                      ScalarKind kind, int min_deg, int max_deg,
                                      int terms) {
  LogDerivation R(n, order, kind);
  for (int t = 0; t < terms; ++t)
    R.add_term(random_exponent(rng, n, min_deg, max_deg), random_vector(rng, n, kind));
  return R;
}

inline Series random_series(std::mt19937& rng, int n, int order, ScalarKind kind,
                            int min_deg, int max_deg, int terms) {
  Series f(n, order, kind);
  for (int t = 0; t < terms; ++t)
    f.add_term(random_exponent(rng, n, min_deg, max_deg), small_scalar(rng, kind));
  return f;
}

}  // namespace testutil

#endif
