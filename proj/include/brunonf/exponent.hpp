#ifndef BRUNONF_EXPONENT_HPP
#define BRUNONF_EXPONENT_HPP

#include <cstdlib>
#include <numeric>
#include <vector>

namespace brunonf {

// Multi-index m = (m_1,...,m_n). Nonnegative inside series and derivations;
// a single -1 entry is permitted only during small-divisor enumeration.
using Exponent = std::vector<int>;

inline int norm1(const Exponent& m) {
  int s = 0;
  for (int v : m) s += std::abs(v);
  return s;
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Graded lexicographic: total degree first, then lex. Canonical term order
// for all storage and serialization.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int na = norm1(a), nb = norm1(b);
    if (na != nb) return na < nb;
    return a < b;
  }
};

inline Exponent unit_exponent(int n, int i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace brunonf

#endif
