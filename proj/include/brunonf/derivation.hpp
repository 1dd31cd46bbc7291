#ifndef BRUNONF_DERIVATION_HPP
#define BRUNONF_DERIVATION_HPP

#include <map>
#include <utility>
#include <vector>

#include "brunonf/linalg.hpp"
#include "brunonf/series.hpp"

namespace brunonf {

class TruncatedIdeal;

// Logarithmic derivation stored by its monomial expansion
//   d = sum_m x^m L(lambda_m),   L(v) = sum_j v_j x_j d/dx_j.
// Stored eigenvalue vectors are nonzero; exponents nonnegative with |m| < order.
class LogDerivation {
public:
  using TermMap = std::map<Exponent, std::vector<Scalar>, GradedLex>;

  LogDerivation() = default;
  LogDerivation(int n, int order, ScalarKind kind) : n_(n), order_(order), kind_(kind) {}

  static LogDerivation diagonal(const std::vector<Scalar>& lambda, int order);
  static LogDerivation monomial(int order, const Exponent& m,
                                const std::vector<Scalar>& lambda);
  // d = sum_i a_i d/dx_i; each a_i must be divisible by x_i.
  static LogDerivation from_vector_components(const std::vector<Series>& coeffs, int N);

  int dim() const { return n_; }
  int order() const { return order_; }
  ScalarKind kind() const { return kind_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::vector<Scalar> eigenvector(const Exponent& m) const;  // lambda_m (zero if absent)
  void add_term(const Exponent& m, const std::vector<Scalar>& lambda);

  // a_i = (sum_m lambda_{m,i} x^m) x_i
  std::vector<Series> vector_components() const;
  // coefficient series of x_i d/dx_i, i.e. a_i / x_i
  Series log_component(int i) const;

  LogDerivation operator+(const LogDerivation& o) const;
  LogDerivation operator-(const LogDerivation& o) const;
  LogDerivation operator-() const;
  LogDerivation scale(const Scalar& c) const;
  LogDerivation mul_series(const Series& f) const;  // f * d
  LogDerivation truncate(int N) const;

  int ord() const;
  int deg() const;
  std::vector<Scalar> linear_part() const;  // lambda_0

  Series apply(const Series& f, int N) const;

  RNorm rnorm(double r) const;  // sum_m r^|m| * ||lambda_m||_1

  LogDerivation graded_component(const std::vector<Scalar>& lambda,
                                 const Scalar& alpha) const;

  bool operator==(const LogDerivation& o) const;
  std::string str(const std::vector<std::string>& vars = {}) const;

private:
  void check_compatible(const LogDerivation& o) const;
  int n_ = 0;
  int order_ = 0;
  ScalarKind kind_ = ScalarKind::Rational;
  TermMap terms_;
};

LogDerivation lie_bracket(const LogDerivation& a, const LogDerivation& b, int N);

// (resonant, nonresonant) split by the weight <lambda, m>.
std::pair<LogDerivation, LogDerivation> graded_split(const LogDerivation& d,
                                                     const std::vector<Scalar>& lambda);

// Diagonal derivations L(mu_0),...,L(mu_{n-1}) with independent mu's, plus the
// change-of-basis data and the norm constants of the basis.
class LogBasis {
public:
  static LogBasis from_vectors(std::vector<std::vector<Scalar>> mu);
  // {L(lambda), L(e_j)...}: pivot on the first nonzero coordinate of lambda,
  // fill with the remaining standard basis vectors.
  static LogBasis canonical(const std::vector<Scalar>& lambda);

  int dim() const { return (int)mu_.size(); }
  const std::vector<Scalar>& mu(int j) const { return mu_[j]; }
  // coordinates of v in the basis: v = sum_j coords_j mu_j
  std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
  double c() const { return c_; }
  double d() const { return d_; }

private:
  std::vector<std::vector<Scalar>> mu_;
  Matrix inv_;  // inverse of the column matrix [mu_0 ... mu_{n-1}]
  double c_ = 1.0, d_ = 1.0;
};

// g_j with d = sum_j g_j L(mu_j).
std::vector<Series> log_basis_expand(const LogDerivation& d, const LogBasis& basis);

// Ideal generated by the C(n,2) wedge coefficients f_i g_j - f_j g_i in the
// basis x_i d/dx_i ^ x_j d/dx_j.
TruncatedIdeal wedge_coeff_ideal(const LogDerivation& a, const LogDerivation& b, int N);

}  // namespace brunonf

#endif
