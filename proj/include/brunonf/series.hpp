#ifndef BRUNONF_SERIES_HPP
#define BRUNONF_SERIES_HPP

#include <limits>
#include <map>
#include <vector>

#include "brunonf/exponent.hpp"
#include "brunonf/scalar.hpp"

namespace brunonf {

class Automorphism;

struct RNorm {
  double value = 0.0;
  bool lower_bound = true;  // truncated tail omitted
};

// Truncated sparse multivariate power series: terms of total degree >= order()
// are undefined. No zero coefficients are stored; terms are kept in graded-lex
// order. Immutable value semantics after construction.
class Series {
public:
  using TermMap = std::map<Exponent, Scalar, GradedLex>;

  Series() = default;
  Series(int n, int order, ScalarKind kind) : n_(n), order_(order), kind_(kind) {}

  static Series constant(int n, int order, const Scalar& c);
  static Series variable(int n, int order, int i, ScalarKind kind);
  static Series monomial(int n, int order, const Exponent& m, const Scalar& c);

  int dim() const { return n_; }
  int order() const { return order_; }
  ScalarKind kind() const { return kind_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Scalar coeff(const Exponent& m) const;
  // Drops zero coefficients and terms of degree >= order().
  void add_term(const Exponent& m, const Scalar& c);

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator-() const;
  Series scale(const Scalar& c) const;
  Series truncate(int N) const;

  // ord(0) = INT_MAX, deg(0) = INT_MIN per the usual conventions.
  int ord() const;
  int deg() const;

  Scalar at_origin() const { return coeff(Exponent(n_, 0)); }

  // Multiplicative inverse mod m^N; requires a nonzero constant term.
  Series invert_unit(int N) const;

  RNorm rnorm(double r) const;

  // Terms m with <lambda, m> = alpha (float kinds use eps*(1+|m|) slack).
  Series graded_component(const std::vector<Scalar>& lambda, const Scalar& alpha) const;
  // Terms with <lambda, m> = 0.
  Series resonant_part(const std::vector<Scalar>& lambda) const;
  Series nonresonant_part(const std::vector<Scalar>& lambda) const;

  std::string str(const std::vector<std::string>& vars = {}) const;

  bool operator==(const Series& o) const;

private:
  void check_compatible(const Series& o) const;
  int n_ = 0;
  int order_ = 0;
  ScalarKind kind_ = ScalarKind::Rational;
  TermMap terms_;
};

// <lambda, m> as a Scalar (lambda entries and result share the series kind).
Scalar weight(const std::vector<Scalar>& lambda, const Exponent& m);

// Resonance test with the float slack eps*(1+|m|).
bool is_resonant(const std::vector<Scalar>& lambda, const Exponent& m);

// f(phi_1,...,phi_n) mod m^N.
Series substitute(const Series& f, const Automorphism& phi, int N);

}  // namespace brunonf

#endif
