#ifndef BRUNONF_SCALAR_HPP
#define BRUNONF_SCALAR_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

#include "brunonf/errors.hpp"

namespace brunonf {

enum class ScalarKind { Rational, Gauss, Float };

std::string to_string(ScalarKind k);

// Coefficient of the tower: exact rational, exact Gaussian rational, or a
// complex double with a global tolerance for zero tests. Arithmetic between
// different kinds throws; a whole pipeline runs in one kind.
class Scalar {
public:
  Scalar() : kind_(ScalarKind::Rational) {}

  static Scalar rational(mpq_class v);
  static Scalar gauss(mpq_class re, mpq_class im);
  static Scalar cfloat(std::complex<double> z);
  static Scalar zero(ScalarKind k);
  static Scalar one(ScalarKind k);
  static Scalar integer(long v, ScalarKind k);
  static Scalar imaginary_unit(ScalarKind k);  // throws for Rational

  // Accepts "p/q", "a+b*i" / "a-b*i", "i", "-i" and (float kind) decimals.
  static Scalar parse(const std::string& text, ScalarKind k);

  ScalarKind kind() const { return kind_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact for exact kinds; |z| <= eps * scale for floats.
  bool is_zero(double eps_scale = 1.0) const;
  bool is_one() const;

  Scalar inverse() const;  // throws NotAUnitError on zero
  Scalar conj() const;

  double abs() const;                // |.| as double (always available)
  mpq_class abs2() const;            // exact |.|^2, exact kinds only
  std::complex<double> to_complex() const;
  double to_double() const { return to_complex().real(); }

  const mpq_class& rat_re() const { return re_; }
  const mpq_class& rat_im() const { return im_; }

  std::string str() const;

  // Total order used only for deterministic tie-breaking, not algebra.
  bool deterministic_less(const Scalar& o) const;

  static double float_epsilon;  // global float zero tolerance

private:
  void check_same(const Scalar& o) const {
    if (kind_ != o.kind_) throw ScalarMismatchError();
  }
  ScalarKind kind_;
  mpq_class re_, im_;          // exact kinds
  std::complex<double> f_{0.0, 0.0};  // float kind
};

}  // namespace brunonf

#endif
