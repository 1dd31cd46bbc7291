#include "brunonf/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace brunonf {

double Scalar::float_epsilon = 1e-12;

std::string to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Gauss: return "gauss";
    case ScalarKind::Float: return "float";
  }
  return "?";
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  s.kind_ = ScalarKind::Rational;
  v.canonicalize();
  s.re_ = std::move(v);
  return s;
}

Scalar Scalar::gauss(mpq_class re, mpq_class im) {
  Scalar s;
  s.kind_ = ScalarKind::Gauss;
  re.canonicalize();
  im.canonicalize();
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

Scalar Scalar::cfloat(std::complex<double> z) {
  Scalar s;
  s.kind_ = ScalarKind::Float;
  s.f_ = z;
  return s;
}

Scalar Scalar::zero(ScalarKind k) { return integer(0, k); }
Scalar Scalar::one(ScalarKind k) { return integer(1, k); }

Scalar Scalar::integer(long v, ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational: return rational(mpq_class(v));
    case ScalarKind::Gauss: return gauss(mpq_class(v), 0);
    case ScalarKind::Float: return cfloat({double(v), 0.0});
  }
  throw Error("Internal", "bad kind");
}

Scalar Scalar::imaginary_unit(ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational:
      throw ScalarMismatchError("imaginary unit requires gauss or float scalars");
    case ScalarKind::Gauss: return gauss(0, 1);
    case ScalarKind::Float: return cfloat({0.0, 1.0});
  }
  throw Error("Internal", "bad kind");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (kind_ == ScalarKind::Float) return cfloat(f_ + o.f_);
  return kind_ == ScalarKind::Rational ? rational(re_ + o.re_)
                                       : gauss(re_ + o.re_, im_ + o.im_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (kind_ == ScalarKind::Float) return cfloat(f_ - o.f_);
  return kind_ == ScalarKind::Rational ? rational(re_ - o.re_)
                                       : gauss(re_ - o.re_, im_ - o.im_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  switch (kind_) {
    case ScalarKind::Float: return cfloat(f_ * o.f_);
    case ScalarKind::Rational: return rational(re_ * o.re_);
    case ScalarKind::Gauss:
      return gauss(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  throw Error("Internal", "bad kind");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  switch (kind_) {
    case ScalarKind::Float: return cfloat(-f_);
    case ScalarKind::Rational: return rational(mpq_class(-re_));
    case ScalarKind::Gauss: return gauss(mpq_class(-re_), mpq_class(-im_));
  }
  throw Error("Internal", "bad kind");
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (kind_ == ScalarKind::Float) return (*this - o).is_zero();
  return re_ == o.re_ && im_ == o.im_;
}

bool Scalar::is_zero(double eps_scale) const {
  if (kind_ == ScalarKind::Float) return std::abs(f_) <= float_epsilon * eps_scale;
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const { return *this == one(kind_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotAUnitError();
  switch (kind_) {
    case ScalarKind::Float: return cfloat(1.0 / f_);
    case ScalarKind::Rational: return rational(1 / re_);
    case ScalarKind::Gauss: {
      mpq_class n = re_ * re_ + im_ * im_;
      return gauss(re_ / n, -im_ / n);
    }
  }
  throw Error("Internal", "bad kind");
}

Scalar Scalar::conj() const {
  switch (kind_) {
    case ScalarKind::Float: return cfloat(std::conj(f_));
    case ScalarKind::Rational: return *this;
    case ScalarKind::Gauss: return gauss(re_, mpq_class(-im_));
  }
  throw Error("Internal", "bad kind");
}

double Scalar::abs() const {
  if (kind_ == ScalarKind::Float) return std::abs(f_);
  if (kind_ == ScalarKind::Rational) return std::fabs(re_.get_d());
  return std::hypot(re_.get_d(), im_.get_d());
}

mpq_class Scalar::abs2() const {
  if (kind_ == ScalarKind::Float)
    throw ScalarMismatchError("exact |.|^2 undefined for floats");
  return re_ * re_ + im_ * im_;
}

std::complex<double> Scalar::to_complex() const {
  if (kind_ == ScalarKind::Float) return f_;
  return {re_.get_d(), im_.get_d()};
}

static std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
  switch (kind_) {
    case ScalarKind::Rational: return rat_str(re_);
    case ScalarKind::Gauss: {
      mpq_class a = im_ < 0 ? mpq_class(-im_) : im_;
      return rat_str(re_) + (im_ < 0 ? "-" : "+") + rat_str(a) + "*i";
    }
    case ScalarKind::Float: {
      char buf[80];
      if (f_.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", f_.real());
        return buf;
      }
      std::snprintf(buf, sizeof buf, "%.17g%s%.17g*i", f_.real(),
                    f_.imag() < 0 ? "-" : "+", std::fabs(f_.imag()));
      return buf;
    }
  }
  throw Error("Internal", "bad kind");
}

bool Scalar::deterministic_less(const Scalar& o) const {
  check_same(o);
  if (kind_ == ScalarKind::Float) {
    if (f_.real() != o.f_.real()) return f_.real() < o.f_.real();
    return f_.imag() < o.f_.imag();
  }
  int c = cmp(re_, o.re_);
  if (c != 0) return c < 0;
  return cmp(im_, o.im_) < 0;
}

namespace {

// Parses "p", "p/q" or a decimal; `decimal_ok` only in float mode.
bool parse_real(const std::string& t, bool decimal_ok, mpq_class& out_q, double& out_d,
                bool& is_decimal) {
  if (t.empty()) return false;
  is_decimal = t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
               t.find('E') != std::string::npos;
  if (is_decimal) {
    if (!decimal_ok) return false;
    try {
      size_t pos = 0;
      out_d = std::stod(t, &pos);
      return pos == t.size();
    } catch (...) {
      return false;
    }
  }
  try {
    mpq_class q(t);
    q.canonicalize();
    out_q = q;
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

Scalar Scalar::parse(const std::string& text, ScalarKind k) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error("SyntaxError", "empty scalar literal");

  auto make_real = [&](const std::string& s) -> Scalar {
    mpq_class q;
    double d = 0;
    bool dec = false;
    if (!parse_real(s, k == ScalarKind::Float, q, d, dec))
      throw Error("SyntaxError", "bad scalar literal '" + s + "'");
    if (k == ScalarKind::Float) return cfloat({dec ? d : q.get_d(), 0.0});
    if (k == ScalarKind::Rational) return rational(q);
    return gauss(q, 0);
  };

  // pure imaginary shortcuts
  if (t == "i") return imaginary_unit(k);
  if (t == "-i") return -imaginary_unit(k);

  // a+b*i / a-b*i: find the sign splitting real and imaginary parts
  auto star = t.rfind("*i");
  if (star != std::string::npos && star + 2 == t.size()) {
    // locate split sign (not at position 0, not right after '/', 'e' or 'E')
    for (size_t p = t.size() - 1; p > 0; --p) {
      if ((t[p] == '+' || t[p] == '-') && t[p - 1] != '/' && t[p - 1] != 'e' &&
          t[p - 1] != 'E') {
        Scalar re = make_real(t.substr(0, p));
        std::string ims = t.substr(p, star - p);
        if (ims == "+") ims = "1";
        if (ims == "-") ims = "-1";
        Scalar im = make_real(ims);
        return re + im * imaginary_unit(k);
      }
    }
    // pure "b*i"
    return make_real(t.substr(0, star)) * imaginary_unit(k);
  }
  return make_real(t);
}

}  // namespace brunonf
