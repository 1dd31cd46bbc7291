#include "brunonf/series.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "brunonf/automorphism.hpp"

namespace brunonf {

Series Series::constant(int n, int order, const Scalar& c) {
  Series s(n, order, c.kind());
  s.add_term(Exponent(n, 0), c);
  return s;
}

Series Series::variable(int n, int order, int i, ScalarKind kind) {
  return monomial(n, order, unit_exponent(n, i), Scalar::one(kind));
}

Series Series::monomial(int n, int order, const Exponent& m, const Scalar& c) {
  Series s(n, order, c.kind());
  s.add_term(m, c);
  return s;
}

Scalar Series::coeff(const Exponent& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(kind_) : it->second;
}

void Series::add_term(const Exponent& m, const Scalar& c) {
  if ((int)m.size() != n_) throw DimensionMismatchError();
  if (c.kind() != kind_) throw ScalarMismatchError();
  if (norm1(m) >= order_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Series::check_compatible(const Series& o) const {
  if (n_ != o.n_) throw DimensionMismatchError();
  if (kind_ != o.kind_) throw ScalarMismatchError();
}

Series Series::operator+(const Series& o) const {
  check_compatible(o);
  Series r(n_, std::min(order_, o.order_), kind_);
  for (auto& [m, c] : terms_) r.add_term(m, c);
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
  Series r(n_, order_, kind_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Series Series::scale(const Scalar& c) const {
  if (c.kind() != kind_) throw ScalarMismatchError();
  Series r(n_, order_, kind_);
  if (c.is_zero()) return r;
  for (auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

Series Series::operator*(const Series& o) const {
  check_compatible(o);
  int N = std::min(order_, o.order_);
  Series r(n_, N, kind_);
  for (auto& [m, a] : terms_) {
    int dm = norm1(m);
    if (dm >= N) break;
    for (auto& [k, b] : o.terms_) {
      if (dm + norm1(k) >= N) break;  // graded order: all later terms too big
      r.add_term(exp_add(m, k), a * b);
    }
  }
  return r;
}

Series Series::truncate(int N) const {
  Series r(n_, std::min(N, order_), kind_);
  for (auto& [m, c] : terms_) {
    if (norm1(m) >= r.order_) break;
    r.terms_.emplace(m, c);
  }
  return r;
}

int Series::ord() const {
  if (terms_.empty()) return std::numeric_limits<int>::max();
  return norm1(terms_.begin()->first);
}

int Series::deg() const {
  if (terms_.empty()) return std::numeric_limits<int>::min();
  return norm1(terms_.rbegin()->first);
}

Series Series::invert_unit(int N) const {
  Scalar c0 = at_origin();
  if (c0.is_zero()) throw NotAUnitError();
  // Newton doubling: y <- y (2 - f y).
  Series y = Series::constant(n_, 1, c0.inverse());
  int prec = 1;
  while (prec < N) {
    prec = std::min(2 * prec, N);
    Series yl(n_, prec, kind_);
    for (auto& [m, c] : y.terms()) yl.add_term(m, c);
    Series two = Series::constant(n_, prec, Scalar::integer(2, kind_));
    y = yl * (two - truncate(prec) * yl);
  }
  Series r(n_, N, kind_);
  for (auto& [m, c] : y.terms()) r.add_term(m, c);
  return r;
}

RNorm Series::rnorm(double r) const {
  RNorm out;
  for (auto& [m, c] : terms_) out.value += c.abs() * std::pow(r, norm1(m));
  return out;
}

Scalar weight(const std::vector<Scalar>& lambda, const Exponent& m) {
  if (lambda.size() != m.size()) throw DimensionMismatchError();
  Scalar w = Scalar::zero(lambda.empty() ? ScalarKind::Rational : lambda[0].kind());
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) w += lambda[i] * Scalar::integer(m[i], lambda[i].kind());
  return w;
}

bool is_resonant(const std::vector<Scalar>& lambda, const Exponent& m) {
  return weight(lambda, m).is_zero(1.0 + norm1(m));
}

Series Series::graded_component(const std::vector<Scalar>& lambda,
                                const Scalar& alpha) const {
  Series r(n_, order_, kind_);
  for (auto& [m, c] : terms_)
    if ((weight(lambda, m) - alpha).is_zero(1.0 + norm1(m))) r.terms_.emplace(m, c);
  return r;
}

Series Series::resonant_part(const std::vector<Scalar>& lambda) const {
  Series r(n_, order_, kind_);
  for (auto& [m, c] : terms_)
    if (is_resonant(lambda, m)) r.terms_.emplace(m, c);
  return r;
}

Series Series::nonresonant_part(const std::vector<Scalar>& lambda) const {
  Series r(n_, order_, kind_);
  for (auto& [m, c] : terms_)
    if (!is_resonant(lambda, m)) r.terms_.emplace(m, c);
  return r;
}

bool Series::operator==(const Series& o) const {
  check_compatible(o);
  return (*this - o).is_zero();
}

std::string Series::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      os << "*" << (vars.empty() ? "x" + std::to_string(i + 1) : vars[i]);
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os.str();
}

Series substitute(const Series& f, const Automorphism& phi, int N) {
  if (f.dim() != phi.dim()) throw DimensionMismatchError();
  if (f.kind() != phi.kind()) throw ScalarMismatchError();
  int n = f.dim();
  Series result(n, N, f.kind());
  // memoized monomial images phi^m, built one variable factor at a time
  std::map<Exponent, Series, GradedLex> pow;
  pow.emplace(Exponent(n, 0), Series::constant(n, N, Scalar::one(f.kind())));
  std::function<const Series&(const Exponent&)> image = [&](const Exponent& m) -> const Series& {
    auto it = pow.find(m);
    if (it != pow.end()) return it->second;
    int i = 0;
    while (m[i] == 0) ++i;
    Exponent prev = m;
    prev[i] -= 1;
    Series val = image(prev) * phi.image(i).truncate(N);
    return pow.emplace(m, std::move(val)).first->second;
  };
  for (auto& [m, c] : f.terms()) {
    // image of x^m has order >= |m| since each phi_i vanishes at 0
    if (norm1(m) >= N) break;
    result = result + image(m).scale(c);
  }
  return result;
}

}  // namespace brunonf
