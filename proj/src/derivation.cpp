#include "brunonf/derivation.hpp"

#include <cmath>
#include <sstream>

#include "brunonf/ideal.hpp"

namespace brunonf {

namespace {

bool vec_zero(const std::vector<Scalar>& v) {
  for (auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

double vec_norm1(const std::vector<Scalar>& v) {
  double s = 0;
  for (auto& c : v) s += c.abs();
  return s;
}

}  // namespace

LogDerivation LogDerivation::diagonal(const std::vector<Scalar>& lambda, int order) {
  if (lambda.empty()) throw DimensionMismatchError();
  LogDerivation d((int)lambda.size(), order, lambda[0].kind());
  d.add_term(Exponent(lambda.size(), 0), lambda);
  return d;
}

LogDerivation LogDerivation::monomial(int order, const Exponent& m,
                                      const std::vector<Scalar>& lambda) {
  if (lambda.empty()) throw DimensionMismatchError();
  LogDerivation d((int)m.size(), order, lambda[0].kind());
  d.add_term(m, lambda);
  return d;
}

LogDerivation LogDerivation::from_vector_components(const std::vector<Series>& coeffs,
                                                    int N) {
  int n = (int)coeffs.size();
  if (n == 0) throw DimensionMismatchError();
  ScalarKind kind = coeffs[0].kind();
  LogDerivation d(n, N, kind);
  for (int i = 0; i < n; ++i) {
    if (coeffs[i].dim() != n) throw DimensionMismatchError();
    if (coeffs[i].kind() != kind) throw ScalarMismatchError();
    for (auto& [m, c] : coeffs[i].terms()) {
      if (m[i] == 0) throw NotLogarithmicError(i, "x^" + std::to_string(i + 1));
      Exponent mm = m;
      mm[i] -= 1;  // a_i = (sum lambda_{m,i} x^m) x_i
      if (norm1(mm) >= N) continue;
      std::vector<Scalar> lam(n, Scalar::zero(kind));
      lam[i] = c;
      d.add_term(mm, lam);
    }
  }
  return d;
}

std::vector<Scalar> LogDerivation::eigenvector(const Exponent& m) const {
  auto it = terms_.find(m);
  if (it != terms_.end()) return it->second;
  return std::vector<Scalar>(n_, Scalar::zero(kind_));
}

void LogDerivation::add_term(const Exponent& m, const std::vector<Scalar>& lambda) {
  if ((int)m.size() != n_ || (int)lambda.size() != n_) throw DimensionMismatchError();
  if (norm1(m) >= order_) return;
  for (auto& c : lambda)
    if (c.kind() != kind_) throw ScalarMismatchError();
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!vec_zero(lambda)) terms_.emplace(m, lambda);
    return;
  }
  for (int i = 0; i < n_; ++i) it->second[i] += lambda[i];
  if (vec_zero(it->second)) terms_.erase(it);
}

std::vector<Series> LogDerivation::vector_components() const {
  std::vector<Series> a(n_, Series(n_, order_ + 1, kind_));
  for (int i = 0; i < n_; ++i) a[i] = Series(n_, order_ + 1, kind_);
  for (auto& [m, lam] : terms_)
    for (int i = 0; i < n_; ++i)
      if (!lam[i].is_zero()) {
        Exponent mm = m;
        mm[i] += 1;
        a[i].add_term(mm, lam[i]);
      }
  return a;
}

Series LogDerivation::log_component(int i) const {
  Series g(n_, order_, kind_);
  for (auto& [m, lam] : terms_)
    if (!lam[i].is_zero()) g.add_term(m, lam[i]);
  return g;
}

void LogDerivation::check_compatible(const LogDerivation& o) const {
  if (n_ != o.n_) throw DimensionMismatchError();
  if (kind_ != o.kind_) throw ScalarMismatchError();
}

LogDerivation LogDerivation::operator+(const LogDerivation& o) const {
  check_compatible(o);
  LogDerivation r(n_, std::min(order_, o.order_), kind_);
  for (auto& [m, lam] : terms_) r.add_term(m, lam);
  for (auto& [m, lam] : o.terms_) r.add_term(m, lam);
  return r;
}

LogDerivation LogDerivation::operator-() const {
  LogDerivation r(n_, order_, kind_);
  for (auto& [m, lam] : terms_) {
    std::vector<Scalar> neg;
    neg.reserve(n_);
    for (auto& c : lam) neg.push_back(-c);
    r.terms_.emplace(m, std::move(neg));
  }
  return r;
}

LogDerivation LogDerivation::operator-(const LogDerivation& o) const {
  return *this + (-o);
}

LogDerivation LogDerivation::scale(const Scalar& c) const {
  if (c.kind() != kind_) throw ScalarMismatchError();
  LogDerivation r(n_, order_, kind_);
  if (c.is_zero()) return r;
  for (auto& [m, lam] : terms_) {
    std::vector<Scalar> s;
    s.reserve(n_);
    for (auto& v : lam) s.push_back(v * c);
    r.add_term(m, s);
  }
  return r;
}

LogDerivation LogDerivation::mul_series(const Series& f) const {
  if (f.kind() != kind_) throw ScalarMismatchError();
  if (f.dim() != n_) throw DimensionMismatchError();
  LogDerivation r(n_, std::min(order_, f.order()), kind_);
  for (auto& [k, c] : f.terms())
    for (auto& [m, lam] : terms_) {
      if (norm1(k) + norm1(m) >= r.order()) break;
      std::vector<Scalar> s;
      s.reserve(n_);
      for (auto& v : lam) s.push_back(v * c);
      r.add_term(exp_add(k, m), s);
    }
  return r;
}

LogDerivation LogDerivation::truncate(int N) const {
  LogDerivation r(n_, std::min(N, order_), kind_);
  for (auto& [m, lam] : terms_) {
    if (norm1(m) >= r.order_) break;
    r.terms_.emplace(m, lam);
  }
  return r;
}

int LogDerivation::ord() const {
  if (terms_.empty()) return std::numeric_limits<int>::max();
  return norm1(terms_.begin()->first);
}

int LogDerivation::deg() const {
  if (terms_.empty()) return std::numeric_limits<int>::min();
  return norm1(terms_.rbegin()->first);
}

std::vector<Scalar> LogDerivation::linear_part() const {
  return eigenvector(Exponent(n_, 0));
}

Series LogDerivation::apply(const Series& f, int N) const {
  if (f.dim() != n_) throw DimensionMismatchError();
  if (f.kind() != kind_) throw ScalarMismatchError();
  Series r(n_, std::min(N, f.order()), kind_);
  // x^m L(lambda) (x^k) = <lambda, k> x^{m+k}
  for (auto& [m, lam] : terms_) {
    for (auto& [k, c] : f.terms()) {
      if (norm1(m) + norm1(k) >= r.order()) break;
      Scalar w = weight(lam, k);
      if (w.is_zero()) continue;
      r.add_term(exp_add(m, k), w * c);
    }
  }
  return r;
}

RNorm LogDerivation::rnorm(double r) const {
  RNorm out;
  for (auto& [m, lam] : terms_) out.value += vec_norm1(lam) * std::pow(r, norm1(m));
  return out;
}

LogDerivation LogDerivation::graded_component(const std::vector<Scalar>& lambda,
                                              const Scalar& alpha) const {
  LogDerivation r(n_, order_, kind_);
  for (auto& [m, lam] : terms_)
    if ((weight(lambda, m) - alpha).is_zero(1.0 + norm1(m))) r.terms_.emplace(m, lam);
  return r;
}

bool LogDerivation::operator==(const LogDerivation& o) const {
  check_compatible(o);
  return (*this - o).is_zero();
}

std::string LogDerivation::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, lam] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "x^(";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << m[i];
    os << ")*L(";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << lam[i].str();
    os << ")";
    (void)vars;
  }
  return os.str();
}

LogDerivation lie_bracket(const LogDerivation& a, const LogDerivation& b, int N) {
  if (a.dim() != b.dim()) throw DimensionMismatchError();
  if (a.kind() != b.kind()) throw ScalarMismatchError();
  int Nout = std::min({N, a.order(), b.order()});
  LogDerivation r(a.dim(), Nout, a.kind());
  // [x^m L(u), x^k L(v)] = <u,k> x^{m+k} L(v) - <v,m> x^{m+k} L(u)
  for (auto& [m, u] : a.terms()) {
    for (auto& [k, v] : b.terms()) {
      if (norm1(m) + norm1(k) >= Nout) break;
      Exponent mk = exp_add(m, k);
      Scalar uk = weight(u, k), vm = weight(v, m);
      if (!uk.is_zero()) {
        std::vector<Scalar> t;
        t.reserve(v.size());
        for (auto& c : v) t.push_back(c * uk);
        r.add_term(mk, t);
      }
      if (!vm.is_zero()) {
        std::vector<Scalar> t;
        t.reserve(u.size());
        for (auto& c : u) t.push_back(-(c * vm));
        r.add_term(mk, t);
      }
    }
  }
  return r;
}

std::pair<LogDerivation, LogDerivation> graded_split(const LogDerivation& d,
                                                     const std::vector<Scalar>& lambda) {
  LogDerivation res(d.dim(), d.order(), d.kind());
  LogDerivation non(d.dim(), d.order(), d.kind());
  for (auto& [m, lam] : d.terms()) {
    if (is_resonant(lambda, m))
      res.add_term(m, lam);
    else
      non.add_term(m, lam);
  }
  return {res, non};
}

LogBasis LogBasis::from_vectors(std::vector<std::vector<Scalar>> mu) {
  int n = (int)mu.size();
  if (n == 0) throw DimensionMismatchError();
  ScalarKind kind = mu[0][0].kind();
  Matrix T(n, std::vector<Scalar>(n, Scalar::zero(kind)));
  for (int j = 0; j < n; ++j) {
    if ((int)mu[j].size() != n) throw DimensionMismatchError();
    for (int i = 0; i < n; ++i) T[i][j] = mu[j][i];
  }
  LogBasis b;
  if (!matrix_invert(T, b.inv_)) throw SingularBasisError();
  b.mu_ = std::move(mu);
  // c = 1 always works for the lower bound; d bounds the expansion route.
  b.c_ = 1.0;
  double d = 0;
  for (int i = 0; i < n; ++i) {
    double col = 0;
    for (int j = 0; j < n; ++j) col += vec_norm1(b.mu_[j]) * b.inv_[j][i].abs();
    d = std::max(d, col);
  }
  b.d_ = std::max(d, b.c_);
  return b;
}

LogBasis LogBasis::canonical(const std::vector<Scalar>& lambda) {
  int n = (int)lambda.size();
  int pivot = -1;
  for (int i = 0; i < n && pivot < 0; ++i)
    if (!lambda[i].is_zero()) pivot = i;
  if (pivot < 0) throw ZeroLambdaError();
  std::vector<std::vector<Scalar>> mu;
  mu.push_back(lambda);
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    std::vector<Scalar> e(n, Scalar::zero(lambda[0].kind()));
    e[i] = Scalar::one(lambda[0].kind());
    mu.push_back(std::move(e));
  }
  return from_vectors(std::move(mu));
}

std::vector<Scalar> LogBasis::coords(const std::vector<Scalar>& v) const {
  return matrix_apply(inv_, v);
}

std::vector<Series> log_basis_expand(const LogDerivation& d, const LogBasis& basis) {
  if (basis.dim() != d.dim()) throw DimensionMismatchError();
  int n = d.dim();
  std::vector<Series> g(n, Series(n, d.order(), d.kind()));
  for (auto& [m, lam] : d.terms()) {
    auto c = basis.coords(lam);
    for (int j = 0; j < n; ++j)
      if (!c[j].is_zero()) g[j].add_term(m, c[j]);
  }
  return g;
}

TruncatedIdeal wedge_coeff_ideal(const LogDerivation& a, const LogDerivation& b, int N) {
  if (a.dim() != b.dim()) throw DimensionMismatchError();
  int n = a.dim();
  std::vector<Series> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Series fij = a.log_component(i) * b.log_component(j) -
                   a.log_component(j) * b.log_component(i);
      fij = fij.truncate(N);
      if (!fij.is_zero()) gens.push_back(fij);
    }
  return TruncatedIdeal(n, N, a.kind(), std::move(gens));
}

}  // namespace brunonf
