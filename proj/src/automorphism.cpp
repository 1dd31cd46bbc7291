#include "brunonf/automorphism.hpp"

#include "brunonf/linalg.hpp"

namespace brunonf {

bool matrix_invert(const Matrix& a, Matrix& out) {
  int n = (int)a.size();
  if (n == 0) {
    out.clear();
    return true;
  }
  ScalarKind kind = a[0][0].kind();
  Matrix work = a;
  out = matrix_identity(n, kind);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    double best = 0;
    for (int r = col; r < n; ++r) {
      if (work[r][col].is_zero()) continue;
      if (kind != ScalarKind::Float) {
        piv = r;
        break;
      }
      double v = work[r][col].abs();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv < 0) return false;
    std::swap(work[piv], work[col]);
    std::swap(out[piv], out[col]);
    Scalar inv = work[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      work[col][j] *= inv;
      out[col][j] *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) continue;
      Scalar f = work[r][col];
      for (int j = 0; j < n; ++j) {
        work[r][j] -= f * work[col][j];
        out[r][j] -= f * out[col][j];
      }
    }
  }
  return true;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
  int n = (int)a.size(), m = (int)b[0].size(), k = (int)b.size();
  ScalarKind kind = a[0][0].kind();
  Matrix r(n, std::vector<Scalar>(m, Scalar::zero(kind)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

std::vector<Scalar> matrix_apply(const Matrix& a, const std::vector<Scalar>& v) {
  int n = (int)a.size();
  std::vector<Scalar> r(n, Scalar::zero(v[0].kind()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < (int)v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Automorphism Automorphism::identity(int n, int order, ScalarKind kind) {
  std::vector<Series> imgs;
  imgs.reserve(n);
  for (int i = 0; i < n; ++i) imgs.push_back(Series::variable(n, order, i, kind));
  return from_images(std::move(imgs));
}

Automorphism Automorphism::from_images(std::vector<Series> images) {
  Automorphism a;
  a.n_ = (int)images.size();
  if (a.n_ == 0) throw DimensionMismatchError("automorphism needs >= 1 coordinate");
  a.order_ = images[0].order();
  a.kind_ = images[0].kind();
  for (auto& s : images) {
    if (s.dim() != a.n_) throw DimensionMismatchError();
    if (s.kind() != a.kind_) throw ScalarMismatchError();
    if (!s.at_origin().is_zero())
      throw Error("NotAnAutomorphism", "coordinate image has a constant term");
    a.order_ = std::min(a.order_, s.order());
  }
  a.images_ = std::move(images);
  return a;
}

bool Automorphism::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (!(images_[i] == Series::variable(n_, images_[i].order(), i, kind_))) return false;
  return true;
}

bool Automorphism::is_logarithmic() const {
  for (int i = 0; i < n_; ++i) {
    bool unit_seen = false;
    for (auto& [m, c] : images_[i].terms()) {
      if (m[i] == 0) return false;
      if (m == unit_exponent(n_, i)) unit_seen = !c.is_zero();
    }
    if (!unit_seen && !images_[i].is_zero()) return false;
    if (images_[i].is_zero()) return false;
  }
  return true;
}

Automorphism Automorphism::compose(const Automorphism& other, int N) const {
  if (n_ != other.n_) throw DimensionMismatchError();
  std::vector<Series> imgs;
  imgs.reserve(n_);
  for (int i = 0; i < n_; ++i) imgs.push_back(substitute(images_[i], other, N));
  return from_images(std::move(imgs));
}

Automorphism Automorphism::truncate(int N) const {
  std::vector<Series> imgs;
  imgs.reserve(n_);
  for (auto& s : images_) imgs.push_back(s.truncate(N));
  return from_images(std::move(imgs));
}

Automorphism Automorphism::inverse(int N) const {
  // linear part
  Matrix A(n_, std::vector<Scalar>(n_, Scalar::zero(kind_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) A[i][j] = images_[i].coeff(unit_exponent(n_, j));
  Matrix Ainv;
  if (!matrix_invert(A, Ainv))
    throw Error("NotAnAutomorphism", "linear part is singular");

  // nonlinear remainders h_i = phi_i - (A x)_i
  std::vector<Series> h(n_);
  for (int i = 0; i < n_; ++i) {
    Series lin(n_, N, kind_);
    for (int j = 0; j < n_; ++j) lin.add_term(unit_exponent(n_, j), A[i][j]);
    h[i] = images_[i].truncate(N) - lin;
  }

  // psi = Ainv (x - h(psi)); each pass gains one degree of accuracy
  std::vector<Series> psi(n_);
  for (int i = 0; i < n_; ++i) {
    Series s(n_, N, kind_);
    for (int j = 0; j < n_; ++j) s.add_term(unit_exponent(n_, j), Ainv[i][j]);
    psi[i] = s;
  }
  bool nonlinear = false;
  for (auto& s : h) nonlinear = nonlinear || !s.is_zero();
  if (nonlinear) {
    for (int pass = 2; pass < N; ++pass) {
      Automorphism cur = from_images(psi);
      std::vector<Series> next(n_);
      for (int i = 0; i < n_; ++i) {
        Series acc(n_, N, kind_);
        for (int j = 0; j < n_; ++j) {
          Series xj = Series::variable(n_, N, j, kind_);
          acc = acc + (xj - substitute(h[j], cur, N)).scale(Ainv[i][j]);
        }
        next[i] = acc;
      }
      bool changed = false;
      for (int i = 0; i < n_; ++i) changed = changed || !(next[i] == psi[i]);
      psi = std::move(next);
      if (!changed) break;
    }
  }
  return from_images(std::move(psi));
}

}  // namespace brunonf
