#include "brunonf/bruno.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "brunonf/linalg.hpp"

namespace brunonf {

namespace {

// dense univariate polynomial, coefficients low-to-high
using Poly = std::vector<Scalar>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, ScalarKind kind) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(kind));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_derivative(const Poly& p, ScalarKind kind) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i)
    r.push_back(p[i] * Scalar::integer((long)i, kind));
  poly_trim(r);
  return r;
}

// division with remainder over the scalar field
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, ScalarKind kind) {
  r = a;
  q.assign(a.size(), Scalar::zero(kind));
  Scalar lead_inv = b.back().inverse();
  while (r.size() >= b.size()) {
    Scalar c = r.back() * lead_inv;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    poly_trim(r);
    if (r.empty()) break;
    if (r.size() >= b.size() && r.back().is_zero()) poly_trim(r);
  }
  poly_trim(q);
}

Poly poly_monic(Poly p) {
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

Poly poly_gcd(Poly a, Poly b, ScalarKind kind) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r, kind);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Matrix matrix_poly_eval(const Poly& p, const Matrix& A, ScalarKind kind) {
  int M = (int)A.size();
  Matrix r(M, std::vector<Scalar>(M, Scalar::zero(kind)));
  if (p.empty()) return r;
  for (int i = 0; i < M; ++i) r[i][i] = p.back();
  for (int d = (int)p.size() - 2; d >= 0; --d) {
    r = matrix_mul(r, A);
    for (int i = 0; i < M; ++i) r[i][i] += p[d];
  }
  return r;
}

bool matrix_is_zero(const Matrix& a) {
  for (auto& row : a)
    for (auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

void jet_monomials(int n, int maxdeg, std::vector<Exponent>& out) {
  // all monomials of degree 1..maxdeg, graded-lex
  std::vector<Exponent> stack;
  Exponent cur(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (norm1(cur) >= 1) out.push_back(cur);
      return;
    }
    int used = 0;
    for (int i = 0; i < pos; ++i) used += cur[i];
    for (int v = 0; v <= maxdeg - used; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
    cur[pos] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), GradedLex());
}

Matrix jet_matrix(const LogDerivation& d, const std::vector<Exponent>& mons,
                  const std::map<Exponent, int, GradedLex>& index, int jet) {
  int M = (int)mons.size();
  Matrix A(M, std::vector<Scalar>(M, Scalar::zero(d.kind())));
  for (int col = 0; col < M; ++col) {
    Series img = d.apply(Series::monomial(d.dim(), jet, mons[col],
                                          Scalar::one(d.kind())), jet);
    for (auto& [e, c] : img.terms()) A[index.at(e)][col] = c;
  }
  return A;
}

}  // namespace

TruncatedIdeal bruno_ideal_normal_form(const SPerturbation& delta,
                                       const LogBasis& basis, int N) {
  if (!graded_split(delta.R, delta.lambda).second.is_zero())
    throw NotInNormalFormError();
  auto expand = log_basis_expand(delta.R.truncate(N), basis);
  std::vector<Series> gens(expand.begin() + 1, expand.end());
  return TruncatedIdeal(delta.dim(), N, delta.kind(), std::move(gens));
}

BrunoReport bruno_ideal(const SPerturbation& d, int N, const std::string& method) {
  BrunoReport rep;
  rep.method = method;
  NormalizationResult res = method == "graded" ? graded_normalize(d, N)
                                               : newton_normalize(d, N);
  rep.delta = res.delta;
  rep.psi = res.psi;
  rep.trace = std::move(res.trace);

  LogBasis basis = LogBasis::canonical(d.lambda);
  auto expand = log_basis_expand(rep.delta.R.truncate(N), basis);
  rep.f = expand[0];
  rep.gens_delta.assign(expand.begin() + 1, expand.end());
  rep.ideal_delta = TruncatedIdeal(d.dim(), N, d.kind(), rep.gens_delta);

  rep.gens_input.clear();
  for (auto& g : rep.gens_delta)
    rep.gens_input.push_back(substitute(g, rep.psi, N));
  rep.ideal_input = TruncatedIdeal(d.dim(), N, d.kind(), rep.gens_input);

  rep.f0 = rep.ideal_delta.reduce(rep.f, N);
  rep.f_minus_f0_in_ideal = rep.ideal_delta.contains(rep.f - rep.f0, N);
  rep.gen_in_ideal.clear();
  rep.a_condition = true;
  for (auto& g : rep.gens_delta) {
    rep.gen_in_ideal.push_back(rep.ideal_delta.contains(g, N));
    rep.a_condition = rep.a_condition && g.is_zero();
  }
  return rep;
}

std::pair<LogDerivation, LogDerivation> chevalley_jet(const LogDerivation& d, int jet) {
  ScalarKind kind = d.kind();
  if (kind == ScalarKind::Float)
    throw NonSplitSpectrumError();  // float spectra are not exactly decidable
  int n = d.dim();
  // The matrix acts on m/m^(jet+1): monomials of degree up to `jet` are needed
  // to pin down derivation terms of degree jet - 1, since a derivation term of
  // degree k sends a coordinate to a monomial of degree k + 1.
  std::vector<Exponent> mons;
  jet_monomials(n, jet, mons);
  std::map<Exponent, int, GradedLex> index;
  for (int i = 0; i < (int)mons.size(); ++i) index.emplace(mons[i], i);
  int M = (int)mons.size();

  Matrix A = jet_matrix(d, mons, index, jet + 1);

  // characteristic polynomial: the matrix is triangular in graded order, so
  // it is the product over the diagonal entries <lambda, a>
  Poly charpoly = {Scalar::one(kind)};
  for (int i = 0; i < M; ++i)
    charpoly = poly_mul(charpoly, {-A[i][i], Scalar::one(kind)}, kind);
  Poly sep;  // squarefree part
  {
    Poly der = poly_derivative(charpoly, kind);
    Poly g = poly_gcd(charpoly, der, kind);
    Poly q, r;
    poly_divmod(charpoly, g, q, r, kind);
    sep = poly_monic(q);
  }

  // separable-part Newton iteration: A <- A - p(A) p'(A)^{-1}
  Matrix X = A;
  Poly sep_der = poly_derivative(sep, kind);
  for (int iter = 0; iter < 2 * jet + 4; ++iter) {
    Matrix pa = matrix_poly_eval(sep, X, kind);
    if (matrix_is_zero(pa)) break;
    Matrix dpa = matrix_poly_eval(sep_der, X, kind);
    Matrix inv;
    if (!matrix_invert(dpa, inv)) throw NonSplitSpectrumError();
    Matrix corr = matrix_mul(pa, inv);
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) X[i][j] -= corr[i][j];
  }

  // read the semisimple matrix back as a derivation from its action on the
  // coordinate functions
  std::vector<Series> comps;
  for (int i = 0; i < n; ++i) {
    Series s(n, jet + 1, kind);
    int col = index.at(unit_exponent(n, i));
    for (int row = 0; row < M; ++row)
      if (!X[row][col].is_zero()) s.add_term(mons[row], X[row][col]);
    comps.push_back(std::move(s));
  }
  LogDerivation ss_full = LogDerivation::from_vector_components(comps, jet + 1);

  // Leibniz check: the derivation generated by those images must reproduce
  // the matrix on every basis monomial
  Matrix check = jet_matrix(ss_full, mons, index, jet + 1);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      if (!(check[i][j] == X[i][j])) throw NotADerivationError();

  LogDerivation ss = ss_full.truncate(jet);
  LogDerivation nilp = d.truncate(jet) - ss;
  return {ss, nilp};
}

OracleComparison bruno_oracle_compare(const SPerturbation& d, int jet) {
  OracleComparison cmp;
  auto [ss, nilp] = chevalley_jet(d.field().truncate(jet), jet);
  cmp.wedge_route = wedge_coeff_ideal(ss, nilp, jet);
  // the newton scheme needs a power-of-two order; fall back to the graded
  // scheme (same ideal) for other jets
  bool pow2 = jet >= 2 && (jet & (jet - 1)) == 0;
  BrunoReport rep = bruno_ideal(d, jet, pow2 ? "newton" : "graded");
  cmp.pullback_route = rep.ideal_input;
  cmp.rank_wedge = cmp.wedge_route.is_zero_ideal(jet)
                       ? 0
                       : cmp.wedge_route.graded_slice_basis(jet - 1).rank();
  cmp.rank_pullback = cmp.pullback_route.is_zero_ideal(jet)
                          ? 0
                          : cmp.pullback_route.graded_slice_basis(jet - 1).rank();
  cmp.equal = ideal_equal(cmp.wedge_route, cmp.pullback_route, jet);
  return cmp;
}

CertificateResult analyticity_certificate(const SPerturbation& d, int N) {
  CertificateResult out;
  LogDerivation S = LogDerivation::diagonal(d.lambda, N);
  LogDerivation R = d.R.truncate(N);
  TruncatedIdeal collinearity = wedge_coeff_ideal(S, R, N);
  LogDerivation br = lie_bracket(S, R, N);
  std::vector<Series> comm_gens;
  for (int i = 0; i < d.dim(); ++i) {
    Series g = br.log_component(i);
    if (!g.is_zero()) comm_gens.push_back(std::move(g));
  }
  TruncatedIdeal commutativity(d.dim(), N, d.kind(), std::move(comm_gens));
  out.ideal = collinearity.sum(commutativity, N).differential_closure(S, N);
  out.normal_form = graded_split(R, d.lambda).second.is_zero();
  if (out.normal_form) {
    SPerturbation nf{d.lambda, R, N};
    TruncatedIdeal B = bruno_ideal_normal_form(nf, LogBasis::canonical(d.lambda), N);
    out.equals_bruno = ideal_equal(out.ideal, B, N);
  }
  return out;
}

}  // namespace brunonf
