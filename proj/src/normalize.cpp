#include "brunonf/normalize.hpp"

#include <algorithm>

namespace brunonf {

SPerturbation SPerturbation::from_derivation(const LogDerivation& d) {
  SPerturbation p;
  p.lambda = d.linear_part();
  bool nonzero = false;
  for (auto& c : p.lambda) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw NonDegenerateError();
  p.order = d.order();
  p.R = LogDerivation(d.dim(), d.order(), d.kind());
  for (auto& [m, lam] : d.terms())
    if (norm1(m) > 0) p.R.add_term(m, lam);
  return p;
}

LogDerivation solve_truncated_bracket(const std::vector<Scalar>& lambda,
                                      const Series& f0, const LogDerivation& W,
                                      int k, int trunc) {
  int n = (int)lambda.size();
  ScalarKind kind = W.kind();
  if (trunc < 0) trunc = 1 << (k + 1);
  if (!f0.at_origin().is_zero())
    throw NotGradedZeroError("f0 must vanish at the origin");
  for (auto& [m, c] : f0.terms())
    if (!is_resonant(lambda, m))
      throw NotGradedZeroError("f0 has a nonresonant term");

  LogDerivation U(n, trunc, kind);
  bool have_f0 = !f0.is_zero();
  // lift f0 to the working order so arithmetic below is not truncated down
  Series f0l(n, trunc, kind);
  for (auto& [m, c] : f0.terms()) f0l.add_term(m, c);
  Series one_plus = Series::constant(n, trunc, Scalar::one(kind)) + f0l;
  Series inv = one_plus.invert_unit(trunc);
  Series inv2 = have_f0 ? inv * inv : inv;
  LogDerivation S = LogDerivation::diagonal(lambda, trunc);

  for (auto& [m, mu] : W.terms()) {
    if (norm1(m) >= trunc) break;
    if (is_resonant(lambda, m)) continue;  // W_0 is absorbed elsewhere
    Scalar alpha = weight(lambda, m);
    Scalar ainv = alpha.inverse();
    // ad^{-1}(x^m L(mu)) = x^m/(alpha(1+f0)) L(mu)
    //                    + x^m L(mu)(f0)/(alpha^2 (1+f0)^2) S
    Series s1 = Series::monomial(n, trunc, m, -ainv) * inv;
    U = U + LogDerivation::diagonal(mu, trunc).mul_series(s1);
    if (have_f0) {
      Series g = LogDerivation::monomial(trunc, m, mu).apply(f0l, trunc);
      if (!g.is_zero()) {
        Series s2 = (g * inv2).scale(-(ainv * ainv));
        U = U + S.mul_series(s2);
      }
    }
  }
  return U;
}

Automorphism exp_automorphism(const LogDerivation& U, int N) {
  int n = U.dim();
  ScalarKind kind = U.kind();
  if (U.is_zero()) return Automorphism::identity(n, N, kind);
  if (U.ord() < 1) throw Error("NotNilpotentChange", "exp needs ord(U) >= 1");
  std::vector<Series> imgs;
  imgs.reserve(n);
  for (int i = 0; i < n; ++i) {
    Series acc = Series::variable(n, N, i, kind);
    Series term = acc;
    for (long j = 1; j < N; ++j) {
      term = U.apply(term, N).scale(Scalar::integer(j, kind).inverse());
      if (term.is_zero()) break;
      acc = acc + term;
    }
    imgs.push_back(acc);
  }
  return Automorphism::from_images(std::move(imgs));
}

LogDerivation conjugate(const LogDerivation& d, const LogDerivation& U, int N) {
  if (U.is_zero()) return d.truncate(N);
  if (U.ord() < 1) throw Error("NotNilpotentChange", "conjugation needs ord(U) >= 1");
  ScalarKind kind = d.kind();
  LogDerivation acc = d.truncate(N);
  LogDerivation term = acc;
  for (long j = 1; j < N; ++j) {
    term = lie_bracket(term, U, N).scale(Scalar::integer(j, kind).inverse());
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return acc;
}

std::vector<Series> conjugate_components(const LogDerivation& d,
                                         const Automorphism& phi, int N) {
  Automorphism inv = phi.inverse(N);
  std::vector<Series> comps;
  comps.reserve(d.dim());
  for (int i = 0; i < d.dim(); ++i)
    comps.push_back(substitute(d.apply(phi.image(i), N), inv, N));
  return comps;
}

LogDerivation conjugate_by(const LogDerivation& d, const Automorphism& phi, int N) {
  return LogDerivation::from_vector_components(conjugate_components(d, phi, N), N);
}

namespace {

LogDerivation lift_order(const LogDerivation& d, int N) {
  LogDerivation r(d.dim(), N, d.kind());
  for (auto& [m, lam] : d.terms()) r.add_term(m, lam);
  return r;
}

Automorphism shift_automorphism(const LogDerivation& U, int N) {
  // phi(x) = x + U(x)
  int n = U.dim();
  auto comps = U.vector_components();
  std::vector<Series> imgs;
  imgs.reserve(n);
  for (int i = 0; i < n; ++i) {
    Series xi = Series::variable(n, N, i, U.kind());
    imgs.push_back(xi + comps[i].truncate(N));
  }
  return Automorphism::from_images(std::move(imgs));
}

// S-coefficient of the resonant part, restricted to degrees < max_deg but
// kept at the full working order.
Series resonant_unit_coeff(const LogDerivation& nonlinear,
                           const std::vector<Scalar>& lambda,
                           const LogBasis& basis, int max_deg, int order) {
  LogDerivation res0 = graded_split(nonlinear, lambda).first;
  Series f = log_basis_expand(res0, basis)[0];
  Series out(nonlinear.dim(), order, nonlinear.kind());
  for (auto& [m, c] : f.terms()) {
    if (norm1(m) >= max_deg) break;
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

NormalizationResult newton_normalize(const SPerturbation& d, int N,
                                     bool polynomial_change) {
  if (N < 2 || (N & (N - 1)) != 0)
    throw Error("InvalidOrder", "newton normalization needs a power-of-two order");
  if (d.order < N) throw Error("InvalidOrder", "input truncation below requested order");
  bool nonzero = false;
  for (auto& c : d.lambda) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw NonDegenerateError();

  int n = d.dim();
  ScalarKind kind = d.kind();
  LogDerivation S = LogDerivation::diagonal(d.lambda, N);
  LogDerivation cur = S + d.R.truncate(N);
  LogBasis basis = LogBasis::canonical(d.lambda);
  Automorphism psi = Automorphism::identity(n, N, kind);
  NormalizationTrace trace;

  for (int k = 0; (1 << k) < N; ++k) {
    int jet = 1 << k;
    int next = std::min(jet * 2, N);
    // Conjugating can re-seed nonresonant terms inside the current band (the
    // bracket of U with resonant non-collinear terms); their order strictly
    // increases each sweep, so repeating the step empties the band.
    for (int sweep = 0; ; ++sweep) {
      if (sweep > next) throw Error("Internal", "newton band sweep did not terminate");
      Series f0 = resonant_unit_coeff(cur - S, d.lambda, basis, jet, N);
      LogDerivation diff = cur - S - S.mul_series(f0);
      LogDerivation W(n, next, kind);
      bool have_nonres = false;
      for (auto& [m, lam] : diff.terms()) {
        int nm = norm1(m);
        if (nm < jet) continue;
        if (nm >= next) break;
        W.add_term(m, lam);
        have_nonres = have_nonres || !is_resonant(d.lambda, m);
      }
      if (sweep > 0 && !have_nonres) break;
      LogDerivation U = lift_order(solve_truncated_bracket(d.lambda, f0, W, k, next), N);
      if (!U.is_zero()) {
        if (polynomial_change) {
          cur = LogDerivation::from_vector_components(
              conjugate_components(cur, shift_automorphism(U, N), N), N);
          psi = shift_automorphism(U, N).compose(psi, N);
        } else {
          cur = conjugate(cur, U, N);
          psi = exp_automorphism(U, N).compose(psi, N);
        }
      }
      NormalizationStep step;
      step.k = k;
      step.U = U;
      step.f0 = resonant_unit_coeff(cur - S, d.lambda, basis, next, N);
      step.residual = cur - S;
      step.u_ord = U.is_zero() ? 0 : U.ord();
      step.u_deg = U.is_zero() ? 0 : U.deg();
      trace.steps.push_back(std::move(step));
      if (U.is_zero()) break;
    }
  }

  NormalizationResult out;
  out.delta.lambda = d.lambda;
  out.delta.order = N;
  out.delta.R = cur - S;
  out.psi = psi;
  out.trace = std::move(trace);
  return out;
}

NormalizationResult graded_normalize(const SPerturbation& d, int N) {
  if (N < 2) throw Error("InvalidOrder", "order must be >= 2");
  if (d.order < N) throw Error("InvalidOrder", "input truncation below requested order");
  bool nonzero = false;
  for (auto& c : d.lambda) nonzero = nonzero || !c.is_zero();
  if (!nonzero) throw NonDegenerateError();

  int n = d.dim();
  ScalarKind kind = d.kind();
  LogDerivation S = LogDerivation::diagonal(d.lambda, N);
  LogDerivation cur = S + d.R.truncate(N);
  Automorphism psi = Automorphism::identity(n, N, kind);
  Series f0_zero(n, N, kind);
  NormalizationTrace trace;

  for (int j = 1; j < N; ++j) {
    LogDerivation level(n, j + 1, kind);
    LogDerivation diff = cur - S;
    for (auto& [m, lam] : diff.terms()) {
      int nm = norm1(m);
      if (nm < j) continue;
      if (nm > j) break;
      if (!is_resonant(d.lambda, m)) level.add_term(m, lam);
    }
    if (level.is_zero()) continue;
    LogDerivation U =
        lift_order(solve_truncated_bracket(d.lambda, f0_zero, level, 0, j + 1), N);
    cur = conjugate(cur, U, N);
    psi = exp_automorphism(U, N).compose(psi, N);
    NormalizationStep step;
    step.k = j;
    step.U = U;
    step.f0 = Series(n, N, kind);
    step.residual = cur - S;
    step.u_ord = U.ord();
    step.u_deg = U.deg();
    trace.steps.push_back(std::move(step));
  }

  NormalizationResult out;
  out.delta.lambda = d.lambda;
  out.delta.order = N;
  out.delta.R = cur - S;
  out.psi = psi;
  out.trace = std::move(trace);
  return out;
}

}  // namespace brunonf
