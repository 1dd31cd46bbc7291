#include <doctest.h>

#include "brunonf/normalize.hpp"
#include "helpers.hpp"

using namespace brunonf;
using testutil::random_nonlinear;
using testutil::random_series;
using K = ScalarKind;

namespace {
const Scalar one = Scalar::one(K::Rational);
const Scalar zero = Scalar::zero(K::Rational);
const std::vector<Scalar> lam = {one, -one};
}

TEST_CASE("homological fixture: S=L((1,-1)), f0=xy, W=xL((0,1))") {
  Series f0(2, 4, K::Rational);
  f0.add_term({1, 1}, one);
  auto W = LogDerivation::monomial(4, {1, 0}, {zero, one});
  auto U = solve_truncated_bracket(lam, f0, W, 0, 4);
  // U = x L((0,-1)) + x^2 y L((-1,2))
  auto expect = LogDerivation::monomial(4, {1, 0}, {zero, -one}) +
                LogDerivation::monomial(4, {2, 1}, {-one, one + one});
  CHECK(U == expect);
  auto S = LogDerivation::diagonal(lam, 4);
  CHECK((lie_bracket(S + S.mul_series(f0), U, 4) + W).is_zero());
}

TEST_CASE("homological solver on random triples") {
  std::mt19937 rng(43);
  for (int it = 0; it < 30; ++it) {
    int k = it % 3;
    int trunc = 2 << k;
    K kind = it % 2 ? K::Rational : K::Gauss;
    std::vector<Scalar> l = {Scalar::one(kind), -Scalar::integer(1 + it % 2, kind)};
    // resonant f0 with f0(0) = 0
    Series f0(2, trunc, kind);
    Series f0cand = random_series(rng, 2, trunc, kind, 1, trunc - 1, 4);
    for (auto& [m, c] : f0cand.terms())
      if (is_resonant(l, m)) f0.add_term(m, c);
    LogDerivation W(2, trunc, kind);
    auto cand = random_nonlinear(rng, 2, trunc, kind, 1, trunc - 1, 4);
    for (auto& [m, mu] : cand.terms())
      if (!is_resonant(l, m)) W.add_term(m, mu);
    auto U = solve_truncated_bracket(l, f0, W, k);
    auto S = LogDerivation::diagonal(l, trunc);
    CHECK((lie_bracket(S + S.mul_series(f0), U, trunc) + W).is_zero());
    // no resonant component in U
    CHECK(graded_split(U, l).first.is_zero());
  }
}

TEST_CASE("solver rejects bad f0") {
  Series f0(2, 4, K::Rational);
  f0.add_term({0, 0}, one);
  auto W = LogDerivation::monomial(4, {1, 0}, {zero, one});
  CHECK_THROWS_AS(solve_truncated_bracket(lam, f0, W, 0, 4), NotGradedZeroError);
  Series f1(2, 4, K::Rational);
  f1.add_term({2, 0}, one);  // nonresonant
  CHECK_THROWS_AS(solve_truncated_bracket(lam, f1, W, 0, 4), NotGradedZeroError);
}

TEST_CASE("exp conjugation agrees with coordinate conjugation") {
  auto d = LogDerivation::diagonal(lam, 8) +
           LogDerivation::monomial(8, {2, 0}, {one, one});
  auto U = LogDerivation::monomial(8, {1, 1}, {one, -(one + one)});
  auto via_series = conjugate(d, U, 8);
  auto via_coords = conjugate_by(d, exp_automorphism(U, 8), 8);
  CHECK(via_series == via_coords);
}

TEST_CASE("intertwining identity of the conjugated field") {
  std::mt19937 rng(47);
  for (int it = 0; it < 10; ++it) {
    auto d = LogDerivation::diagonal(lam, 8) +
             random_nonlinear(rng, 2, 8, K::Rational, 1, 3, 3);
    auto U = random_nonlinear(rng, 2, 8, K::Rational, 1, 3, 2);
    auto delta = conjugate(d, U, 8);
    auto phi = exp_automorphism(U, 8);
    Series f = random_series(rng, 2, 8, K::Rational, 0, 4, 4);
    CHECK(substitute(delta.apply(f, 8), phi, 8) ==
          d.apply(substitute(f, phi, 8), 8));
  }
}

TEST_CASE("newton and graded normalization agree on the resonant output") {
  SPerturbation p;
  p.lambda = lam;
  p.order = 8;
  p.R = LogDerivation::monomial(8, {1, 0}, {one, zero});
  auto rn = newton_normalize(p, 8);
  auto rg = graded_normalize(p, 8);
  CHECK(graded_split(rn.delta.R, lam).second.is_zero());
  CHECK(graded_split(rg.delta.R, lam).second.is_zero());
  CHECK(rn.delta.R == rg.delta.R);
  // the total coordinate map intertwines input and output
  auto d = p.field();
  Series g(2, 8, K::Rational);
  g.add_term({1, 0}, one);
  g.add_term({0, 1}, one);
  CHECK(substitute(rn.delta.field().apply(g, 8), rn.psi, 8) ==
        d.apply(substitute(g, rn.psi, 8), 8));
}

TEST_CASE("flatness of the newton trace") {
  std::mt19937 rng(53);
  for (int it = 0; it < 5; ++it) {
    SPerturbation p;
    p.lambda = lam;
    p.order = 16;
    p.R = random_nonlinear(rng, 2, 16, K::Rational, 1, 3, 4);
    auto r = newton_normalize(p, 16);
    for (auto& st : r.trace.steps) {
      if (st.U.is_zero()) continue;
      CHECK(st.u_ord >= (1 << st.k));
      CHECK(st.u_deg < (2 << st.k));
    }
  }
}

TEST_CASE("polynomial coordinate changes give the same normal form") {
  SPerturbation p;
  p.lambda = lam;
  p.order = 8;
  p.R = LogDerivation::monomial(8, {2, 0}, {one, one}) +
        LogDerivation::monomial(8, {1, 1}, {zero, one});
  auto r_exp = newton_normalize(p, 8, false);
  auto r_poly = newton_normalize(p, 8, true);
  // both are resonant-only; the two changes agree per step only modulo the
  // next jet order, so compare the leading resonant jet, not all of m^8
  CHECK(graded_split(r_poly.delta.R, lam).second.is_zero());
  CHECK(r_exp.delta.R.truncate(3) == r_poly.delta.R.truncate(3));
  // the polynomial change still intertwines input and output
  Series g(2, 8, K::Rational);
  g.add_term({1, 0}, one);
  g.add_term({0, 1}, one);
  CHECK(substitute(r_poly.delta.field().apply(g, 8), r_poly.psi, 8) ==
        p.field().apply(substitute(g, r_poly.psi, 8), 8));
}

TEST_CASE("nonresonant spectrum linearizes completely") {
  std::vector<Scalar> lg = {Scalar::one(K::Gauss), Scalar::imaginary_unit(K::Gauss)};
  auto ig = Scalar::imaginary_unit(K::Gauss);
  SPerturbation q;
  q.lambda = lg;
  q.order = 8;
  q.R = LogDerivation::monomial(8, {1, 1}, {ig, Scalar::one(K::Gauss)}) +
        LogDerivation::monomial(8, {0, 2}, {Scalar::one(K::Gauss), ig});
  auto r = newton_normalize(q, 8);
  CHECK(r.delta.R.is_zero());
}

TEST_CASE("degenerate linear part is rejected") {
  SPerturbation p;
  p.lambda = {zero, zero};
  p.order = 8;
  p.R = LogDerivation::monomial(8, {1, 0}, {one, zero});
  CHECK_THROWS_AS(newton_normalize(p, 8), NonDegenerateError);
  auto d = LogDerivation::monomial(8, {1, 1}, {one, one});
  CHECK_THROWS_AS(SPerturbation::from_derivation(d), NonDegenerateError);
}

TEST_CASE("newton requires a power-of-two order") {
  SPerturbation p;
  p.lambda = lam;
  p.order = 12;
  p.R = LogDerivation(2, 12, K::Rational);
  CHECK_THROWS_AS(newton_normalize(p, 12), Error);
}
