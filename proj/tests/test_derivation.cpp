#include <doctest.h>

#include "brunonf/derivation.hpp"
#include "brunonf/ideal.hpp"
#include "helpers.hpp"

using namespace brunonf;
using testutil::random_nonlinear;
using testutil::random_series;
using K = ScalarKind;

namespace {
const Scalar one = Scalar::one(K::Rational);
const Scalar zero = Scalar::zero(K::Rational);
}

TEST_CASE("monomial bracket formula") {
  // [x L((0,1)), y L((1,0))] = <(0,1),(0,1)> xy L((1,0)) - <(1,0),(1,0)> xy L((0,1))
  auto a = LogDerivation::monomial(6, {1, 0}, {zero, one});
  auto b = LogDerivation::monomial(6, {0, 1}, {one, zero});
  auto br = lie_bracket(a, b, 6);
  CHECK(br == LogDerivation::monomial(6, {1, 1}, {one, -one}));
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937 rng(17);
  for (int it = 0; it < 25; ++it) {
    K kind = it % 2 ? K::Rational : K::Gauss;
    auto a = random_nonlinear(rng, 2, 8, kind, 0, 3, 3);
    auto b = random_nonlinear(rng, 2, 8, kind, 0, 3, 3);
    auto c = random_nonlinear(rng, 2, 8, kind, 0, 3, 3);
    CHECK(lie_bracket(a, b, 8) == -lie_bracket(b, a, 8));
    auto jac = lie_bracket(lie_bracket(a, b, 8), c, 8) +
               lie_bracket(lie_bracket(b, c, 8), a, 8) +
               lie_bracket(lie_bracket(c, a, 8), b, 8);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("apply is a derivation (Leibniz)") {
  std::mt19937 rng(19);
  for (int it = 0; it < 25; ++it) {
    auto d = random_nonlinear(rng, 2, 8, K::Rational, 0, 3, 3);
    Series f = random_series(rng, 2, 8, K::Rational, 0, 4, 4);
    Series g = random_series(rng, 2, 8, K::Rational, 0, 4, 4);
    CHECK(d.apply(f * g, 8) == d.apply(f, 8) * g + f * d.apply(g, 8));
  }
}

TEST_CASE("bracket matches the commutator of actions") {
  std::mt19937 rng(23);
  for (int it = 0; it < 15; ++it) {
    auto a = random_nonlinear(rng, 2, 8, K::Rational, 0, 3, 3);
    auto b = random_nonlinear(rng, 2, 8, K::Rational, 0, 3, 3);
    Series f = random_series(rng, 2, 8, K::Rational, 0, 4, 4);
    Series lhs = lie_bracket(a, b, 8).apply(f, 8);
    Series rhs = a.apply(b.apply(f, 8), 8) - b.apply(a.apply(f, 8), 8);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vector components round trip") {
  std::mt19937 rng(29);
  for (int it = 0; it < 15; ++it) {
    auto d = random_nonlinear(rng, 3, 6, K::Rational, 0, 3, 4);
    auto back = LogDerivation::from_vector_components(d.vector_components(), 6);
    CHECK(back == d);
  }
  // y d/dx is rejected
  Series a0 = Series::variable(2, 6, 1, K::Rational);
  Series a1(2, 6, K::Rational);
  CHECK_THROWS_AS(LogDerivation::from_vector_components({a0, a1}, 6), NotLogarithmicError);
}

TEST_CASE("graded split by the resonance weight") {
  std::vector<Scalar> lam = {one, -one};
  auto d = LogDerivation::monomial(8, {1, 1}, {one, zero})   // resonant
         + LogDerivation::monomial(8, {2, 0}, {zero, one});  // weight 2
  auto [res, non] = graded_split(d, lam);
  CHECK(res == LogDerivation::monomial(8, {1, 1}, {one, zero}));
  CHECK(non == LogDerivation::monomial(8, {2, 0}, {zero, one}));
  // graded relation [S, d_alpha] = alpha d_alpha
  auto S = LogDerivation::diagonal(lam, 8);
  auto two = Scalar::integer(2, K::Rational);
  CHECK(lie_bracket(S, non, 8) == non.scale(two));
}

TEST_CASE("canonical log basis and expansion") {
  std::vector<Scalar> lam = {Scalar::gauss(0, 1), Scalar::gauss(0, -1),
                             Scalar::zero(K::Gauss)};
  LogBasis basis = LogBasis::canonical(lam);
  CHECK(basis.dim() == 3);
  CHECK(basis.mu(0) == lam);
  // coords of lambda itself are (1, 0, 0)
  auto c = basis.coords(lam);
  CHECK(c[0].is_one());
  CHECK(c[1].is_zero());
  CHECK(c[2].is_zero());

  // expansion of a random derivation reassembles exactly
  std::mt19937 rng(31);
  auto d = random_nonlinear(rng, 3, 6, K::Gauss, 0, 3, 5);
  auto gs = log_basis_expand(d, basis);
  LogDerivation sum(3, 6, K::Gauss);
  for (int j = 0; j < 3; ++j) {
    std::vector<Scalar> mu = basis.mu(j);
    LogDerivation Lj = LogDerivation::diagonal(mu, 6);
    sum = sum + Lj.mul_series(gs[j]);
  }
  CHECK(sum == d);
}

TEST_CASE("dependent basis vectors are rejected") {
  std::vector<std::vector<Scalar>> mu = {{one, one}, {one + one, one + one}};
  CHECK_THROWS_AS(LogBasis::from_vectors(mu), SingularBasisError);
}

TEST_CASE("wedge coefficient ideal of collinear fields vanishes") {
  auto S = LogDerivation::diagonal({one, -one}, 6);
  Series u = Series::monomial(2, 6, {1, 1}, one);
  auto R = S.mul_series(u);
  auto I = wedge_coeff_ideal(S, R, 6);
  CHECK(I.is_zero_ideal(6));
  // non-collinear pair has a nonzero wedge
  auto T = LogDerivation::monomial(6, {1, 1}, {one, one});
  CHECK(!wedge_coeff_ideal(S, T, 6).is_zero_ideal(6));
}

TEST_CASE("derivation rnorm") {
  auto d = LogDerivation::monomial(6, {1, 1}, {one, -Scalar::integer(2, K::Rational)});
  CHECK(d.rnorm(0.5).value == doctest::Approx(0.25 * 3).epsilon(1e-14));
}
