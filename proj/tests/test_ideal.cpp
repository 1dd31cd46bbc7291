#include <doctest.h>

#include "brunonf/derivation.hpp"
#include "brunonf/ideal.hpp"
#include "helpers.hpp"

using namespace brunonf;
using testutil::random_series;
using K = ScalarKind;

namespace {

const Scalar one = Scalar::one(K::Rational);

TruncatedIdeal cone_ideal(int order, K kind) {
  Series gen(3, order, kind);
  gen.add_term({1, 1, 0}, Scalar::one(kind));
  gen.add_term({0, 0, 2}, -Scalar::one(kind));
  return TruncatedIdeal(3, order, kind, {gen});
}

}  // namespace

TEST_CASE("membership in <xy - z^2>") {
  auto I = cone_ideal(8, K::Rational);
  Series in(3, 8, K::Rational);
  in.add_term({2, 2, 0}, one);
  in.add_term({1, 1, 2}, -one);  // xy (xy - z^2)
  CHECK(I.contains(in, 8));
  Series out = Series::variable(3, 8, 0, K::Rational);
  CHECK(!I.contains(out, 8));
  Series zmix(3, 8, K::Rational);  // z^2 alone is not inside
  zmix.add_term({0, 0, 2}, one);
  CHECK(!I.contains(zmix, 8));
}

TEST_CASE("reduce gives the canonical coset representative") {
  auto I = cone_ideal(8, K::Rational);
  std::mt19937 rng(37);
  for (int it = 0; it < 20; ++it) {
    Series f = random_series(rng, 3, 8, K::Rational, 0, 5, 6);
    Series r = I.reduce(f, 8);
    CHECK(I.contains(f - r, 8));
    CHECK(I.contains(f, 8) == r.is_zero());
    // idempotent
    CHECK(I.reduce(r, 8) == r);
    // class function: shifting by a multiple of the generator keeps the rep
    Series h = random_series(rng, 3, 8, K::Rational, 0, 4, 4);
    CHECK(I.reduce(f + h * I.generators()[0], 8) == r);
  }
}

TEST_CASE("slice basis ranks grow with the degree") {
  auto I = cone_ideal(8, K::Rational);
  const auto& s2 = I.graded_slice_basis(2);
  const auto& s4 = I.graded_slice_basis(4);
  CHECK(s2.rank() == 1);  // just the generator
  CHECK(s4.rank() > s2.rank());
  CHECK_THROWS_AS(I.graded_slice_basis(8), Error);
}

TEST_CASE("pullback round trip") {
  std::mt19937 rng(41);
  for (int it = 0; it < 10; ++it) {
    auto I = cone_ideal(8, K::Rational);
    Series p0 = Series::variable(3, 8, 0, K::Rational) +
                random_series(rng, 3, 8, K::Rational, 2, 3, 2);
    Series p1 = Series::variable(3, 8, 1, K::Rational) +
                random_series(rng, 3, 8, K::Rational, 2, 3, 2);
    Series p2 = Series::variable(3, 8, 2, K::Rational) +
                random_series(rng, 3, 8, K::Rational, 2, 3, 2);
    Automorphism phi = Automorphism::from_images({p0, p1, p2});
    auto back = I.pullback(phi, 8).pullback(phi.inverse(8), 8);
    CHECK(ideal_equal(back, I, 8));
  }
}

TEST_CASE("linear pullback of the cone") {
  // phi(x,y,z) = (x+iy, x-iy, z): xy - z^2 becomes x^2 + y^2 - z^2
  auto I = cone_ideal(8, K::Gauss);
  auto i1 = Scalar::imaginary_unit(K::Gauss);
  Series p0 = Series::variable(3, 8, 0, K::Gauss) +
              Series::variable(3, 8, 1, K::Gauss).scale(i1);
  Series p1 = Series::variable(3, 8, 0, K::Gauss) -
              Series::variable(3, 8, 1, K::Gauss).scale(i1);
  Series p2 = Series::variable(3, 8, 2, K::Gauss);
  auto J = I.pullback(Automorphism::from_images({p0, p1, p2}), 8);
  Series real_cone(3, 8, K::Gauss);
  real_cone.add_term({2, 0, 0}, Scalar::one(K::Gauss));
  real_cone.add_term({0, 2, 0}, Scalar::one(K::Gauss));
  real_cone.add_term({0, 0, 2}, -Scalar::one(K::Gauss));
  CHECK(ideal_equal(J, TruncatedIdeal(3, 8, K::Gauss, {real_cone}), 8));
}

TEST_CASE("sum and equality") {
  auto I = cone_ideal(8, K::Rational);
  Series x = Series::variable(3, 8, 0, K::Rational);
  TruncatedIdeal X(3, 8, K::Rational, {x});
  auto S = I.sum(X, 8);
  CHECK(S.contains(x, 8));
  CHECK(S.contains(I.generators()[0], 8));
  CHECK(!ideal_equal(S, I, 8));
  CHECK(ideal_equal(I.sum(I, 8), I, 8));
  // <xy - z^2, z^2> = <xy, z^2>
  Series z2 = Series::monomial(3, 8, {0, 0, 2}, one);
  Series xy = Series::monomial(3, 8, {1, 1, 0}, one);
  CHECK(ideal_equal(I.sum(TruncatedIdeal(3, 8, K::Rational, {z2}), 8),
                    TruncatedIdeal(3, 8, K::Rational, {xy, z2}), 8));
}

TEST_CASE("differential closure is a stable fixed point") {
  auto lamg = std::vector<Scalar>{Scalar::gauss(0, 1), Scalar::gauss(0, -1),
                                  Scalar::zero(K::Gauss)};
  auto i1 = Scalar::one(K::Gauss);
  auto S = LogDerivation::diagonal(lamg, 8);
  auto d = S + LogDerivation::monomial(8, {1, 1, 0}, {i1, i1, i1})
             - LogDerivation::monomial(8, {0, 0, 2}, {i1, i1, i1});
  auto I = cone_ideal(8, K::Gauss);
  auto closed = I.differential_closure(d, 8);
  CHECK(ideal_equal(closed, I, 8));  // the cone is invariant under the S5 field
  // and the closure is idempotent in general
  Series x = Series::variable(3, 8, 0, K::Gauss);
  auto J = TruncatedIdeal(3, 8, K::Gauss, {x}).differential_closure(d, 8);
  CHECK(ideal_equal(J.differential_closure(d, 8), J, 8));
  for (auto& g : J.generators()) CHECK(J.contains(d.apply(g, 8), 8));
}

TEST_CASE("zero ideal") {
  TruncatedIdeal Z(2, 6, K::Rational);
  CHECK(Z.is_zero_ideal(6));
  Series f = Series::variable(2, 6, 0, K::Rational);
  CHECK(!Z.contains(f, 6));
  CHECK(Z.reduce(f, 6) == f);
}
