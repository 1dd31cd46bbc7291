#include <doctest.h>

#include <cmath>

#include "brunonf/omega.hpp"

using namespace brunonf;
using K = ScalarKind;

namespace {
const Scalar one = Scalar::one(K::Rational);

// brute-force minima for lambda = (1, -phi), frozen from exhaustive enumeration
const double kGoldenOmega[] = {
    1.0, 0.6180339887498949, 0.3819660112501051, 0.1458980337503153,
    0.09016994374947451, 0.05572809000084078, 0.021286236252208823,
    0.013155617496423133, 0.005024998740651654};
}  // namespace

TEST_CASE("resonant integer spectrum has omega = 1") {
  for (auto mode : {OmegaMode::Paper, OmegaMode::NonNeg}) {
    auto rep = omega_sequence({one, -one}, 8, mode);
    REQUIRE(rep.entries.size() == 9);
    for (auto& e : rep.entries) {
      CHECK(e.exact);
      CHECK(e.omega == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(rep.verdict == "SatisfiedCertified");
    CHECK(rep.sigma.back() == 0.0);
  }
}

TEST_CASE("nonresonant Gaussian spectrum (1, i)") {
  std::vector<Scalar> lg = {Scalar::one(K::Gauss), Scalar::imaginary_unit(K::Gauss)};
  for (auto mode : {OmegaMode::Paper, OmegaMode::NonNeg}) {
    auto rep = omega_sequence(lg, 8, mode);
    for (auto& e : rep.entries)
      CHECK(e.omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rep.verdict == "SatisfiedCertified");
  }
}

TEST_CASE("golden-ratio spectrum matches the frozen table") {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Scalar> lg = {Scalar::cfloat({1, 0}), Scalar::cfloat({-phi, 0})};
  auto rep = omega_sequence(lg, 8, OmegaMode::Paper);
  for (int k = 0; k <= 8; ++k)
    CHECK(rep.entries[k].omega ==
          doctest::Approx(kGoldenOmega[k]).epsilon(1e-12));
  CHECK(rep.verdict == "SatisfiedHeuristic");
  // argmins are consecutive Fibonacci pairs from k = 1 on
  CHECK(rep.entries[1].argmin == Exponent{1, 1});
  CHECK(rep.entries[3].argmin == Exponent{5, 3});
  CHECK(rep.entries[8].argmin == Exponent{144, 89});

  auto rep2 = omega_sequence(lg, 8, OmegaMode::NonNeg);
  for (int k = 0; k <= 8; ++k)
    CHECK(rep2.entries[k].omega ==
          doctest::Approx(kGoldenOmega[k]).epsilon(1e-12));
}

TEST_CASE("continued-fraction fast path agrees with enumeration") {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Scalar> lg = {Scalar::cfloat({1, 0}), Scalar::cfloat({-phi, 0})};
  auto fast = omega_sequence(lg, 10, OmegaMode::Paper, 128);
  auto full = omega_sequence(lg, 10, OmegaMode::Paper, 4096);
  for (int k = 8; k <= 10; ++k)
    CHECK(fast.entries[k].omega ==
          doctest::Approx(full.entries[k].omega).epsilon(1e-9));
}

TEST_CASE("exact spectra beyond the cap are a budget error") {
  CHECK_THROWS_AS(omega_sequence({one, -one}, 20, OmegaMode::Paper, 64),
                  BudgetExceededError);
}

TEST_CASE("zero spectrum is rejected") {
  CHECK_THROWS_AS(omega_sequence({Scalar::zero(K::Rational)}, 2, OmegaMode::Paper),
                  ZeroLambdaError);
}

TEST_CASE("radius schedule with trivial omega table") {
  std::vector<double> ones(9, 1.0);
  auto s = radius_schedule(ones, 3.0, 1, 1.0, 20);
  REQUIRE(s.rho.size() == 21);
  CHECK(s.rho[0] == doctest::Approx(std::pow(1.0 / 12.0, 1.5)).epsilon(1e-12));
  for (size_t i = 1; i < s.rho.size(); ++i) {
    CHECK(s.rho[i] > 0.0);
    CHECK(s.rho[i] < s.rho[i - 1]);
  }
  // geometric convergence: the per-step ratios approach 1 monotonically and
  // the sequence is Cauchy well past 1e-6 by s = 20
  CHECK(std::abs(s.rho[20] - s.rho[19]) < 1e-6);
  for (int i = 2; i <= 20; ++i)
    CHECK(std::abs(s.rho[i] / s.rho[i - 1] - 1.0) <
          std::abs(s.rho[i - 1] / s.rho[i - 2] - 1.0));
  CHECK(s.positive_limit);
  CHECK(s.limit > 0.0);
  CHECK(s.limit < s.rho.back());
}

TEST_CASE("radius schedule degenerate cases") {
  auto z = radius_schedule({1.0}, 3.0, 1, 0.0, 5);
  for (double v : z.rho) CHECK(v == 0.0);
  CHECK(!z.positive_limit);
  CHECK_THROWS_AS(radius_schedule({}, 3.0, 1, 1.0), Error);
}

TEST_CASE("mode strings") {
  CHECK(omega_mode_from_string("paper") == OmegaMode::Paper);
  CHECK(omega_mode_from_string("nonneg") == OmegaMode::NonNeg);
  CHECK_THROWS_AS(omega_mode_from_string("bogus"), Error);
  CHECK(to_string(OmegaMode::Paper) == "paper");
}

TEST_CASE("estimate diagnostics run on a normalization trace") {
  SPerturbation p;
  p.lambda = {one, -one};
  p.order = 8;
  p.R = LogDerivation::monomial(8, {1, 0}, {one, Scalar::zero(K::Rational)})
            .scale(Scalar::rational(mpq_class(1, 16)));
  auto r = newton_normalize(p, 8);
  auto est = estimate_diagnostics(p, r.trace, 3.0, 1);
  double d = LogBasis::canonical(p.lambda).d();
  CHECK(est.delta == doctest::Approx(std::min(1.0, 1.0 / (2.0 * d))).epsilon(1e-12));
  REQUIRE(est.steps.size() == r.trace.steps.size());
  for (auto& st : est.steps) {
    CHECK(st.radius > 0.0);
    CHECK(st.u_bound > 0.0);
  }
}
