#ifndef BRUNONF_BRUNO_HPP
#define BRUNONF_BRUNO_HPP

#include <string>
#include <vector>

#include "brunonf/ideal.hpp"
#include "brunonf/normalize.hpp"

namespace brunonf {

struct BrunoReport {
  SPerturbation delta;             // normalized field
  Automorphism psi;                // coordinate map: delta(f) o psi = d(f o psi)
  std::vector<Series> gens_delta;  // g_1..g_{n-1} in normalized coordinates
  std::vector<Series> gens_input;  // pullbacks g_j o psi, generating B(input)
  TruncatedIdeal ideal_delta;
  TruncatedIdeal ideal_input;
  Series f;   // full unit coefficient of delta - S on L(lambda)
  Series f0;  // canonical coset representative of f modulo B(delta)
  bool f_minus_f0_in_ideal = false;
  std::vector<bool> gen_in_ideal;  // Cor. membership flags for the g_j
  bool a_condition = false;        // all g_j = 0 mod m^N
  std::string method;
  NormalizationTrace trace;
};

// Generators of the Bruno ideal of a field already in normal form, read off
// the logarithmic-basis expansion delta - S = f L(mu_0) + sum_j g_j L(mu_j).
TruncatedIdeal bruno_ideal_normal_form(const SPerturbation& delta,
                                       const LogBasis& basis, int N);

// Full pipeline: normalize, expand, pull the generators back to the input
// coordinates, evaluate the membership flags and the A-condition verdict.
BrunoReport bruno_ideal(const SPerturbation& d, int N,
                        const std::string& method = "newton");

// Additive Jordan-Chevalley decomposition of the derivation acting on the jet
// space of order `jet` (monomials of degree 1..jet-1). Exact scalars only.
std::pair<LogDerivation, LogDerivation> chevalley_jet(const LogDerivation& d, int jet);

struct OracleComparison {
  TruncatedIdeal wedge_route;     // Gamma(ss ^ nilp) from the jet matrix
  TruncatedIdeal pullback_route;  // normalize-and-pullback B(d)
  int rank_wedge = 0;
  int rank_pullback = 0;
  bool equal = false;
};

OracleComparison bruno_oracle_compare(const SPerturbation& d, int jet);

struct CertificateResult {
  TruncatedIdeal ideal;  // S[Gamma(S^R) + Gamma([S,R])]
  bool normal_form = false;
  bool equals_bruno = false;  // only asserted when normal_form
};

CertificateResult analyticity_certificate(const SPerturbation& d, int N);

}  // namespace brunonf

#endif
