#ifndef BRUNONF_OMEGA_HPP
#define BRUNONF_OMEGA_HPP

#include <string>
#include <vector>

#include "brunonf/exponent.hpp"
#include "brunonf/normalize.hpp"
#include "brunonf/scalar.hpp"

namespace brunonf {

// Paper mode allows one entry equal to -1 per index vector (the M_i sets);
// NonNeg restricts to the exponents met by logarithmic normalization.
enum class OmegaMode { Paper, NonNeg };

OmegaMode omega_mode_from_string(const std::string& s);
std::string to_string(OmegaMode m);

struct OmegaEntry {
  int k = 0;
  double omega = 0.0;   // min |<lambda, m>| over the ball ||m|| <= 2^k
  Exponent argmin;      // graded-lex smallest minimizer
  bool exact = false;   // exact kinds: omega2 below is the exact |.|^2
  mpq_class omega2;
};

struct OmegaReport {
  std::vector<Scalar> lambda;
  OmegaMode mode = OmegaMode::Paper;
  std::vector<OmegaEntry> entries;
  std::vector<double> sigma;  // partial sums of -log(omega_k)/2^k
  std::string verdict;        // SatisfiedCertified | SatisfiedHeuristic | Undetermined
};

// omega_k for k = 0..K. Exhaustive shell enumeration with a hard cap on the
// shell radius; for two real eigenvalues of opposite sign a continued-fraction
// fast path takes over beyond the cap.
OmegaReport omega_sequence(const std::vector<Scalar>& lambda, int K, OmegaMode mode,
                           long cap = 4096);

// Fills sigma and the summability verdict.
void bruno_sum(OmegaReport& report);

struct RadiusSchedule {
  std::vector<double> rho;  // rho_s, s = 0..
  double limit = 0.0;       // extrapolated rho-bar
  bool positive_limit = false;
};

// rho_s = rho * prod_{k=k0}^{k0+s} (omega_k / (C 2^{2k}))^{C / 2^k}; an omega
// table shorter than k0+steps is extended by its last value.
RadiusSchedule radius_schedule(const std::vector<double>& omega, double C, int k0,
                               double rho, int steps = 20);

struct StepEstimate {
  int k = 0;
  double radius = 0.0;
  double u_norm = 0.0;
  double u_bound = 0.0;  // 1/2^k
  bool u_ok = false;
  double residual_norm = 0.0;
  bool residual_ok = false;  // residual <= Delta
};

struct EstimateReport {
  double C = 3.0;
  int k0 = 0;
  double delta = 1.0;  // Delta = min{1, 1/2d}
  std::vector<StepEstimate> steps;
};

// Evaluates the truncated majorant norms of the trace against the paper's
// per-step bounds at the scheduled radii; informational (truncated norms are
// lower bounds of the germ norms).
EstimateReport estimate_diagnostics(const SPerturbation& d,
                                    const NormalizationTrace& trace, double C,
                                    int k0);

}  // namespace brunonf

#endif
