#include "brunonf/omega.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "brunonf/derivation.hpp"
#include "brunonf/series.hpp"

namespace brunonf {

OmegaMode omega_mode_from_string(const std::string& s) {
  if (s == "paper") return OmegaMode::Paper;
  if (s == "nonneg") return OmegaMode::NonNeg;
  throw Error("InvalidMode", "omega mode must be 'paper' or 'nonneg'");
}

std::string to_string(OmegaMode m) {
  return m == OmegaMode::Paper ? "paper" : "nonneg";
}

namespace {

// graded-lex on signed exponent vectors: |.|-norm first, then numeric lex
bool signed_graded_less(const Exponent& a, const Exponent& b) {
  int na = norm1(a), nb = norm1(b);
  if (na != nb) return na < nb;
  return a < b;
}

struct RunningMin {
  bool have = false;
  bool exact = false;
  mpq_class best2;  // squared modulus, exact kinds
  double bestf = 0.0;
  Exponent argmin;

  // candidates must arrive in graded-lex order for the tie-break to hold
  void offer(const Exponent& m, const Scalar& w) {
    if (w.kind() == ScalarKind::Float) {
      double v = w.abs();
      if (!have || v < bestf) {
        have = true;
        bestf = v;
        argmin = m;
      }
    } else {
      mpq_class v = w.abs2();
      if (!have || v < best2) {
        have = true;
        exact = true;
        best2 = v;
        argmin = m;
      }
    }
  }

  double value() const { return exact ? std::sqrt(best2.get_d()) : bestf; }
};

void shell_vectors(int n, int shell, bool allow_minus_one,
                   std::vector<Exponent>& out) {
  out.clear();
  std::vector<Exponent> nonneg;
  Exponent cur(n, 0);
  // nonneg compositions of a given total, lex order
  std::function<void(int, int, std::vector<Exponent>&)> rec =
      [&](int pos, int left, std::vector<Exponent>& sink) {
        if (pos == n - 1) {
          cur[pos] = left;
          sink.push_back(cur);
          return;
        }
        for (int v = left; v >= 0; --v) {  // unordered; sorted below
          cur[pos] = v;
          rec(pos + 1, left - v, sink);
        }
        cur[pos] = 0;
      };
  rec(0, shell, out);
  if (allow_minus_one && shell >= 1) {
    std::vector<Exponent> rest;
    Exponent save = cur;
    rec(0, shell - 1, rest);
    cur = save;
    for (auto& base : rest)
      for (int i = 0; i < n; ++i) {
        if (base[i] != 0) continue;  // slot must be free for the -1 entry
        Exponent m = base;
        m[i] = -1;
        out.push_back(std::move(m));
      }
  }
  std::sort(out.begin(), out.end(), signed_graded_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

bool real_pair(const std::vector<Scalar>& lambda) {
  if (lambda.size() != 2) return false;
  for (auto& c : lambda)
    if (std::abs(c.to_complex().imag()) > 1e-15) return false;
  return true;
}

// continued-fraction minimization of |a m1 - b m2| over 0 <= m1+m2 <= bound
// for real a, b > 0; returns candidates (value, argmin in the (m1, m2) chart).
double cf_min(double a, double b, long bound, Exponent& argmin) {
  double best = std::min(a, b);
  argmin = a <= b ? Exponent{1, 0} : Exponent{0, 1};
  double theta = b / a;
  // convergents p/q of theta: |a p - b q| small with m1 = p, m2 = q
  long p0 = 1, q0 = 0, p1 = (long)std::floor(theta), q1 = 1;
  double frac = theta;
  for (int it = 0; it < 64; ++it) {
    if (p1 + q1 > bound) {
      // largest semiconvergent still inside the ball
      long step = p0 + q0 > 0 ? (bound - p1 - q1 + p0 + q0) / (p0 + q0) : 0;
      (void)step;
      break;
    }
    if (p1 > 0 || q1 > 0) {
      double v = std::abs(a * (double)p1 - b * (double)q1);
      if (v > 1e-300 && v < best) {
        best = v;
        argmin = {(int)p1, (int)q1};
      }
    }
    double rem = frac - std::floor(frac);
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
    long digit = (long)std::floor(frac);
    long p2 = digit * p1 + p0, q2 = digit * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return best;
}

bool cf_fast_path(const std::vector<Scalar>& lambda, long bound, OmegaMode mode,
                  RunningMin& min) {
  if (!real_pair(lambda)) return false;
  double l0 = lambda[0].to_double(), l1 = lambda[1].to_double();
  if (l0 == 0.0 || l1 == 0.0) return false;
  auto offer = [&](double v, Exponent m) {
    if (v <= 0) return;
    if (!min.have || v < min.bestf) {
      min.have = true;
      min.bestf = v;
      min.argmin = std::move(m);
    }
  };
  if (l0 * l1 < 0) {
    double a = std::abs(l0), b = std::abs(l1);
    Exponent arg;
    double v = cf_min(a, b, bound, arg);
    offer(v, arg);
    if (mode == OmegaMode::Paper) {
      offer(std::abs(l0), {-1, 0});
      offer(std::abs(l1), {0, -1});
    }
  } else {
    // same sign: nonnegative combinations are bounded below by min |l_i|
    offer(std::min(std::abs(l0), std::abs(l1)),
          std::abs(l0) <= std::abs(l1) ? Exponent{1, 0} : Exponent{0, 1});
    if (mode == OmegaMode::Paper) {
      Exponent arg;
      double v = cf_min(std::abs(l0), std::abs(l1), bound, arg);
      // one -1 entry: |l0 m1 - l1| or |l1 m2 - l0| style combinations
      offer(v, {arg[0], -arg[1]});
    }
  }
  return true;
}

}  // namespace

OmegaReport omega_sequence(const std::vector<Scalar>& lambda, int K, OmegaMode mode,
                           long cap) {
  int n = (int)lambda.size();
  bool nonzero = false;
  for (auto& c : lambda) nonzero = nonzero || !c.is_zero();
  if (n == 0 || !nonzero) throw ZeroLambdaError();
  if (K < 0) throw Error("InvalidArgument", "kmax must be >= 0");

  OmegaReport rep;
  rep.lambda = lambda;
  rep.mode = mode;
  bool is_float = lambda[0].kind() == ScalarKind::Float;

  RunningMin min;
  std::vector<Exponent> shell;
  long done = 0;
  for (int k = 0; k <= K; ++k) {
    long bound = 1L << k;
    if (bound > cap) {
      RunningMin fast = min;
      if (!is_float || !cf_fast_path(lambda, bound, mode, fast))
        throw BudgetExceededError(cap);
      OmegaEntry e;
      e.k = k;
      e.omega = fast.value();
      e.argmin = fast.argmin;
      e.exact = false;
      rep.entries.push_back(std::move(e));
      continue;
    }
    for (long s = done + 1; s <= bound; ++s) {
      shell_vectors(n, (int)s, mode == OmegaMode::Paper, shell);
      for (auto& m : shell) {
        Scalar w = weight(lambda, m);
        if (w.is_zero(1.0 + norm1(m))) continue;  // resonant
        min.offer(m, w);
      }
    }
    done = bound;
    if (!min.have) throw Error("AllResonant", "no nonresonant index in the ball");
    OmegaEntry e;
    e.k = k;
    e.omega = min.value();
    e.argmin = min.argmin;
    e.exact = min.exact;
    if (min.exact) e.omega2 = min.best2;
    rep.entries.push_back(std::move(e));
  }
  bruno_sum(rep);
  return rep;
}

void bruno_sum(OmegaReport& report) {
  report.sigma.clear();
  double acc = 0.0;
  bool degenerate = false;
  for (auto& e : report.entries) {
    if (e.omega <= 0.0) {
      degenerate = true;
      break;
    }
    acc += -std::log(e.omega) / std::pow(2.0, e.k);
    report.sigma.push_back(acc);
  }
  if (degenerate || report.entries.empty()) {
    report.verdict = "Undetermined";
    return;
  }
  if (report.lambda[0].kind() != ScalarKind::Float) {
    // Gaussian-rational values lie in (1/q)Z[i]: omega_k is bounded below by
    // 1/q, hence eventually constant and the tail sums
    report.verdict = "SatisfiedCertified";
    return;
  }
  size_t n = report.entries.size();
  if (n < 3) {
    report.verdict = "Undetermined";
    return;
  }
  auto inc = [&](size_t i) {
    return -std::log(report.entries[i].omega) / std::pow(2.0, report.entries[i].k);
  };
  bool shrinking = inc(n - 1) <= inc(n - 2) + 1e-12 && inc(n - 2) <= inc(n - 3) + 1e-12;
  report.verdict = (shrinking && inc(n - 1) < 0.1) ? "SatisfiedHeuristic" : "Undetermined";
}

RadiusSchedule radius_schedule(const std::vector<double>& omega, double C, int k0,
                               double rho, int steps) {
  if (omega.empty()) throw Error("InvalidArgument", "empty omega table");
  RadiusSchedule out;
  if (rho == 0.0) {
    out.rho.assign(steps + 1, 0.0);
    return out;
  }
  auto om = [&](int k) {
    return k < (int)omega.size() ? omega[k] : omega.back();
  };
  double log2v = std::log(2.0);
  double logacc = std::log(rho);
  for (int s = 0; s <= steps; ++s) {
    int k = k0 + s;
    logacc += (C / std::pow(2.0, k)) * (std::log(om(k)) - std::log(C) - 2.0 * k * log2v);
    out.rho.push_back(std::exp(logacc));
  }
  // constant-omega tail in closed form: sum_{k>T} 2^-k = 2^-T,
  // sum_{k>T} k 2^-k = (T+2) 2^-T
  int T = k0 + steps;
  double tail = C * (std::log(om(T)) - std::log(C)) * std::pow(2.0, -T) -
                2.0 * C * log2v * (T + 2) * std::pow(2.0, -T);
  out.limit = std::exp(logacc + tail);
  out.positive_limit = std::isfinite(out.limit) && out.limit > 0.0;
  return out;
}

EstimateReport estimate_diagnostics(const SPerturbation& d,
                                    const NormalizationTrace& trace, double C,
                                    int k0) {
  EstimateReport rep;
  rep.C = C;
  rep.k0 = k0;
  LogBasis basis = LogBasis::canonical(d.lambda);
  rep.delta = std::min(1.0, 1.0 / (2.0 * basis.d()));

  int kmax = k0;
  for (auto& st : trace.steps) kmax = std::max(kmax, st.k);
  std::vector<double> omega;
  try {
    OmegaReport om = omega_sequence(d.lambda, kmax, OmegaMode::Paper, 1L << 20);
    for (auto& e : om.entries) omega.push_back(e.omega);
  } catch (const Error&) {
    omega.assign(kmax + 1, 1.0);  // diagnostics only; fall back to the trivial table
  }
  RadiusSchedule sched = radius_schedule(omega, C, k0, 1.0, (int)trace.steps.size());

  for (size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& st = trace.steps[s];
    StepEstimate e;
    e.k = st.k;
    e.radius = sched.rho[std::min(s, sched.rho.size() - 1)];
    e.u_norm = st.U.rnorm(e.radius).value;
    e.u_bound = std::pow(2.0, -st.k);
    e.u_ok = e.u_norm <= e.u_bound + 1e-12;
    e.residual_norm = st.residual.rnorm(e.radius).value;
    e.residual_ok = e.residual_norm <= rep.delta + 1e-12;
    rep.steps.push_back(e);
  }
  return rep;
}

}  // namespace brunonf
