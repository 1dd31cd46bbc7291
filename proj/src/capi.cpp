#include "brunonf/capi.h"

#include <cmath>
#include <cstring>
#include <string>

#include "brunonf/bruno.hpp"
#include "brunonf/field_parser.hpp"
#include "brunonf/omega.hpp"
#include "brunonf/report.hpp"

using namespace brunonf;

struct bnf_problem {
  ProblemSpec spec;
};

struct bnf_report {
  std::string json;
};

namespace {

void write_error(char* buf, size_t len, const std::string& code,
                 const std::string& msg) {
  if (!buf || len == 0) return;
  Json e{{"code", code}, {"message", msg}};
  std::string s = e.dump();
  size_t n = std::min(s.size(), len - 1);
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

bnf_status status_for(const std::string& code) {
  if (code == "SyntaxError" || code == "UnknownVariable" ||
      code == "NotLogarithmic" || code == "MixedScalars")
    return BNF_ERR_PARSE;
  if (code == "InvalidArgument" || code == "InvalidOrder" || code == "InvalidMode" ||
      code == "InvalidCommand" || code == "InvalidOptions")
    return BNF_ERR_INVALID;
  return BNF_ERR_MATH;
}

template <typename Fn>
bnf_status guarded(char* err_buf, size_t err_len, Fn&& fn) {
  try {
    fn();
    return BNF_OK;
  } catch (const Error& e) {
    write_error(err_buf, err_len, e.code(), e.what());
    return status_for(e.code());
  } catch (const std::exception& e) {
    write_error(err_buf, err_len, "Internal", e.what());
    return BNF_ERR_MATH;
  }
}

bnf_report* wrap(Json j) {
  auto* r = new bnf_report;
  r->json = j.dump(2);
  r->json.push_back('\n');
  return r;
}

int opt_int(const Json& o, const char* key, int dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_number_integer())
    throw Error("InvalidOptions", std::string("option '") + key + "' must be an integer");
  return v.get<int>();
}

double opt_double(const Json& o, const char* key, double dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_number())
    throw Error("InvalidOptions", std::string("option '") + key + "' must be a number");
  return v.get<double>();
}

std::string opt_str(const Json& o, const char* key, const std::string& dflt) {
  if (!o.contains(key)) return dflt;
  const auto& v = o.at(key);
  if (!v.is_string())
    throw Error("InvalidOptions", std::string("option '") + key + "' must be a string");
  return v.get<std::string>();
}

Json run_check(const ProblemSpec& spec) {
  Json body;
  body["vars"] = spec.vars;
  body["scalars"] = to_string(spec.kind);
  body["order"] = spec.order;
  body["field"] = json_derivation(spec.field, spec.vars);
  body["logarithmic"] = true;  // enforced by the parser

  std::vector<Scalar> lin = spec.field.linear_part();
  bool nonzero = false;
  for (auto& c : lin) nonzero = nonzero || !c.is_zero();
  body["linear_part_nonzero"] = nonzero;

  // print/parse round trip
  std::string printed = format_field(spec.field, spec.vars);
  std::string hdr = "vars:";
  for (size_t i = 0; i < spec.vars.size(); ++i)
    hdr += (i ? "," : " ") + spec.vars[i];
  hdr += "\nscalars: " + std::string(spec.kind == ScalarKind::Rational ? "rational"
                                     : spec.kind == ScalarKind::Gauss  ? "gauss"
                                                                       : "float");
  hdr += "\ntruncation: " + std::to_string(spec.order) + "\n";
  ProblemSpec back = parse_field(hdr + printed);
  body["roundtrip"] = back.field == spec.field;
  body["ok"] = nonzero && body["roundtrip"].get<bool>();
  return make_report("check", std::move(body));
}

Json run_certify(const ProblemSpec& spec, const Json& opts) {
  int N = opt_int(opts, "order", spec.order);
  double C = opt_double(opts, "C", 3.0);
  int k0 = opt_int(opts, "k0", 1);
  std::string method = opt_str(opts, "method", "newton");

  SPerturbation d = SPerturbation::from_derivation(spec.field.truncate(N + 1));
  d.order = N;
  d.R = d.R.truncate(N);
  BrunoReport br = bruno_ideal(d, N, method);
  CertificateResult cert = analyticity_certificate(d, N);

  Json body;
  body["order"] = N;
  body["bruno"] = json_bruno(br, spec.vars);
  body["certificate"] = json_certificate(cert, spec.vars);

  int kmax = std::max(k0, (int)std::ceil(std::log2((double)N)));
  try {
    OmegaReport om = omega_sequence(d.lambda, kmax, OmegaMode::Paper);
    body["omega"] = json_omega(om);
    std::vector<double> table;
    for (auto& e : om.entries) table.push_back(e.omega);
    body["radius_schedule"] = json_schedule(radius_schedule(table, C, k0, 1.0));
  } catch (const Error& e) {
    body["omega"] = Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}};
  }
  body["estimates"] = json_estimates(estimate_diagnostics(d, br.trace, C, k0));
  return make_report("certify", std::move(body));
}

Json dispatch(const ProblemSpec& spec, const std::string& command, const Json& opts) {
  if (command == "check") return run_check(spec);
  if (command == "certify") return run_certify(spec, opts);

  if (command == "normalize" || command == "bruno-ideal") {
    int N = opt_int(opts, "order", spec.order);
    std::string method = opt_str(opts, "method", "newton");
    if (N < 2 || N > spec.order)
      throw Error("InvalidOrder", "order must be in [2, truncation]");
    SPerturbation d = SPerturbation::from_derivation(spec.field.truncate(N + 1));
    d.order = N;
    d.R = d.R.truncate(N);
    if (command == "bruno-ideal")
      return make_report("bruno-ideal", json_bruno(bruno_ideal(d, N, method), spec.vars));
    NormalizationResult r;
    if (method == "newton") r = newton_normalize(d, N);
    else if (method == "graded") r = graded_normalize(d, N);
    else throw Error("InvalidMode", "method must be 'newton' or 'graded'");
    return make_report("normalize", json_normalization(r, spec.vars));
  }

  if (command == "oracle-compare") {
    int jet = opt_int(opts, "jet", 8);
    if (jet < 2 || jet > spec.order)
      throw Error("InvalidOrder", "jet must be in [2, truncation]");
    SPerturbation d = SPerturbation::from_derivation(spec.field.truncate(jet + 1));
    d.order = jet;
    d.R = d.R.truncate(jet);
    return make_report("oracle-compare",
                       json_comparison(bruno_oracle_compare(d, jet), spec.vars));
  }

  throw Error("InvalidCommand", "unknown command '" + command + "'");
}

}  // namespace

extern "C" {

const char* bnf_version(void) { return "brunonf 1.0.0"; }

bnf_status bnf_problem_parse(const char* text, bnf_problem** out,
                             char* err_buf, size_t err_len) {
  if (!text || !out) {
    write_error(err_buf, err_len, "InvalidArgument", "null argument");
    return BNF_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(err_buf, err_len, [&] {
    auto* p = new bnf_problem;
    try {
      p->spec = parse_field(text);
    } catch (...) {
      delete p;
      throw;
    }
    *out = p;
  });
}

void bnf_problem_free(bnf_problem* p) { delete p; }

bnf_status bnf_run(const bnf_problem* p, const char* command,
                   const char* options_json, bnf_report** out,
                   char* err_buf, size_t err_len) {
  if (!p || !command || !out) {
    write_error(err_buf, err_len, "InvalidArgument", "null argument");
    return BNF_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(err_buf, err_len, [&] {
    Json opts = Json::object();
    if (options_json && *options_json) {
      opts = Json::parse(options_json, nullptr, false);
      if (opts.is_discarded() || !opts.is_object())
        throw Error("InvalidOptions", "options must be a JSON object");
    }
    double saved_eps = Scalar::float_epsilon;
    if (opts.contains("epsilon"))
      Scalar::float_epsilon = opt_double(opts, "epsilon", saved_eps);
    try {
      *out = wrap(dispatch(p->spec, command, opts));
    } catch (...) {
      Scalar::float_epsilon = saved_eps;
      throw;
    }
    Scalar::float_epsilon = saved_eps;
  });
}

bnf_status bnf_omega(const char* lambda, int kmax, const char* mode, long cap,
                     bnf_report** out, char* err_buf, size_t err_len) {
  if (!lambda || !out) {
    write_error(err_buf, err_len, "InvalidArgument", "null argument");
    return BNF_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(err_buf, err_len, [&] {
    OmegaMode m = omega_mode_from_string(mode ? mode : "paper");
    OmegaReport rep = omega_sequence(parse_lambda(lambda), kmax, m,
                                     cap > 0 ? cap : 4096);
    *out = wrap(make_report("omega", json_omega(rep)));
  });
}

const char* bnf_report_json(const bnf_report* r) {
  return r ? r->json.c_str() : nullptr;
}

void bnf_report_free(bnf_report* r) { delete r; }

}  // extern "C"
