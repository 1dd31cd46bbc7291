#include "brunonf/report.hpp"

#include <cstdio>

namespace brunonf {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json json_scalar(const Scalar& c) { return c.str(); }

namespace {

Json json_exponent(const Exponent& m) {
  Json a = Json::array();
  for (int e : m) a.push_back(e);
  return a;
}

Json json_scalar_vector(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (auto& c : v) a.push_back(json_scalar(c));
  return a;
}

}  // namespace

Json json_series(const Series& f, const std::vector<std::string>& vars) {
  Json out;
  out["dim"] = f.dim();
  out["order"] = f.order();
  Json terms = Json::array();
  for (auto& [m, c] : f.terms())
    terms.push_back(Json{{"exp", json_exponent(m)}, {"coeff", json_scalar(c)}});
  out["terms"] = std::move(terms);
  out["str"] = f.str(vars);
  return out;
}

Json json_derivation(const LogDerivation& d, const std::vector<std::string>& vars) {
  Json out;
  out["dim"] = d.dim();
  out["order"] = d.order();
  Json terms = Json::array();
  for (auto& [m, lam] : d.terms())
    terms.push_back(Json{{"exp", json_exponent(m)}, {"lambda", json_scalar_vector(lam)}});
  out["terms"] = std::move(terms);
  out["str"] = d.str(vars);
  return out;
}

Json json_automorphism(const Automorphism& phi, const std::vector<std::string>& vars) {
  Json out;
  out["dim"] = phi.dim();
  out["order"] = phi.order();
  out["identity"] = phi.is_identity();
  Json imgs = Json::array();
  for (auto& f : phi.images()) imgs.push_back(json_series(f, vars));
  out["images"] = std::move(imgs);
  return out;
}

Json json_ideal(const TruncatedIdeal& I, const std::vector<std::string>& vars) {
  Json out;
  out["dim"] = I.dim();
  out["order"] = I.order();
  Json gens = Json::array();
  for (auto& g : I.generators()) gens.push_back(json_series(g, vars));
  out["generators"] = std::move(gens);
  return out;
}

Json json_trace(const NormalizationTrace& t, const std::vector<std::string>& vars) {
  Json steps = Json::array();
  for (auto& st : t.steps) {
    Json s;
    s["k"] = st.k;
    s["u_ord"] = st.u_ord;
    s["u_deg"] = st.u_deg;
    s["U"] = json_derivation(st.U, vars);
    s["f0"] = json_series(st.f0, vars);
    steps.push_back(std::move(s));
  }
  return steps;
}

Json json_normalization(const NormalizationResult& r,
                        const std::vector<std::string>& vars) {
  Json out;
  out["lambda"] = json_scalar_vector(r.delta.lambda);
  out["order"] = r.delta.order;
  out["delta"] = json_derivation(r.delta.field(), vars);
  out["residual"] = json_derivation(r.delta.R, vars);
  out["psi"] = json_automorphism(r.psi, vars);
  out["trace"] = json_trace(r.trace, vars);
  return out;
}

Json json_bruno(const BrunoReport& r, const std::vector<std::string>& vars) {
  Json out;
  out["method"] = r.method;
  out["lambda"] = json_scalar_vector(r.delta.lambda);
  out["order"] = r.delta.order;
  out["delta"] = json_derivation(r.delta.field(), vars);
  out["psi"] = json_automorphism(r.psi, vars);
  Json gd = Json::array(), gi = Json::array();
  for (auto& g : r.gens_delta) gd.push_back(json_series(g, vars));
  for (auto& g : r.gens_input) gi.push_back(json_series(g, vars));
  out["generators_delta"] = std::move(gd);
  out["generators_input"] = std::move(gi);
  out["ideal_delta"] = json_ideal(r.ideal_delta, vars);
  out["ideal_input"] = json_ideal(r.ideal_input, vars);
  out["f"] = json_series(r.f, vars);
  out["f0"] = json_series(r.f0, vars);
  out["f_minus_f0_in_ideal"] = r.f_minus_f0_in_ideal;
  Json flags = Json::array();
  for (bool b : r.gen_in_ideal) flags.push_back(b);
  out["generator_in_ideal"] = std::move(flags);
  out["a_condition_mod_mN"] = r.a_condition;
  out["trace"] = json_trace(r.trace, vars);
  return out;
}

Json json_omega(const OmegaReport& r) {
  Json out;
  out["lambda"] = json_scalar_vector(r.lambda);
  out["mode"] = to_string(r.mode);
  Json entries = Json::array();
  for (auto& e : r.entries) {
    Json je;
    je["k"] = e.k;
    je["omega"] = format_double(e.omega);
    je["argmin"] = json_exponent(e.argmin);
    je["exact"] = e.exact;
    if (e.exact) je["omega_squared"] = e.omega2.get_str();
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  Json sig = Json::array();
  for (double s : r.sigma) sig.push_back(format_double(s));
  out["sigma"] = std::move(sig);
  out["verdict"] = r.verdict;
  return out;
}

Json json_schedule(const RadiusSchedule& s) {
  Json out;
  Json rho = Json::array();
  for (double v : s.rho) rho.push_back(format_double(v));
  out["rho"] = std::move(rho);
  out["limit"] = format_double(s.limit);
  out["positive_limit"] = s.positive_limit;
  return out;
}

Json json_estimates(const EstimateReport& r) {
  Json out;
  out["C"] = format_double(r.C);
  out["k0"] = r.k0;
  out["delta"] = format_double(r.delta);
  Json steps = Json::array();
  for (auto& st : r.steps) {
    Json s;
    s["k"] = st.k;
    s["radius"] = format_double(st.radius);
    s["u_norm"] = format_double(st.u_norm);
    s["u_bound"] = format_double(st.u_bound);
    s["u_ok"] = st.u_ok;
    s["residual_norm"] = format_double(st.residual_norm);
    s["residual_ok"] = st.residual_ok;
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  return out;
}

Json json_comparison(const OracleComparison& c, const std::vector<std::string>& vars) {
  Json out;
  out["wedge_route"] = json_ideal(c.wedge_route, vars);
  out["pullback_route"] = json_ideal(c.pullback_route, vars);
  out["rank_wedge"] = c.rank_wedge;
  out["rank_pullback"] = c.rank_pullback;
  out["equal"] = c.equal;
  return out;
}

Json json_certificate(const CertificateResult& c, const std::vector<std::string>& vars) {
  Json out;
  out["ideal"] = json_ideal(c.ideal, vars);
  out["normal_form"] = c.normal_form;
  out["equals_bruno"] = c.equals_bruno;
  return out;
}

Json make_report(const std::string& command, Json body) {
  Json out;
  out["schema"] = "brunonf-report/1";
  out["command"] = command;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

Json make_error_report(const std::string& command, const std::string& code,
                       const std::string& message) {
  Json out;
  out["schema"] = "brunonf-report/1";
  out["command"] = command;
  out["error"] = Json{{"code", code}, {"message", message}};
  return out;
}

}  // namespace brunonf
