// Command-line driver; talks to the library exclusively through the C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brunonf/capi.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("--input", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write '" << out_path << "'\n";
    std::exit(4);
  }
  out << text;
}

int fail(const char* err_buf, bnf_status st) {
  std::cerr << (err_buf[0] ? err_buf : "{\"code\":\"Internal\",\"message\":\"unknown error\"}")
            << "\n";
  return (int)st;
}

int run_problem(const std::string& input, const std::string& command,
                const std::string& options, const std::string& out_path) {
  char err[1024] = {0};
  bnf_problem* prob = nullptr;
  bnf_status st = bnf_problem_parse(read_file(input).c_str(), &prob, err, sizeof(err));
  if (st != BNF_OK) return fail(err, st);
  bnf_report* rep = nullptr;
  st = bnf_run(prob, command.c_str(), options.c_str(), &rep, err, sizeof(err));
  bnf_problem_free(prob);
  if (st != BNF_OK) return fail(err, st);
  emit(bnf_report_json(rep), out_path);
  bnf_report_free(rep);
  return 0;
}

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare-Dulac normal forms and Bruno ideals of logarithmic vector fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bnf_version()));

  std::string input, out_path, method = "newton", mode = "paper", lambda;
  int order = 0, jet = 8, kmax = 8;
  long cap = 4096;
  double C = 3.0, epsilon = 1e-12;
  int k0 = 1;

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input)
      sub->add_option("--input", input, "problem file")->required();
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    sub->add_option("--epsilon", epsilon, "float zero tolerance")->capture_default_str();
  };

  auto* norm = app.add_subcommand("normalize", "compute the normal form");
  add_common(norm);
  norm->add_option("--order", order, "truncation order (default: from the file)");
  norm->add_option("--method", method, "newton|graded")->capture_default_str();

  auto* bi = app.add_subcommand("bruno-ideal", "normal form plus Bruno ideal");
  add_common(bi);
  bi->add_option("--order", order, "truncation order (default: from the file)");
  bi->add_option("--method", method, "newton|graded")->capture_default_str();

  auto* om = app.add_subcommand("omega", "small-divisor table for an eigenvalue list");
  om->add_option("--lambda", lambda, "comma-separated eigenvalues")->required();
  om->add_option("--kmax", kmax, "largest k")->capture_default_str();
  om->add_option("--mode", mode, "paper|nonneg")->capture_default_str();
  om->add_option("--cap", cap, "enumeration shell cap")->capture_default_str();
  om->add_option("--out", out_path, "write the JSON report here instead of stdout");

  auto* cert = app.add_subcommand("certify", "normal form, certificate, and estimates");
  add_common(cert);
  cert->add_option("--order", order, "truncation order (default: from the file)");
  cert->add_option("--C", C, "estimate constant")->capture_default_str();
  cert->add_option("--k0", k0, "first Newton scale")->capture_default_str();

  auto* oc = app.add_subcommand("oracle-compare", "jet-matrix route vs normalization route");
  add_common(oc);
  oc->add_option("--jet", jet, "jet order")->capture_default_str();

  auto* chk = app.add_subcommand("check", "parse and validate an input file");
  add_common(chk);

  CLI11_PARSE(app, argc, argv);

  try {
    std::string opts = "{\"epsilon\":" + num(epsilon);
    if (norm->parsed() || bi->parsed()) {
      if (order > 0) opts += ",\"order\":" + std::to_string(order);
      opts += ",\"method\":\"" + method + "\"}";
      return run_problem(input, norm->parsed() ? "normalize" : "bruno-ideal", opts, out_path);
    }
    if (om->parsed()) {
      char err[1024] = {0};
      bnf_report* rep = nullptr;
      bnf_status st = bnf_omega(lambda.c_str(), kmax, mode.c_str(), cap, &rep, err, sizeof(err));
      if (st != BNF_OK) return fail(err, st);
      emit(bnf_report_json(rep), out_path);
      bnf_report_free(rep);
      return 0;
    }
    if (cert->parsed()) {
      if (order > 0) opts += ",\"order\":" + std::to_string(order);
      opts += ",\"C\":" + num(C) + ",\"k0\":" + std::to_string(k0) + "}";
      return run_problem(input, "certify", opts, out_path);
    }
    if (oc->parsed()) {
      opts += ",\"jet\":" + std::to_string(jet) + "}";
      return run_problem(input, "oracle-compare", opts, out_path);
    }
    opts += "}";
    return run_problem(input, "check", opts, out_path);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
}
