// Exercises the shared library strictly through the C interface.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "brunonf/capi.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static const char* kCone =
    "vars: x, y, z\n"
    "truncation: 8\n"
    "i*x*dx - i*y*dy + (x*y - z^2)*(x*dx + y*dy + z*dz)\n";

int main() {
  char err[1024];

  CHECK(std::strstr(bnf_version(), "brunonf") != nullptr);

  // parse failure surfaces a JSON error object and a parse status
  bnf_problem* bad = nullptr;
  err[0] = '\0';
  CHECK(bnf_problem_parse("vars: x,y\ny*dx\n", &bad, err, sizeof(err)) ==
        BNF_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strstr(err, "NotLogarithmic") != nullptr);

  bnf_problem* prob = nullptr;
  CHECK(bnf_problem_parse(kCone, &prob, err, sizeof(err)) == BNF_OK);
  CHECK(prob != nullptr);

  // bruno-ideal report carries the cone generator
  bnf_report* rep = nullptr;
  CHECK(bnf_run(prob, "bruno-ideal", "{\"order\":8}", &rep, err, sizeof(err)) ==
        BNF_OK);
  std::string json = bnf_report_json(rep);
  CHECK(json.find("\"schema\": \"brunonf-report/1\"") != std::string::npos);
  CHECK(json.find("\"command\": \"bruno-ideal\"") != std::string::npos);
  CHECK(json.find("x*y") != std::string::npos);
  CHECK(json.find("\"identity\": true") != std::string::npos);
  bnf_report_free(rep);

  // determinism across runs
  bnf_report* rep2 = nullptr;
  CHECK(bnf_run(prob, "bruno-ideal", "{\"order\":8}", &rep2, err, sizeof(err)) ==
        BNF_OK);
  CHECK(json == bnf_report_json(rep2));
  bnf_report_free(rep2);

  // normalize + check + certify + oracle-compare all succeed
  for (const char* cmd : {"normalize", "check", "certify", "oracle-compare"}) {
    bnf_report* r = nullptr;
    const char* opts = std::strcmp(cmd, "oracle-compare") == 0 ? "{\"jet\":6}" : "{}";
    bnf_status st = bnf_run(prob, cmd, opts, &r, err, sizeof(err));
    if (st != BNF_OK) std::fprintf(stderr, "%s: %s\n", cmd, err);
    CHECK(st == BNF_OK);
    if (r) {
      CHECK(std::strstr(bnf_report_json(r), cmd) != nullptr);
      bnf_report_free(r);
    }
  }

  // unknown command and malformed options
  bnf_report* r3 = nullptr;
  CHECK(bnf_run(prob, "frobnicate", "{}", &r3, err, sizeof(err)) == BNF_ERR_INVALID);
  CHECK(bnf_run(prob, "normalize", "[1,2]", &r3, err, sizeof(err)) == BNF_ERR_INVALID);
  CHECK(bnf_run(prob, "normalize", "{\"order\":12}", &r3, err, sizeof(err)) != BNF_OK);
  bnf_problem_free(prob);

  // omega entry point
  bnf_report* om = nullptr;
  CHECK(bnf_omega("1,-1", 6, "paper", 4096, &om, err, sizeof(err)) == BNF_OK);
  std::string oj = bnf_report_json(om);
  CHECK(oj.find("SatisfiedCertified") != std::string::npos);
  bnf_report_free(om);
  CHECK(bnf_omega("0,0", 4, "paper", 4096, &om, err, sizeof(err)) == BNF_ERR_MATH);
  CHECK(bnf_omega("1,-1", 4, "sideways", 4096, &om, err, sizeof(err)) ==
        BNF_ERR_INVALID);

  // null-safety
  CHECK(bnf_problem_parse(nullptr, nullptr, err, sizeof(err)) == BNF_ERR_INVALID);
  CHECK(bnf_report_json(nullptr) == nullptr);
  bnf_report_free(nullptr);
  bnf_problem_free(nullptr);

  if (failures == 0) std::printf("capi tests passed\n");
  return failures == 0 ? 0 : 1;
}
