#ifndef BRUNONF_REPORT_HPP
#define BRUNONF_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "brunonf/bruno.hpp"
#include "brunonf/omega.hpp"

namespace brunonf {

using Json = nlohmann::ordered_json;

// All scalars (including floats) are serialized as strings so exact values
// survive the round trip and float formatting is byte-stable.
std::string format_double(double v);

Json json_scalar(const Scalar& c);
Json json_series(const Series& f, const std::vector<std::string>& vars = {});
Json json_derivation(const LogDerivation& d, const std::vector<std::string>& vars = {});
Json json_automorphism(const Automorphism& phi, const std::vector<std::string>& vars = {});
Json json_ideal(const TruncatedIdeal& I, const std::vector<std::string>& vars = {});
Json json_trace(const NormalizationTrace& t, const std::vector<std::string>& vars = {});

Json json_normalization(const NormalizationResult& r,
                        const std::vector<std::string>& vars = {});
Json json_bruno(const BrunoReport& r, const std::vector<std::string>& vars = {});
Json json_omega(const OmegaReport& r);
Json json_schedule(const RadiusSchedule& s);
Json json_estimates(const EstimateReport& r);
Json json_comparison(const OracleComparison& c, const std::vector<std::string>& vars = {});
Json json_certificate(const CertificateResult& c, const std::vector<std::string>& vars = {});

// Versioned envelope: {"schema": "brunonf-report/1", "command": ..., ...body}.
Json make_report(const std::string& command, Json body);
Json make_error_report(const std::string& command, const std::string& code,
                       const std::string& message);

}  // namespace brunonf

#endif
