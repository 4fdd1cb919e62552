#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncspec/closed_form.hpp"
#include "ncspec/verifier.hpp"

namespace ncspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the binary and the tests. Writes records to `out`
// (or to --out FILE) and diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Json = nlohmann::ordered_json;

// Machine-readable records. Every big integer is a decimal string.
Json params_json(const GroupSpec& spec);
Json spectrum_entries_json(const SpectrumSpec& spectrum);
Json spectrum_entries_json(const std::vector<SpectrumEntry>& entries);
Json polynomial_json(const IntPolynomial& p);
Json spectrum_record(const GroupSpec& spec, MatrixKind kind, const std::string& method,
                     const SpectrumSpec& spectrum, bool integral, const IntPolynomial* charpoly);
Json report_record(const VerificationReport& report, bool include_polys);
Json integrality_json(const IntegralityRecord& record);

}  // namespace ncspec::cli
