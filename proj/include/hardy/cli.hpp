#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "hardy/catalogue.hpp"

namespace hardy {

// 0 verified, 1 violated, 2 hypotheses unmet, 4 numerically inconclusive;
// 3 is reserved for input and parse errors
int exit_code(Verdict v);

std::string report_text(const Case& c, const VerificationReport& rep);
std::string report_json(const Case& c, const VerificationReport& rep);

// Each command writes its report to `out` and diagnostics to `err` and
// returns the process exit code.
int run_case(const std::filesystem::path& file, std::ostream& out, std::ostream& err, bool json = false,
             double horizon_factor = 1.0);
int run_suite_command(const std::string& name, std::uint64_t seed, const std::string& csv_path, std::ostream& out,
                      std::ostream& err, double horizon_factor = 1.0);
int run_sharpness(const std::filesystem::path& file, const std::string& csv_path, std::ostream& out,
                  std::ostream& err, double horizon_factor = 1.0);
int run_selftest(std::ostream& out, std::ostream& err);

}  // namespace hardy
