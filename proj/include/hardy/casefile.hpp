#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/catalogue.hpp"
#include "hardy/sharpness.hpp"

namespace hardy {

// Flat key = value text with one [kind name] header per section; '#' starts
// a comment. Errors are InputError with a line number.
struct Section {
    std::string kind;
    std::string name;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> entries;
};

std::vector<Section> read_sections(std::string_view text);

// "Z", "R[lo,hi]", "hZ(h)", "hZ(h,origin)", "qZ(q)", "set[x1,x2,...]"
TimeScale parse_scale(std::string_view s);

double parse_real(std::string_view s, std::string_view what);

// CSV with header t,value; points are snapped to the scale
ScaleFunction load_table(const std::filesystem::path& path, const TimeScale& ts);

// HORIZON_SCALE from the environment, default 1
double horizon_scale_from_env();

// Multiplies a horizon by `factor` and moves it to the next scale member.
double scaled_horizon(const TimeScale& ts, double horizon, double factor);

Case case_from_section(const Section& s, const std::filesystem::path& dir, double horizon_factor = 1.0);
std::vector<Case> load_cases(const std::filesystem::path& file, double horizon_factor = 1.0);

struct FamilyFile {
    std::string id;
    Case templ;
    ParamFamily family;
};

// a [family id] section: the case keys plus template, lambda_lo, lambda_hi,
// role (default f) and description
FamilyFile load_family(const std::filesystem::path& file, double horizon_factor = 1.0);

}  // namespace hardy
