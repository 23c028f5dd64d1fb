#pragma once

#include <string>

namespace hardy {

// shortest text that parses back to the same double; "inf", "-inf", "nan" for non-finite
std::string format_double(double x);

}  // namespace hardy
