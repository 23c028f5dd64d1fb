#pragma once

#include "hardy/catalogue.hpp"

namespace hardy {

struct OracleSides {
    double lhs;
    double rhs;
};

// Direct nested summation over the points of a scattered window, written
// without the evaluation engine. Supports the four theorems, their scattered
// corollaries, cor1.1, eldeeb-eqq1, hardy-discrete and copson-h20.
// Throws InputError on dense scales or windows with more than 10^4 points.
OracleSides brute_force_oracle(const Case& c);

bool oracle_supports(const std::string& theorem_id);

}  // namespace hardy
