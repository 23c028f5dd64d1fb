#pragma once

#include <string>
#include <vector>

#include "hardy/catalogue.hpp"
#include "hardy/expression.hpp"

namespace hardy {

// One-parameter family of role functions; the template uses `lambda`.
struct ParamFamily {
    Expression templ = Expression::constant(0.0);
    double lo = 0;
    double hi = 1;
    Role role = Role::f;
    std::string description;
};

// lhs/rhs of a forced evaluation; throws ZeroDenominator when rhs = 0 and
// rethrows the evaluation error of inconclusive runs
double ratio(const TheoremSpec& spec, const Case& c);

struct TracePoint {
    double lambda;
    double lhs;
    double rhs;
    double ratio;
    bool ok;
};

struct MaximizeResult {
    double best_lambda;
    double best_ratio;
    std::vector<TracePoint> trace;
};

inline constexpr int sharpness_grid = 33;

// the case with the family member at lambda bound into its role
Case family_member(const ParamFamily& fam, const Case& templ, double lambda);

TracePoint probe(const TheoremSpec& spec, const ParamFamily& fam, const Case& templ, double lambda);

// coarse grid (evaluated in parallel) then golden-section refinement around
// the best grid point; throws AllDegenerate if every grid point fails
MaximizeResult maximize(const TheoremSpec& spec, const ParamFamily& fam, const Case& templ);

}  // namespace hardy
