#include "hardy/errors.hpp"

#include "hardy/format.hpp"

namespace hardy {

NotAMember::NotAMember(double t) : Error("point " + format_double(t) + " is not a member of the time scale"), point(t) {}

QuadratureNonConvergence::QuadratureNonConvergence(double best, double err)
    : Error("quadrature did not converge (estimate " + format_double(best) + ", error " + format_double(err) + ")"),
      best_estimate(best),
      error_estimate(err) {}

ParseError::ParseError(std::size_t off, std::string message, std::vector<std::string> exp)
    : Error(message + " at offset " + std::to_string(off)), offset(off), expected(std::move(exp)) {}

}  // namespace hardy
