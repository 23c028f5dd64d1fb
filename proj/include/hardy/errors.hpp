#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAMember : public Error {
public:
    explicit NotAMember(double t);
    double point;
};

class DenseUnsupported : public Error {
public:
    DenseUnsupported() : Error("scale has a dense part; use quadrature") {}
};

class AtMaximum : public Error {
public:
    explicit AtMaximum(double t) : Error("no forward difference at the scale maximum " + std::to_string(t)) {}
};

class NonPositivePoint : public Error {
public:
    explicit NonPositivePoint(double t) : Error("conformable weight needs t > 0, got " + std::to_string(t)) {}
};

class SingularWeight : public Error {
public:
    explicit SingularWeight(double a) : Error("weight t^(alpha-1) is singular on a window starting at " + std::to_string(a)) {}
};

class QuadratureNonConvergence : public Error {
public:
    QuadratureNonConvergence(double best, double err);
    double best_estimate;
    double error_estimate;
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("right-hand side is zero") {}
};

class AllDegenerate : public Error {
public:
    AllDegenerate() : Error("every grid point failed to evaluate") {}
};

// malformed case files, tables, unknown ids
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {});
    std::size_t offset;
    std::vector<std::string> expected;
};

}  // namespace hardy
