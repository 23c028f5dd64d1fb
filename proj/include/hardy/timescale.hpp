#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hardy {

struct RealInterval {
    double lo;
    double hi;  // may be +inf
};

struct UniformLattice {
    double h;
    double origin;
};

struct QLattice {
    double q;
};

struct FiniteSet {
    std::vector<double> points;
};

enum class RightClass { dense, scattered, maximum };
enum class LeftClass { dense, scattered, minimum };

struct PointClass {
    RightClass right;
    LeftClass left;
};

struct Jump {
    double sigma;
    double rho;
    double mu;
    PointClass cls;
};

double snap_tolerance(double t);

class TimeScale {
public:
    using Variant = std::variant<RealInterval, UniformLattice, QLattice, FiniteSet>;

    static TimeScale real_interval(double lo, double hi);
    static TimeScale integers();
    static TimeScale lattice(double h, double origin = 0.0);
    static TimeScale q_lattice(double q);
    static TimeScale finite_set(std::vector<double> points);

    const Variant& kind() const { return v_; }
    bool is_dense() const { return std::holds_alternative<RealInterval>(v_); }
    bool is_integers() const;

    // nearest member within the snapping tolerance
    std::optional<double> snap(double t) const;
    // snap or throw NotAMember
    double member(double t) const;

    Jump jump(double t) const;
    double sigma(double t) const { return jump(t).sigma; }

    // members in [a, b); a and b are snapped first
    std::vector<double> points_in(double a, double b) const;

    // smallest member >= t, clamped to the maximum
    double ceil_member(double t) const;
    // largest member <= t, clamped to the minimum
    double floor_member(double t) const;

    std::optional<double> min() const;
    std::optional<double> max() const;

    std::string literal() const;

private:
    explicit TimeScale(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

}  // namespace hardy
