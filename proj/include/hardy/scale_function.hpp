#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hardy/expression.hpp"

namespace hardy {

// Real-valued map on scale points. Cheap to copy; the underlying source is
// shared and immutable.
class ScaleFunction {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual double value(double t) const = 0;
        // Exact Delta-derivative when the source knows it (cumulatives).
        virtual std::optional<double> exact_delta(double t, double mu) const {
            (void)t;
            (void)mu;
            return std::nullopt;
        }
        virtual std::string describe() const = 0;
    };

    ScaleFunction();
    explicit ScaleFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    static ScaleFunction expression(Expression e);
    static ScaleFunction constant(double c);
    // sampled values; evaluation at any other point throws NotAMember
    static ScaleFunction table(std::vector<double> points, std::vector<double> values);
    static ScaleFunction product(ScaleFunction a, ScaleFunction b);
    static ScaleFunction callable(std::function<double(double)> fn, std::string description);

    double operator()(double t) const { return impl_->value(t); }
    std::optional<double> exact_delta(double t, double mu) const { return impl_->exact_delta(t, mu); }
    std::string describe() const { return impl_->describe(); }

    const Expression* as_expression() const;
    std::optional<double> as_constant() const;

    template <class T>
    const T* impl_as() const {
        return dynamic_cast<const T*>(impl_.get());
    }

private:
    std::shared_ptr<const Impl> impl_;
};

}  // namespace hardy
