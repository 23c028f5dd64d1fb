#include "hardy/scale_function.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "hardy/timescale.hpp"

namespace hardy {

namespace {

class ExprImpl final : public ScaleFunction::Impl {
public:
    explicit ExprImpl(Expression e) : e_(std::move(e)) {}
    double value(double t) const override { return e_(t); }
    std::string describe() const override { return e_.print(); }
    const Expression& expr() const { return e_; }

private:
    Expression e_;
};

class TableImpl final : public ScaleFunction::Impl {
public:
    TableImpl(std::vector<double> pts, std::vector<double> vals) : pts_(std::move(pts)), vals_(std::move(vals)) {}

    double value(double t) const override {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), t);
        std::size_t i = static_cast<std::size_t>(it - pts_.begin());
        if (i < pts_.size() && std::abs(pts_[i] - t) <= snap_tolerance(t)) return vals_[i];
        if (i > 0 && std::abs(pts_[i - 1] - t) <= snap_tolerance(t)) return vals_[i - 1];
        throw NotAMember(t);
    }
    std::string describe() const override { return "table(" + std::to_string(pts_.size()) + " points)"; }

private:
    std::vector<double> pts_;
    std::vector<double> vals_;
};

class ProductImpl final : public ScaleFunction::Impl {
public:
    ProductImpl(ScaleFunction a, ScaleFunction b) : a_(std::move(a)), b_(std::move(b)) {}
    double value(double t) const override {
        double x = a_(t);
        if (x == 0.0) return 0.0;
        double y = b_(t);
        if (y == 0.0) return 0.0;
        return x * y;
    }
    std::string describe() const override { return "(" + a_.describe() + ")*(" + b_.describe() + ")"; }

private:
    ScaleFunction a_;
    ScaleFunction b_;
};

class CallableImpl final : public ScaleFunction::Impl {
public:
    CallableImpl(std::function<double(double)> fn, std::string d) : fn_(std::move(fn)), d_(std::move(d)) {}
    double value(double t) const override { return fn_(t); }
    std::string describe() const override { return d_; }

private:
    std::function<double(double)> fn_;
    std::string d_;
};

}  // namespace

ScaleFunction::ScaleFunction() : ScaleFunction(constant(0.0)) {}

ScaleFunction ScaleFunction::expression(Expression e) { return ScaleFunction(std::make_shared<ExprImpl>(std::move(e))); }

ScaleFunction ScaleFunction::constant(double c) {
    return ScaleFunction(std::make_shared<ExprImpl>(Expression::constant(c)));
}

ScaleFunction ScaleFunction::table(std::vector<double> points, std::vector<double> values) {
    if (points.size() != values.size() || points.empty()) throw InputError("table needs matching, nonempty columns");
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    std::vector<double> p, v;
    for (std::size_t i : order) {
        if (!p.empty() && points[i] == p.back()) throw InputError("table has duplicate point " + format_double(points[i]));
        p.push_back(points[i]);
        v.push_back(values[i]);
    }
    return ScaleFunction(std::make_shared<TableImpl>(std::move(p), std::move(v)));
}

ScaleFunction ScaleFunction::product(ScaleFunction a, ScaleFunction b) {
    return ScaleFunction(std::make_shared<ProductImpl>(std::move(a), std::move(b)));
}

ScaleFunction ScaleFunction::callable(std::function<double(double)> fn, std::string description) {
    return ScaleFunction(std::make_shared<CallableImpl>(std::move(fn), std::move(description)));
}

const Expression* ScaleFunction::as_expression() const {
    if (auto* e = dynamic_cast<const ExprImpl*>(impl_.get())) return &e->expr();
    return nullptr;
}

std::optional<double> ScaleFunction::as_constant() const {
    const Expression* e = as_expression();
    if (e && e->root().kind == NodeKind::number) return e->root().value;
    return std::nullopt;
}

}  // namespace hardy
