#include "hardy/generate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hardy/format.hpp"

namespace hardy {

namespace {

std::string num(double x) { return "(" + format_double(x) + ")"; }

ScaleFunction expr(const std::string& s) { return ScaleFunction::expression(Expression::parse(s)); }

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

ScaleFunction random_table(const TimeScale& ts, double a, double horizon, std::mt19937_64& rng) {
    double end = ts.ceil_member(4.0 * horizon);
    auto pts = ts.points_in(a, end);
    pts.push_back(ts.member(end));
    std::vector<double> vals(pts.size());
    for (double& v : vals) v = std::clamp(uniform(rng, -0.2, 1.2), 0.0, 1.0);
    return ScaleFunction::table(std::move(pts), std::move(vals));
}

ScaleFunction random_f(const TimeScale& ts, double a, double horizon, std::mt19937_64& rng) {
    int kind = pick(rng, ts.is_dense() ? 3 : 4);
    switch (kind) {
        case 0: return expr("t^" + num(uniform(rng, -1.5, 0.3)));
        case 1: return expr(num(uniform(rng, 1.01, 1.3)) + "^(-t)");
        case 2: return expr("1/(1+" + num(uniform(rng, 0.1, 2.0)) + "*t)^" + num(uniform(rng, 0.5, 2.0)));
        default: return random_table(ts, a, horizon, rng);
    }
}

std::string random_g(std::mt19937_64& rng) {
    switch (pick(rng, 4)) {
        case 0: return "1";
        case 1: return "t^" + num(uniform(rng, -0.5, 1.0));
        case 2: return "1+1/t";
        default: return num(uniform(rng, 0.2, 3.0)) + "*(1+t)/(2+t)";
    }
}

std::string nonincreasing(std::mt19937_64& rng) {
    switch (pick(rng, 3)) {
        case 0: return "1";
        case 1: return "t^" + num(-uniform(rng, 0.0, 1.0));
        default: return "1/(1+" + num(uniform(rng, 0.01, 1.0)) + "*t)";
    }
}

std::string nondecreasing(std::mt19937_64& rng) {
    switch (pick(rng, 3)) {
        case 0: return "1";
        case 1: return "t^" + num(uniform(rng, 0.0, 1.0));
        default: return "2-1/t";
    }
}

bool is_s4(const std::string& id) { return id == "thm1" || id == "thm4" || id == "cor1.1" || id == "eldeeb-eqq1"; }
bool k_down(const std::string& id) { return id == "thm1" || id == "thm3" || id == "cor1.1" || id == "eldeeb-eqq1"; }

}  // namespace

double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Case random_case(const std::string& theorem, const TimeScale& scale, double a, double horizon, std::mt19937_64& rng) {
    const std::string base = theorem.size() == 6 && theorem.rfind("cor", 0) == 0 && std::isupper(static_cast<unsigned char>(theorem[3]))
                                 ? std::string("thm") + theorem[5]
                                 : theorem;
    const TheoremSpec& spec = find_theorem(theorem);
    Case c;
    c.theorem = theorem;
    c.scale = scale;
    c.a = a;
    c.horizon = horizon;
    c.p = uniform(rng, 1.0, 3.0);
    const double alphas[] = {0.5, 0.8, 1.0};
    c.alpha = base == "eldeeb-eqq1" ? 1.0 : alphas[pick(rng, 3)];
    if (is_s4(base)) {
        do {
            c.gamma = c.alpha + c.theta + uniform(rng, 0.5, 2.0);
        } while (c.gamma - c.theta - 1.0 < 1e-6);
    } else {
        c.gamma = uniform(rng, 0.0, c.alpha - 0.1);
    }

    ScaleFunction f = random_f(scale, a, horizon, rng);
    if (k_down(base) && uniform(rng, 0, 1) < 0.7) {
        // f(a) = 0 keeps the G(a)^(-p(gamma-alpha)) factor of the first RHS term finite
        f = ScaleFunction::product(expr("min(1, max(0, (t-" + num(a) + ")*1e6))"), f);
    }
    c.roles[Role::f] = f;
    c.roles[Role::g] = expr(random_g(rng));
    if (base == "cor1.1") return c;

    c.roles[Role::k] = expr(k_down(base) ? nonincreasing(rng) : nondecreasing(rng));
    if (uniform(rng, 0, 1) < 0.5) c.roles[Role::r] = expr(random_g(rng));

    if (uniform(rng, 0, 1) < 0.5) {
        for (int attempt = 0; attempt < 4; ++attempt) {
            Case t = c;
            t.theta = uniform(rng, 0.0, 1.5);
            t.beta = uniform(rng, 0.0, 1.5);
            if (is_s4(base)) t.gamma = c.gamma + t.theta;
            bool down = base == "thm1" || base == "thm3" || base == "eldeeb-eqq1";
            t.roles[Role::w] = expr(down ? nonincreasing(rng) : nondecreasing(rng));
            t.roles[Role::v] = expr(down ? nonincreasing(rng) : nondecreasing(rng));
            if (uniform(rng, 0, 1) < 0.5 && base != "thm1" && base != "thm4" && base != "eldeeb-eqq1") {
                t.theta = 0.0;
            }
            if (check_hypotheses(t, spec).ok()) return t;
        }
    }
    return c;
}

Case random_sequence_case(std::size_t n, double p, std::mt19937_64& rng) {
    Case c;
    c.theorem = "hardy-discrete";
    c.scale = TimeScale::integers();
    c.a = 1;
    c.horizon = static_cast<double>(n + 1);
    c.p = p;
    // zero past the sequence, out to where the extended-horizon run looks
    std::vector<double> pts(4 * (n + 1)), vals(4 * (n + 1), 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<double>(i + 1);
    for (std::size_t i = 0; i < n; ++i) {
        double u = uniform(rng, 0.0, 1.0);
        // mix of sparse spikes and slowly decaying mass
        vals[i] = u < 0.2 ? 0.0 : u * std::pow(static_cast<double>(i + 1), -uniform(rng, 0.0, 1.2));
    }
    c.roles[Role::f] = ScaleFunction::table(std::move(pts), std::move(vals));
    return c;
}

}  // namespace hardy
