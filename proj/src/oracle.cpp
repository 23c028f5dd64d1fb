#include "hardy/oracle.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

// x^e with 0^e = 0 for e > 0, 0^e = inf for e < 0 and x^0 = 1
double pw(double x, double e) {
    if (e == 0.0) return 1.0;
    if (x == 0.0) return e > 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::pow(x, e);
}

// product of factors; any exact zero wins
double prod(std::initializer_list<double> xs) {
    double acc = 1.0;
    for (double x : xs) {
        if (x == 0.0) return 0.0;
        acc *= x;
    }
    return acc;
}

double role_or(const Case& c, Role r, double t, double fallback) {
    auto it = c.roles.find(r);
    return it == c.roles.end() ? fallback : it->second(t);
}

std::string base_theorem(const std::string& id) {
    if (id.size() == 6 && id.rfind("cor", 0) == 0 && std::isupper(static_cast<unsigned char>(id[3]))) return std::string("thm") + id[5];
    return id;
}

}  // namespace

bool oracle_supports(const std::string& theorem_id) {
    std::string b = base_theorem(theorem_id);
    for (const char* s : {"thm1", "thm2", "thm3", "thm4", "cor1.1", "eldeeb-eqq1", "hardy-discrete", "copson-h20"})
        if (b == s) return true;
    return false;
}

OracleSides brute_force_oracle(const Case& c) {
    const std::string id = base_theorem(c.theorem);
    if (!oracle_supports(c.theorem)) throw InputError("no oracle form for " + c.theorem);
    if (c.scale.is_dense()) throw InputError("the oracle needs a scattered scale");

    const double a = c.scale.member(c.a), T = c.scale.member(c.horizon);
    double T2 = c.scale.ceil_member(2 * T);
    if (T2 < T) T2 = T;
    std::vector<double> pts = c.scale.points_in(a, T2);
    pts.push_back(T2);
    std::size_t n = 0;  // window points [a, T)
    while (n < pts.size() && pts[n] < T) ++n;
    if (pts.size() > 10001) throw InputError("oracle window too large");
    const std::size_t m = pts.size();
    const double p = c.p, al = c.alpha, ga = c.gamma, th = c.theta, be = c.beta;
    const bool one_roles = id == "cor1.1" || id == "copson-h20" || id == "hardy-discrete";

    std::vector<double> f(m), g(m), k(m), r(m), w(m), v(m), dm(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double t = pts[i];
        f[i] = c.roles.at(Role::f)(t);
        g[i] = id == "hardy-discrete" ? 1.0 : c.roles.at(Role::g)(t);
        k[i] = one_roles ? 1.0 : role_or(c, Role::k, t, 1.0);
        w[i] = one_roles ? 1.0 : role_or(c, Role::w, t, 1.0);
        v[i] = one_roles ? 1.0 : role_or(c, Role::v, t, 1.0);
        r[i] = (id == "cor1.1" || id == "copson-h20") ? g[i] : id == "hardy-discrete" ? 1.0 : role_or(c, Role::r, t, 1.0);
        if (i + 1 < m) dm[i] = (pts[i + 1] - t) * (al == 1.0 ? 1.0 : std::pow(t, al - 1.0));
    }
    // G(t_i) = sum_{a <= s < t_i} g(s) dm(s), K likewise with r f;
    // F(t_i) = sum_{t_i <= s < T} r f dm, H(t_i) = sum_{t_i <= s < T2} g dm
    auto G = [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = 0; j < i; ++j) s += prod({g[j], dm[j]});
        return s;
    };
    auto K = [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = 0; j < i; ++j) s += prod({r[j], f[j], dm[j]});
        return s;
    };
    auto F = [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = i; j < n; ++j) s += prod({r[j], f[j], dm[j]});
        return s;
    };
    auto H = [&](std::size_t i) {
        double s = 0;
        for (std::size_t j = i; j + 1 < m; ++j) s += prod({g[j], dm[j]});
        return s;
    };

    double L = 0, R = 0, C = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t s = i + 1;
        double l = 0, q = 0;
        if (id == "thm1" || id == "cor1.1") {
            l = prod({k[s], v[s], w[i], g[i], pw(G(s), al - ga - 1), pw(K(s), p - al + 1)});
            q = prod({k[s], v[s], w[i], pw(r[i], p), pw(f[i], p), pw(G(s), (1 - al + ga) * (p - 1)),
                      pw(K(s), 1 - al), pw(g[i], 1 - p), pw(G(i), -p * (ga - al))});
            C = std::pow((p + be - al + 1) / (ga - th - al), p);
        } else if (id == "thm2") {
            double e1 = c.as_printed ? al - ga + 1 : al - ga - 1;
            double e2 = c.as_printed ? p - ga - al + 1 : p - ga + al - 1;
            l = prod({k[i], v[i], w[s], g[i], pw(G(s), e1), pw(F(i), p - al + 1)});
            q = prod({k[i], v[i], w[s], pw(r[i], p), pw(f[i], p), pw(G(s), e2), pw(F(i), 1 - al), pw(g[i], 1 - p)});
            C = std::pow((p + be - al + 1) / (al - ga + th), p);
        } else if (id == "thm3") {
            l = prod({k[s], v[s], w[i], g[i], pw(H(i), al - ga - 1), pw(K(s), p - al + 1)});
            q = prod({k[s], v[s], w[i], pw(r[i], p), pw(f[i], p), pw(H(i), p - ga + al - 1), pw(K(s), 1 - al),
                      pw(g[i], 1 - p)});
            C = std::pow((p - al + be + 1) / (al - ga + th), p);
        } else if (id == "thm4") {
            double e = c.as_printed ? (1 - al) / p : 1 - al;
            l = prod({k[i], v[i], w[s], g[i], pw(H(i), al - ga - 1), pw(F(i), p - al + 1)});
            q = prod({k[i], v[i], w[s], pw(r[i], p), pw(f[i], p), pw(H(i), (1 - al + ga) * (p - 1)), pw(F(i), e),
                      pw(g[i], 1 - p), pw(H(s), -p * (ga - al))});
            C = std::pow((p + be - al + 1) / (ga - th - al), p);
        } else if (id == "eldeeb-eqq1") {
            l = prod({k[s], v[s], w[i], g[i], pw(G(s), -ga), pw(K(s), p)});
            q = prod({k[s], v[s], w[i], pw(r[i], p), pw(f[i], p), pw(G(s), ga * (p - 1)), pw(g[i], 1 - p),
                      pw(G(i), -p * (ga - 1))});
            C = std::pow((p + be) / (ga - th - 1), p);
        } else if (id == "hardy-discrete") {
            l = prod({pw(K(s), p), pw(pts[s] - a, -p)});
            q = pw(f[i], p);
            C = std::pow(p / (p - 1), p);
        } else if (id == "copson-h20") {
            l = prod({g[i], pw(K(s), p), pw(G(s), -ga)});
            q = prod({g[i], pw(f[i], p), pw(G(s), p - ga)});
            C = std::pow(p / (ga - 1), p);
        }
        L += prod({l, dm[i]});
        R += prod({q, dm[i]});
    }
    return {L, R == 0.0 ? 0.0 : C * R};
}

}  // namespace hardy
