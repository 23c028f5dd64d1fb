#include "hardy/catalogue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Product of factors where an exactly zero factor wins over infinities.
class Term {
public:
    Term& mul(double x) {
        if (x == 0.0) {
            zero_ = true;
        } else {
            acc_ *= x;
        }
        return *this;
    }
    Term& pow(double base, double e) {
        if (e == 0.0) return *this;
        if (base == 0.0) return mul(e > 0 ? 0.0 : inf);
        return mul(std::pow(base, e));
    }
    double value() const { return zero_ ? 0.0 : acc_; }

private:
    double acc_ = 1.0;
    bool zero_ = false;
};

// ---- the four general inequalities; as_printed selects the alternate exponents

double lhs1(const PointView& x, const Params& q) {
    return Term().mul(x.k_s).mul(x.v_s).mul(x.w).mul(x.g)
        .pow(x.G_s, q.alpha - q.gamma - 1).pow(x.K_s, q.p - q.alpha + 1).value();
}

double rhs1(const PointView& x, const Params& q) {
    return Term().mul(x.k_s).mul(x.v_s).mul(x.w).pow(x.r, q.p).pow(x.f, q.p)
        .pow(x.G_s, (1 - q.alpha + q.gamma) * (q.p - 1)).pow(x.K_s, 1 - q.alpha)
        .pow(x.g, -(q.p - 1)).pow(x.G, -q.p * (q.gamma - q.alpha)).value();
}

double c1(const Params& q) { return std::pow((q.p + q.beta - q.alpha + 1) / (q.gamma - q.theta - q.alpha), q.p); }

double lhs2(const PointView& x, const Params& q) {
    double e = q.as_printed ? q.alpha - q.gamma + 1 : q.alpha - q.gamma - 1;
    return Term().mul(x.k).mul(x.v).mul(x.w_s).mul(x.g).pow(x.G_s, e).pow(x.F, q.p - q.alpha + 1).value();
}

double rhs2(const PointView& x, const Params& q) {
    double e = q.as_printed ? q.p - q.gamma - q.alpha + 1 : q.p - q.gamma + q.alpha - 1;
    return Term().mul(x.k).mul(x.v).mul(x.w_s).pow(x.r, q.p).pow(x.f, q.p)
        .pow(x.G_s, e).pow(x.F, 1 - q.alpha).pow(x.g, -(q.p - 1)).value();
}

double c2(const Params& q) { return std::pow((q.p + q.beta - q.alpha + 1) / (q.alpha - q.gamma + q.theta), q.p); }

double lhs3(const PointView& x, const Params& q) {
    return Term().mul(x.k_s).mul(x.v_s).mul(x.w).mul(x.g)
        .pow(x.H, q.alpha - q.gamma - 1).pow(x.K_s, q.p - q.alpha + 1).value();
}

double rhs3(const PointView& x, const Params& q) {
    return Term().mul(x.k_s).mul(x.v_s).mul(x.w).pow(x.r, q.p).pow(x.f, q.p)
        .pow(x.H, q.p - q.gamma + q.alpha - 1).pow(x.K_s, 1 - q.alpha).pow(x.g, -(q.p - 1)).value();
}

double c3(const Params& q) { return std::pow((q.p - q.alpha + q.beta + 1) / (q.alpha - q.gamma + q.theta), q.p); }

double lhs4(const PointView& x, const Params& q) {
    return Term().mul(x.k).mul(x.v).mul(x.w_s).mul(x.g)
        .pow(x.H, q.alpha - q.gamma - 1).pow(x.F, q.p - q.alpha + 1).value();
}

double rhs4(const PointView& x, const Params& q) {
    double e = q.as_printed ? (1 - q.alpha) / q.p : 1 - q.alpha;
    return Term().mul(x.k).mul(x.v).mul(x.w_s).pow(x.r, q.p).pow(x.f, q.p)
        .pow(x.H, (1 - q.alpha + q.gamma) * (q.p - 1)).pow(x.F, e)
        .pow(x.g, -(q.p - 1)).pow(x.H_s, -q.p * (q.gamma - q.alpha)).value();
}

double c4(const Params& q) { return std::pow((q.p + q.beta - q.alpha + 1) / (q.gamma - q.theta - q.alpha), q.p); }

// ---- alpha = 1 targets (anchored at a)

double lhs_eqq1(const PointView& x, const Params& q) {
    return Term().mul(x.k_s).mul(x.v_s).mul(x.w).mul(x.g).pow(x.G_s, -q.gamma).pow(x.K_s, q.p).value();
}

double rhs_eqq1(const PointView& x, const Params& q) {
    return Term().mul(x.k_s).mul(x.v_s).mul(x.w).pow(x.r, q.p).pow(x.f, q.p)
        .pow(x.G_s, q.gamma * (q.p - 1)).pow(x.g, -(q.p - 1)).pow(x.G, -q.p * (q.gamma - 1)).value();
}

double c_eqq1(const Params& q) { return std::pow((q.p + q.beta) / (q.gamma - q.theta - 1), q.p); }

double c_hardy(const Params& q) { return std::pow(q.p / (q.p - 1), q.p); }
double c_above(const Params& q) { return std::pow(q.p / (q.gamma - 1), q.p); }
double c_below(const Params& q) { return std::pow(q.p / (1 - q.gamma), q.p); }
double c_pp(const Params& q) { return std::pow(q.p, q.p); }
double c_renaud(const Params& q) { return q.p / (q.p - 1); }
double c_one(const Params&) { return 1.0; }
double c_eq15(const Params& q) { return q.p / (q.gamma - 1); }

double lhs_hardy_discrete(const PointView& x, const Params& q) {
    return Term().pow(x.K_s, q.p).pow(x.sigma - q.a, -q.p).value();
}
double lhs_hardy_dense(const PointView& x, const Params& q) {
    return Term().pow(x.K, q.p).pow(x.t - q.a, -q.p).value();
}
double rhs_fp(const PointView& x, const Params& q) { return Term().pow(x.f, q.p).value(); }

double lhs_a5(const PointView& x, const Params& q) {
    return Term().pow(x.t - q.a, -q.gamma).pow(x.K, q.p).value();
}
double lhs_a6(const PointView& x, const Params& q) {
    return Term().pow(x.t - q.a, -q.gamma).pow(x.F, q.p).value();
}
double rhs_a56(const PointView& x, const Params& q) {
    return Term().pow(x.t - q.a, q.p - q.gamma).pow(x.f, q.p).value();
}
double lhs_Fp(const PointView& x, const Params& q) { return Term().pow(x.F, q.p).value(); }
double rhs_a11(const PointView& x, const Params& q) { return Term().pow(x.t - q.a, q.p).pow(x.f, q.p).value(); }
double rhs_h8(const PointView& x, const Params& q) {
    return Term().pow(x.sigma - q.a, q.p).pow(x.f, q.p).value();
}

double lhs_h20(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.K_s, q.p).pow(x.G_s, -q.gamma).value();
}
double lhs_h21(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.F, q.p).pow(x.G_s, -q.gamma).value();
}
double rhs_h2021(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.f, q.p).pow(x.G_s, q.p - q.gamma).value();
}
double lhs_h24(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.K, q.p).pow(x.G, -q.gamma).value();
}
double lhs_h25(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.F, q.p).pow(x.G, -q.gamma).value();
}
double rhs_h2425(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.f, q.p).pow(x.G, q.p - q.gamma).value();
}
double lhs_h30(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.K_s, q.p).pow(x.H, -q.gamma).value();
}
double lhs_h31(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.F, q.p).pow(x.H, -q.gamma).value();
}
double rhs_h3031(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.f, q.p).pow(x.H, q.p - q.gamma).value();
}
double lhs_h11(const PointView& x, const Params& q) {
    return Term().pow(x.K, q.p).pow(x.t - q.a, -q.p).value();
}
double lhs_eq15(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.K, q.p).pow(x.G, -q.gamma).value();
}
double rhs_eq15(const PointView& x, const Params& q) {
    return Term().mul(x.g).pow(x.G, q.p - q.gamma).pow(x.f, q.p).value();
}
double rhs_saker1(const PointView& x, const Params& q) {
    if (q.as_printed) {
        return Term().mul(x.g).pow(x.f, q.p).pow(x.G_s, q.gamma * (q.p - 1)).pow(x.G, -q.gamma * (q.p - 1)).value();
    }
    return Term().mul(x.g).pow(x.f, q.p).pow(x.G_s, q.gamma * (q.p - 1)).pow(x.G, -q.p * (q.gamma - 1)).value();
}

using RD = RoleDefault;

const std::map<Role, RD> general_roles = {{Role::f, RD::required}, {Role::g, RD::required}, {Role::k, RD::one},
                                          {Role::r, RD::one},      {Role::w, RD::one},      {Role::v, RD::one}};
const std::vector<Role> general_optional = {Role::k, Role::r, Role::w, Role::v};
const std::map<Role, RD> weighted_roles = {{Role::f, RD::required}, {Role::g, RD::required}, {Role::k, RD::one},
                                           {Role::r, RD::alias_g},  {Role::w, RD::one},      {Role::v, RD::one}};
const std::map<Role, RD> plain_roles = {{Role::f, RD::required}, {Role::g, RD::one}, {Role::k, RD::one},
                                        {Role::r, RD::one},      {Role::w, RD::one}, {Role::v, RD::one}};

TheoremSpec general(std::string id, std::string summary, Builder l, Builder r, ConstantFn c, std::vector<Cond> conds) {
    TheoremSpec s;
    s.id = std::move(id);
    s.summary = std::move(summary);
    s.roles = general_roles;
    s.optional = general_optional;
    s.conditions = std::move(conds);
    s.lhs = l;
    s.rhs = r;
    s.constant = c;
    return s;
}

TheoremSpec classical(std::string id, std::string summary, Direction d, ScaleReq scale, std::map<Role, RD> roles,
                      Builder l, Builder r, ConstantFn c, std::vector<Cond> conds) {
    TheoremSpec s;
    s.id = std::move(id);
    s.summary = std::move(summary);
    s.direction = d;
    s.scale = scale;
    s.roles = std::move(roles);
    s.lhs = l;
    s.rhs = r;
    s.constant = c;
    s.conditions = {Cond::alpha_one, Cond::S1, Cond::S2};
    if (scale != ScaleReq::any) s.conditions.push_back(Cond::scale);
    s.conditions.insert(s.conditions.end(), conds.begin(), conds.end());
    return s;
}

std::vector<TheoremSpec> build() {
    using C = Cond;
    std::vector<TheoremSpec> out;
    const std::vector<Cond> k1 = {C::S1, C::S2, C::k_nonincreasing, C::S3, C::S4, C::S6, C::S8, C::S10, C::S14};
    const std::vector<Cond> k2 = {C::S1, C::S2, C::k_nondecreasing, C::S3, C::S5, C::S6, C::S9, C::S12, C::S15};
    const std::vector<Cond> k3 = {C::S1, C::S2, C::k_nonincreasing, C::S3, C::S5, C::S7, C::S8, C::S11, C::S14};
    const std::vector<Cond> k4 = {C::S1, C::S2, C::k_nondecreasing, C::S3, C::S4, C::S7, C::S9, C::S13, C::S15};

    auto t1 = general("thm1", "lower cumulatives G, K with gamma > theta + 1", lhs1, rhs1, c1, k1);
    auto t2 = general("thm2", "G with the upper cumulative F, 0 <= gamma < alpha", lhs2, rhs2, c2, k2);
    t2.printed_notes = {"as printed: LHS exponent of G^sigma is alpha-gamma+1 and RHS exponent is p-gamma-alpha+1"};
    auto t3 = general("thm3", "upper tail H with K, 0 <= gamma < alpha", lhs3, rhs3, c3, k3);
    t3.printed_notes = {"the v-condition checked is S14 (K-based, v^sigma denominator), not S15",
                        "alternate form with H^(alpha-gamma+1) is not evaluated"};
    auto t4 = general("thm4", "upper tails H and F with gamma > theta + 1", lhs4, rhs4, c4, k4);
    t4.printed_notes = {"as printed: RHS factor F^((1-alpha)/p) instead of F^(1-alpha)"};
    out.push_back(t1);
    out.push_back(t2);
    out.push_back(t3);
    out.push_back(t4);

    auto c11 = t1;
    c11.id = "cor1.1";
    c11.summary = "thm1 with k = v = w = 1, r = g and theta = beta = 0";
    c11.roles = weighted_roles;
    c11.optional = {};
    c11.conditions.push_back(C::S19);
    out.push_back(c11);

    const std::pair<const char*, ScaleReq> families[] = {
        {"R", ScaleReq::dense}, {"H", ScaleReq::h_lattice}, {"Z", ScaleReq::integers}, {"Q", ScaleReq::q_lattice}};
    for (const auto& [tag, req] : families) {
        const TheoremSpec* base[] = {&out[0], &out[1], &out[2], &out[3]};
        for (int n = 0; n < 4; ++n) {
            TheoremSpec s = *base[n];
            s.id = std::string("cor") + tag + "." + std::to_string(n + 1);
            s.summary = base[n]->id + " on a fixed scale family";
            s.scale = req;
            s.conditions.push_back(C::scale);
            out.push_back(s);
        }
    }

    auto eqq1 = general("eldeeb-eqq1", "alpha = 1 weighted Hardy inequality with nonincreasing k", lhs_eqq1, rhs_eqq1,
                        c_eqq1, {C::alpha_one, C::S1, C::S2, C::k_nonincreasing, C::S3, C::S4, C::S6, C::S8, C::S10,
                                 C::S14});
    out.push_back(eqq1);

    const Direction le = Direction::le, ge = Direction::ge;
    const ScaleReq any = ScaleReq::any, dense = ScaleReq::dense;
    out.push_back(classical("hardy-discrete", "Hardy series inequality", le, ScaleReq::integers, plain_roles,
                            lhs_hardy_discrete, rhs_fp, c_hardy, {C::p_gt_1}));
    out.push_back(classical("hardy-continuous", "Hardy integral inequality", le, dense, plain_roles, lhs_hardy_dense,
                            rhs_fp, c_hardy, {C::p_gt_1}));
    out.push_back(classical("hardy-a5", "power-weighted Hardy inequality, gamma > 1", le, dense, plain_roles, lhs_a5,
                            rhs_a56, c_above, {C::p_gt_1, C::gamma_gt_1}));
    out.push_back(classical("hardy-a6", "power-weighted dual Hardy inequality, gamma < 1", le, dense, plain_roles,
                            lhs_a6, rhs_a56, c_below, {C::p_gt_1, C::gamma_lt_1}));
    out.push_back(classical("hardy-a11", "dual Hardy inequality with constant p^p", le, dense, plain_roles, lhs_Fp,
                            rhs_a11, c_pp, {}));
    out.push_back(classical("copson-h20", "Copson series inequality, 1 < gamma <= p", le, any, weighted_roles,
                            lhs_h20, rhs_h2021, c_above, {C::gamma_gt_1, C::gamma_le_p}));
    out.push_back(classical("copson-h21", "Copson dual series inequality, p > 1 > gamma >= 0", le, any,
                            weighted_roles, lhs_h21, rhs_h2021, c_below, {C::p_gt_1, C::gamma_lt_1, C::gamma_ge_0}));
    out.push_back(classical("copson-h24", "Copson integral inequality, 1 < gamma <= p", le, dense, weighted_roles,
                            lhs_h24, rhs_h2425, c_above, {C::gamma_gt_1, C::gamma_le_p}));
    out.push_back(classical("copson-h25", "Copson dual integral inequality, 0 <= gamma < 1 < p", le, dense,
                            weighted_roles, lhs_h25, rhs_h2425, c_below, {C::p_gt_1, C::gamma_lt_1, C::gamma_ge_0}));
    out.push_back(classical("leindler-h30", "Leindler inequality, p > 1 > gamma >= 0", le, any, weighted_roles,
                            lhs_h30, rhs_h3031, c_below, {C::p_gt_1, C::gamma_lt_1, C::gamma_ge_0}));
    out.push_back(classical("bennett-h31", "Bennett inequality, 1 < gamma <= p", le, any, weighted_roles, lhs_h31,
                            rhs_h3031, c_above, {C::gamma_gt_1, C::gamma_le_p}));
    out.push_back(classical("renaud-h7", "reverse Hardy integral inequality for nonincreasing f", ge, dense,
                            plain_roles, lhs_hardy_dense, rhs_fp, c_renaud, {C::p_gt_1, C::f_nonincreasing}));
    out.push_back(classical("renaud-h8", "reverse dual Hardy series inequality for nonincreasing f", ge,
                            ScaleReq::integers, plain_roles, lhs_Fp, rhs_h8, c_one, {C::p_gt_1, C::f_nonincreasing}));
    out.push_back(classical("renaud-h9", "reverse dual Hardy integral inequality for nonincreasing f", ge, dense,
                            plain_roles, lhs_Fp, rhs_a11, c_one, {C::p_gt_1, C::f_nonincreasing}));
    out.push_back(classical("agarwal-h11", "reverse Hardy inequality on time scales", ge, any, plain_roles, lhs_h11,
                            rhs_fp, c_renaud, {C::p_gt_1, C::f_nonincreasing}));
    out.push_back(classical("eldeeb-15", "reverse Copson-type inequality", ge, any, weighted_roles, lhs_eq15, rhs_eq15,
                            c_eq15, {C::gamma_gt_1, C::f_nonincreasing}));
    auto s1 = classical("saker1", "time-scale Copson inequality, 1 < gamma <= p", le, any, weighted_roles, lhs_h20,
                        rhs_saker1, c_above, {C::gamma_gt_1, C::gamma_le_p});
    s1.printed_notes = {"as printed: RHS ratio (G^sigma/G)^(gamma(p-1)) instead of G^sigma^(gamma(p-1))/G^(p(gamma-1))"};
    out.push_back(s1);
    out.push_back(classical("saker2", "time-scale dual Copson inequality, p > 1 > gamma >= 0", le, any,
                            weighted_roles, lhs_h21, rhs_h2021, c_below, {C::p_gt_1, C::gamma_lt_1, C::gamma_ge_0}));
    out.push_back(classical("saker3", "time-scale Leindler inequality, p > 1 > gamma >= 0", le, any, weighted_roles,
                            lhs_h30, rhs_h3031, c_below, {C::p_gt_1, C::gamma_lt_1, C::gamma_ge_0}));
    out.push_back(classical("saker4", "time-scale Bennett inequality, 1 < gamma <= p", le, any, weighted_roles,
                            lhs_h31, rhs_h3031, c_above, {C::gamma_gt_1, C::gamma_le_p}));
    return out;
}

}  // namespace

const char* role_name(Role r) {
    switch (r) {
        case Role::f: return "f";
        case Role::g: return "g";
        case Role::k: return "k";
        case Role::r: return "r";
        case Role::w: return "w";
        case Role::v: return "v";
    }
    return "?";
}

std::optional<Role> role_from_name(std::string_view s) {
    for (Role r : all_roles)
        if (s == role_name(r)) return r;
    return std::nullopt;
}

std::string cond_name(Cond c) {
    int i = static_cast<int>(c);
    if (c <= Cond::S22) return "S" + std::to_string(i + 1);
    switch (c) {
        case Cond::k_nonincreasing: return "k-nonincreasing";
        case Cond::k_nondecreasing: return "k-nondecreasing";
        case Cond::f_nonincreasing: return "f-nonincreasing";
        case Cond::alpha_one: return "alpha=1";
        case Cond::p_gt_1: return "p>1";
        case Cond::gamma_gt_1: return "gamma>1";
        case Cond::gamma_lt_1: return "gamma<1";
        case Cond::gamma_le_p: return "gamma<=p";
        case Cond::gamma_ge_0: return "gamma>=0";
        case Cond::scale: return "scale";
        default: return "?";
    }
}

const std::vector<TheoremSpec>& catalogue() {
    static const std::vector<TheoremSpec> all = build();
    return all;
}

const TheoremSpec& find_theorem(std::string_view id) {
    for (const auto& s : catalogue())
        if (s.id == id) return s;
    throw InputError("unknown theorem id '" + std::string(id) + "'");
}

std::map<Role, ScaleFunction> resolve_roles(const TheoremSpec& spec, const Case& c) {
    for (const auto& [role, fn] : c.roles) {
        (void)fn;
        auto it = spec.roles.find(role);
        bool allowed = it != spec.roles.end() &&
                       (it->second == RD::required ||
                        std::find(spec.optional.begin(), spec.optional.end(), role) != spec.optional.end());
        if (!allowed) throw InputError(std::string("role ") + role_name(role) + " is not used by " + spec.id);
    }
    std::map<Role, ScaleFunction> out;
    for (Role role : all_roles) {
        auto given = c.roles.find(role);
        if (given != c.roles.end()) {
            out[role] = given->second;
            continue;
        }
        RD d = spec.roles.at(role);
        if (d == RD::required) throw InputError(std::string("missing role ") + role_name(role) + " for " + spec.id);
        if (d == RD::one) out[role] = ScaleFunction::constant(1.0);
    }
    for (Role role : all_roles) {
        if (spec.roles.at(role) == RD::alias_g && !out.count(role)) out[role] = out.at(Role::g);
    }
    return out;
}

}  // namespace hardy
