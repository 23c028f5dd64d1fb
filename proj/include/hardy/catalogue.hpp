#pragma once

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/scale_function.hpp"
#include "hardy/timescale.hpp"

namespace hardy {

enum class Role { f, g, k, r, w, v };
inline constexpr std::array<Role, 6> all_roles = {Role::f, Role::g, Role::k, Role::r, Role::w, Role::v};
const char* role_name(Role r);
std::optional<Role> role_from_name(std::string_view s);

// One verification case (the hypothesis set of a theorem instance).
struct Case {
    std::string id = "case";
    std::string theorem;
    TimeScale scale = TimeScale::integers();
    double a = 1.0;
    double horizon = 2.0;
    double alpha = 1.0;
    double p = 2.0;
    double gamma = 0.0;
    double theta = 0.0;
    double beta = 0.0;
    std::map<Role, ScaleFunction> roles;
    bool as_printed = false;
    bool force = false;
    double growth = 1.01;  // S6 warning threshold for G(T)/G(T/2)
};

enum class Direction { le, ge };

// Values available to the integrand builders at one point t of the window.
// Suffix _s means "evaluated at sigma(t)".
struct PointView {
    double t, sigma, mu;
    double f, g, k, r, w, v;
    double f_s, g_s, k_s, r_s, w_s, v_s;
    double G, K, H, F;
    double G_s, K_s, H_s, F_s;
};

struct Params {
    double p, alpha, gamma, theta, beta, a;
    bool as_printed;
};

using Builder = double (*)(const PointView&, const Params&);
using ConstantFn = double (*)(const Params&);

enum class ScaleReq { any, dense, scattered, integers, h_lattice, q_lattice };

// Named hypothesis checks. S1..S22 are the standing assumptions; the rest are
// the side conditions of the classical entries.
enum class Cond {
    S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13, S14, S15,
    S16, S17, S18, S19, S20, S21, S22,
    k_nonincreasing, k_nondecreasing, f_nonincreasing,
    alpha_one, p_gt_1, gamma_gt_1, gamma_lt_1, gamma_le_p, gamma_ge_0, scale,
};
std::string cond_name(Cond c);

enum class RoleDefault { required, one, alias_g };

struct TheoremSpec {
    std::string id;
    Direction direction = Direction::le;
    std::string summary;
    ScaleReq scale = ScaleReq::any;
    // how each role is obtained when the case does not give it; roles marked
    // one/alias_g that are not in `optional` must not appear in a case
    std::map<Role, RoleDefault> roles;
    std::vector<Role> optional;
    std::vector<Cond> conditions;
    Builder lhs = nullptr;
    Builder rhs = nullptr;
    ConstantFn constant = nullptr;
    std::vector<std::string> printed_notes;
};

const std::vector<TheoremSpec>& catalogue();
const TheoremSpec& find_theorem(std::string_view id);  // throws InputError

// Fills in defaulted and aliased roles; throws InputError on missing or
// unexpected roles.
std::map<Role, ScaleFunction> resolve_roles(const TheoremSpec& spec, const Case& c);

struct ConditionResult {
    std::string id;
    bool pass = true;
    double margin = 0.0;  // worst signed margin, normalized; >= 0 means satisfied
    std::string detail;
};

struct HypothesisReport {
    std::vector<ConditionResult> conditions;
    std::vector<std::string> warnings;
    bool ok() const;
};

HypothesisReport check_hypotheses(const Case& c, const TheoremSpec& spec);

enum class Verdict { verified, violated, hypotheses_unmet, inconclusive };
const char* verdict_name(Verdict v);

struct VerificationReport {
    static constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::string case_id;
    std::string theorem_id;
    Direction direction = Direction::le;
    double lhs = nan;
    double rhs = nan;
    double ratio = nan;
    double constant_value = nan;
    double lhs_sensitivity = nan;
    double rhs_sensitivity = nan;
    double horizon = nan;
    double extended_horizon = nan;
    HypothesisReport hypotheses;
    Verdict verdict = Verdict::inconclusive;
    std::string error;
    std::vector<std::string> footnotes;
};

inline constexpr double verdict_rel_tol = 1e-9;

VerificationReport evaluate(const TheoremSpec& spec, const Case& c);
VerificationReport evaluate(const Case& c);  // uses c.theorem

// LHS and RHS (constant included) on the window [a, horizon) only
struct Sides {
    double lhs;
    double rhs;
};
Sides evaluate_sides(const TheoremSpec& spec, const Case& c);

struct ReductionPair {
    std::string general;
    std::string target;
    std::vector<Cond> flags;  // specializations applied to the shared case (S16..S22)
    ScaleReq scale = ScaleReq::any;
    bool gamma_zero = false;
};

const std::vector<ReductionPair>& reduction_pairs();
// applies the pair's specialization flags to a case for the general theorem
Case specialize(const ReductionPair& pair, const Case& c);
// max relative discrepancy over {lhs, rhs}; the case must have alpha == 1
double reduction_check(const ReductionPair& pair, const Case& c);

double relative_discrepancy(double x, double y);

}  // namespace hardy
