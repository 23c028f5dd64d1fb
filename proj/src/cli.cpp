#include "hardy/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hardy/casefile.hpp"
#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/suites.hpp"

namespace hardy {

namespace {

nlohmann::json number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

std::string role_list(const Case& c) {
    std::string s;
    for (const auto& [r, fn] : c.roles) {
        if (!s.empty()) s += ", ";
        s += std::string(role_name(r)) + " = " + fn.describe();
    }
    return s;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "cannot write " << path << "\n";
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

}  // namespace

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::verified: return 0;
        case Verdict::violated: return 1;
        case Verdict::hypotheses_unmet: return 2;
        case Verdict::inconclusive: return 4;
    }
    return 4;
}

std::string report_text(const Case& c, const VerificationReport& rep) {
    std::ostringstream o;
    auto fd = [](double x) { return format_double(x); };
    o << "case " << rep.case_id << " (" << rep.theorem_id << ", "
      << (rep.direction == Direction::le ? "lhs <= rhs" : "lhs >= rhs") << ")\n";
    o << "  scale " << c.scale.literal() << ", a = " << fd(c.a) << ", horizon = " << fd(rep.horizon)
      << ", extended horizon = " << fd(rep.extended_horizon) << "\n";
    o << "  alpha = " << fd(c.alpha) << ", p = " << fd(c.p) << ", gamma = " << fd(c.gamma)
      << ", theta = " << fd(c.theta) << ", beta = " << fd(c.beta) << (c.as_printed ? ", as printed" : "") << "\n";
    o << "  roles: " << role_list(c) << "\n";
    o << "  lhs = " << fd(rep.lhs) << "\n  rhs = " << fd(rep.rhs) << "\n  ratio = " << fd(rep.ratio) << "\n";
    o << "  constant = " << fd(rep.constant_value) << "\n";
    o << "  sensitivity: lhs " << fd(rep.lhs_sensitivity) << ", rhs " << fd(rep.rhs_sensitivity) << "\n";
    o << "  hypotheses:\n";
    for (const auto& h : rep.hypotheses.conditions) {
        o << "    " << h.id << (h.pass ? " pass" : " FAIL") << " margin " << fd(h.margin) << " (" << h.detail
          << ")\n";
    }
    for (const auto& w : rep.hypotheses.warnings) o << "  warning: " << w << "\n";
    for (const auto& f : rep.footnotes) o << "  note: " << f << "\n";
    if (!rep.error.empty()) o << "  error: " << rep.error << "\n";
    o << "  verdict " << verdict_name(rep.verdict) << "\n";
    return o.str();
}

std::string report_json(const Case& c, const VerificationReport& rep) {
    nlohmann::json j;
    j["case_id"] = rep.case_id;
    j["theorem_id"] = rep.theorem_id;
    j["direction"] = rep.direction == Direction::le ? "LE" : "GE";
    j["scale"] = c.scale.literal();
    j["a"] = number(c.a);
    j["alpha"] = number(c.alpha);
    j["p"] = number(c.p);
    j["gamma"] = number(c.gamma);
    j["theta"] = number(c.theta);
    j["beta"] = number(c.beta);
    j["as_printed"] = c.as_printed;
    j["horizon"] = number(rep.horizon);
    j["extended_horizon"] = number(rep.extended_horizon);
    j["lhs"] = number(rep.lhs);
    j["rhs"] = number(rep.rhs);
    j["ratio"] = number(rep.ratio);
    j["constant"] = number(rep.constant_value);
    j["lhs_sensitivity"] = number(rep.lhs_sensitivity);
    j["rhs_sensitivity"] = number(rep.rhs_sensitivity);
    j["hypotheses"] = nlohmann::json::array();
    for (const auto& h : rep.hypotheses.conditions)
        j["hypotheses"].push_back({{"id", h.id}, {"pass", h.pass}, {"margin", number(h.margin)}, {"detail", h.detail}});
    j["warnings"] = rep.hypotheses.warnings;
    j["footnotes"] = rep.footnotes;
    if (!rep.error.empty()) j["error"] = rep.error;
    j["verdict"] = verdict_name(rep.verdict);
    return j.dump(2) + "\n";
}

int run_case(const std::filesystem::path& file, std::ostream& out, std::ostream& err, bool json,
             double horizon_factor) {
    std::vector<Case> cases;
    try {
        cases = load_cases(file, horizon_factor);
    } catch (const ParseError& e) {
        err << file.string() << ": parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << file.string() << ": " << e.what() << "\n";
        return 3;
    }
    int code = 0;
    for (const Case& c : cases) {
        try {
            auto rep = evaluate(c);
            out << (json ? report_json(c, rep) : report_text(c, rep));
            if (code == 0) code = exit_code(rep.verdict);
        } catch (const Error& e) {
            err << "case " << c.id << ": " << e.what() << "\n";
            if (code == 0) code = 3;
        }
    }
    return code;
}

int run_suite_command(const std::string& name, std::uint64_t seed, const std::string& csv_path, std::ostream& out,
                      std::ostream& err, double horizon_factor) {
    std::vector<SuiteRow> rows;
    try {
        rows = run_suite(name, seed, horizon_factor);
    } catch (const InputError& e) {
        err << e.what() << "\n";
        return 3;
    }
    std::string csv = suite_csv(rows);
    if (csv_path.empty() || csv_path == "-") {
        out << csv;
        err << suite_summary(name, rows) << "\n";
    } else {
        if (!write_file(csv_path, csv, err)) return 3;
        out << suite_summary(name, rows) << "\n";
    }
    return all_verified(rows) ? 0 : 1;
}

int run_sharpness(const std::filesystem::path& file, const std::string& csv_path, std::ostream& out,
                  std::ostream& err, double horizon_factor) {
    FamilyFile fam;
    try {
        fam = load_family(file, horizon_factor);
    } catch (const ParseError& e) {
        err << file.string() << ": parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << file.string() << ": " << e.what() << "\n";
        return 3;
    }
    MaximizeResult m;
    try {
        m = maximize(find_theorem(fam.templ.theorem), fam.family, fam.templ);
    } catch (const AllDegenerate& e) {
        err << e.what() << "\n";
        return 4;
    }
    std::ostringstream csv;
    csv << "lambda,lhs,rhs,ratio\n";
    for (const auto& tp : m.trace) {
        csv << format_double(tp.lambda) << ',' << format_double(tp.lhs) << ',' << format_double(tp.rhs) << ','
            << format_double(tp.ratio) << '\n';
    }
    std::string summary = "family " + fam.id + " (" + fam.family.description + ") on " + fam.templ.theorem +
                          ": best ratio " + format_double(m.best_ratio) + " at lambda " +
                          format_double(m.best_lambda) + "\n";
    if (csv_path.empty() || csv_path == "-") {
        out << csv.str();
        err << summary;
    } else {
        if (!write_file(csv_path, csv.str(), err)) return 3;
        out << summary;
    }
    return m.best_ratio <= 1 + verdict_rel_tol ? 0 : 1;
}

int run_selftest(std::ostream& out, std::ostream&) {
    auto rows = run_suite("calculus", 1);
    out << suite_summary("calculus", rows) << "\n";
    for (const auto& r : rows)
        if (r.verdict != "verified") out << "  " << r.case_id << " " << r.theorem_id << " " << r.verdict << "\n";
    return all_verified(rows) ? 0 : 1;
}

}  // namespace hardy
