#include "hardy/casefile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

bool parse_bool(std::string_view s, std::string_view key) {
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    throw InputError(std::string(key) + ": expected true or false, got '" + std::string(s) + "'");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InputError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// content between the outer brackets of e.g. "R[1,2]" after the prefix
std::string_view inside(std::string_view s, std::string_view prefix, char open, char close) {
    if (s.size() < prefix.size() + 2 || s.substr(0, prefix.size()) != prefix || s[prefix.size()] != open ||
        s.back() != close)
        return {};
    return s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
}

ScaleFunction role_function(std::string_view value, const std::filesystem::path& dir, const TimeScale& ts) {
    if (value.substr(0, 6) == "table:") {
        std::filesystem::path p(std::string(trim(value.substr(6))));
        if (p.is_relative()) p = dir / p;
        return load_table(p, ts);
    }
    Expression e = Expression::parse(value);
    if (e.has_params()) throw InputError("'lambda' is only allowed in family templates");
    return ScaleFunction::expression(std::move(e));
}

const std::map<std::string, int, std::less<>> case_keys = {
    {"theorem", 0}, {"scale", 0}, {"a", 0},     {"horizon", 0}, {"alpha", 0},      {"p", 0},
    {"gamma", 0},   {"theta", 0}, {"beta", 0},  {"as_printed", 0}, {"force", 0},   {"growth", 0},
    {"f", 1},       {"g", 1},     {"k", 1},     {"r", 1},       {"w", 1},          {"v", 1},
};

Case build_case(const Section& s, const std::filesystem::path& dir, double factor,
                const std::map<std::string, int, std::less<>>& extra) {
    Case c;
    c.id = s.name;
    std::map<std::string, std::string, std::less<>> kv;
    for (const auto& [k, v] : s.entries) {
        if (!case_keys.count(k) && !extra.count(k))
            throw InputError("line " + std::to_string(s.line) + ": unknown key '" + k + "' in section " + s.name);
        if (kv.count(k)) throw InputError("duplicate key '" + k + "' in section " + s.name);
        kv[k] = v;
    }
    auto need = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw InputError("section " + s.name + ": missing key '" + key + "'");
        return it->second;
    };
    auto opt = [&](const char* key, double& field) {
        if (auto it = kv.find(key); it != kv.end()) field = parse_real(it->second, key);
    };
    c.theorem = need("theorem");
    find_theorem(c.theorem);
    c.scale = parse_scale(need("scale"));
    c.a = parse_real(need("a"), "a");
    c.horizon = parse_real(need("horizon"), "horizon");
    opt("alpha", c.alpha);
    opt("p", c.p);
    opt("gamma", c.gamma);
    opt("theta", c.theta);
    opt("beta", c.beta);
    opt("growth", c.growth);
    if (auto it = kv.find("as_printed"); it != kv.end()) c.as_printed = parse_bool(it->second, "as_printed");
    if (auto it = kv.find("force"); it != kv.end()) c.force = parse_bool(it->second, "force");
    c.horizon = scaled_horizon(c.scale, c.horizon, factor);
    for (Role r : all_roles) {
        auto it = kv.find(role_name(r));
        if (it == kv.end()) continue;
        try {
            c.roles[r] = role_function(it->second, dir, c.scale);
        } catch (const ParseError& e) {
            throw ParseError(e.offset, std::string("role ") + role_name(r) + ": " + e.what(), e.expected);
        }
    }
    // missing or unexpected roles are reported before any numerics run
    resolve_roles(find_theorem(c.theorem), c);
    return c;
}

}  // namespace

std::vector<Section> read_sections(std::string_view text) {
    std::vector<Section> out;
    int lineno = 0;
    for (std::string_view line : split(text, '\n')) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string_view::npos) line = trim(line.substr(0, h));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw InputError("line " + std::to_string(lineno) + ": unterminated section header");
            auto words = split(trim(line.substr(1, line.size() - 2)), ' ');
            std::vector<std::string_view> parts;
            for (auto w : words)
                if (!w.empty()) parts.push_back(w);
            if (parts.size() != 2)
                throw InputError("line " + std::to_string(lineno) + ": section header must be [kind name]");
            out.push_back({std::string(parts[0]), std::string(parts[1]), lineno, {}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw InputError("line " + std::to_string(lineno) + ": expected key = value");
        if (out.empty()) throw InputError("line " + std::to_string(lineno) + ": key outside of a section");
        auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) throw InputError("line " + std::to_string(lineno) + ": empty key");
        out.back().entries.emplace_back(std::string(key), std::string(value));
    }
    return out;
}

double parse_real(std::string_view s, std::string_view what) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || std::isnan(v))
        throw InputError(std::string(what) + ": not a number: '" + std::string(s) + "'");
    return v;
}

TimeScale parse_scale(std::string_view s) {
    s = trim(s);
    if (s == "Z") return TimeScale::integers();
    if (auto in = inside(s, "R", '[', ']'); !in.empty()) {
        auto p = split(in, ',');
        if (p.size() == 2) {
            double lo = parse_real(p[0], "scale"), hi = parse_real(p[1], "scale");
            if (std::isfinite(lo) && lo < hi) return TimeScale::real_interval(lo, hi);
        }
    } else if (auto hz = inside(s, "hZ", '(', ')'); !hz.empty()) {
        auto p = split(hz, ',');
        if (p.size() == 1 || p.size() == 2) {
            double h = parse_real(p[0], "scale");
            double o = p.size() == 2 ? parse_real(p[1], "scale") : 0.0;
            if (h > 0 && std::isfinite(h) && std::isfinite(o)) return TimeScale::lattice(h, o);
        }
    } else if (auto qz = inside(s, "qZ", '(', ')'); !qz.empty()) {
        double q = parse_real(qz, "scale");
        if (q > 1 && std::isfinite(q)) return TimeScale::q_lattice(q);
    } else if (auto set = inside(s, "set", '[', ']'); !set.empty()) {
        std::vector<double> pts;
        for (auto x : split(set, ',')) pts.push_back(parse_real(x, "scale"));
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i] > pts[i - 1])) throw InputError("scale: set points must be strictly increasing");
        for (double x : pts)
            if (!std::isfinite(x)) throw InputError("scale: set points must be finite");
        return TimeScale::finite_set(std::move(pts));
    }
    throw InputError("scale: cannot read '" + std::string(s) + "'");
}

ScaleFunction load_table(const std::filesystem::path& path, const TimeScale& ts) {
    std::string text = read_file(path);
    auto lines = split(text, '\n');
    std::size_t i = 0;
    while (i < lines.size() && lines[i].empty()) ++i;
    if (i == lines.size() || split(lines[i], ',') != std::vector<std::string_view>{"t", "value"})
        throw InputError(path.string() + ": header must be t,value");
    std::vector<std::pair<double, double>> rows;
    for (++i; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto cells = split(lines[i], ',');
        std::string where = path.string() + ":" + std::to_string(i + 1);
        if (cells.size() != 2) throw InputError(where + ": expected two columns");
        double t = parse_real(cells[0], where), v = parse_real(cells[1], where);
        auto snapped = ts.snap(t);
        if (!snapped) throw InputError(where + ": " + std::string(cells[0]) + " is not a member of " + ts.literal());
        rows.emplace_back(*snapped, v);
    }
    std::sort(rows.begin(), rows.end());
    std::vector<double> pts, vals;
    for (auto& [t, v] : rows) {
        pts.push_back(t);
        vals.push_back(v);
    }
    try {
        return ScaleFunction::table(std::move(pts), std::move(vals));
    } catch (const Error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

double horizon_scale_from_env() {
    const char* s = std::getenv("HORIZON_SCALE");
    if (!s || !*s) return 1.0;
    double v = parse_real(s, "HORIZON_SCALE");
    if (!(v > 0) || !std::isfinite(v)) throw InputError("HORIZON_SCALE must be a positive number");
    return v;
}

double scaled_horizon(const TimeScale& ts, double horizon, double factor) {
    if (factor == 1.0) return horizon;
    return ts.ceil_member(horizon * factor);
}

Case case_from_section(const Section& s, const std::filesystem::path& dir, double horizon_factor) {
    if (s.kind != "case") throw InputError("line " + std::to_string(s.line) + ": expected a [case id] section");
    return build_case(s, dir, horizon_factor, {});
}

std::vector<Case> load_cases(const std::filesystem::path& file, double horizon_factor) {
    auto sections = read_sections(read_file(file));
    if (sections.empty()) throw InputError(file.string() + ": no [case id] sections");
    std::vector<Case> out;
    for (const auto& s : sections) out.push_back(case_from_section(s, file.parent_path(), horizon_factor));
    return out;
}

FamilyFile load_family(const std::filesystem::path& file, double horizon_factor) {
    auto sections = read_sections(read_file(file));
    if (sections.size() != 1 || sections[0].kind != "family")
        throw InputError(file.string() + ": expected exactly one [family id] section");
    const Section& s = sections[0];
    const std::map<std::string, int, std::less<>> extra = {
        {"template", 0}, {"lambda_lo", 0}, {"lambda_hi", 0}, {"role", 0}, {"description", 0}};
    Section base = s;
    base.entries.clear();
    std::map<std::string, std::string, std::less<>> fam;
    for (const auto& e : s.entries) {
        if (extra.count(e.first)) {
            fam[e.first] = e.second;
        } else {
            base.entries.push_back(e);
        }
    }
    FamilyFile out;
    out.id = s.name;
    Role role = Role::f;
    if (fam.count("role")) {
        auto r = role_from_name(fam["role"]);
        if (!r) throw InputError("family role must be one of f, g, k, r, w, v");
        role = *r;
    }
    // the template stands in for the probed role during validation
    base.entries.emplace_back(role_name(role), "1");
    out.templ = build_case(base, file.parent_path(), horizon_factor, {});
    out.templ.roles.erase(role);
    for (const char* k : {"template", "lambda_lo", "lambda_hi"})
        if (!fam.count(k)) throw InputError("family " + s.name + ": missing key '" + k + "'");
    out.family.templ = Expression::parse(fam["template"]);
    out.family.lo = parse_real(fam["lambda_lo"], "lambda_lo");
    out.family.hi = parse_real(fam["lambda_hi"], "lambda_hi");
    if (!(out.family.lo < out.family.hi)) throw InputError("family " + s.name + ": need lambda_lo < lambda_hi");
    out.family.role = role;
    out.family.description = fam.count("description") ? fam["description"] : fam["template"];
    return out;
}

}  // namespace hardy
