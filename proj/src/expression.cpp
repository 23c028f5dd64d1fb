#include "hardy/expression.hpp"

#include <charconv>
#include <cmath>
#include <map>

#include "hardy/errors.hpp"
#include "hardy/format.hpp"

namespace hardy {

namespace {

constexpr int max_depth = 200;

const std::map<std::string, std::pair<Builtin, int>, std::less<>>& builtins() {
    static const std::map<std::string, std::pair<Builtin, int>, std::less<>> table = {
        {"exp", {Builtin::exp, 1}}, {"log", {Builtin::log, 1}}, {"sqrt", {Builtin::sqrt, 1}},
        {"abs", {Builtin::abs, 1}}, {"min", {Builtin::min, 2}}, {"max", {Builtin::max, 2}},
        {"pow", {Builtin::pow, 2}},
    };
    return table;
}

const char* builtin_name(Builtin f) {
    switch (f) {
        case Builtin::exp: return "exp";
        case Builtin::log: return "log";
        case Builtin::sqrt: return "sqrt";
        case Builtin::abs: return "abs";
        case Builtin::min: return "min";
        case Builtin::max: return "max";
        case Builtin::pow: return "pow";
    }
    return "?";
}

NodePtr make(NodeKind k, std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->args = std::move(args);
    return n;
}

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::number;
    n->value = v;
    return n;
}

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::vector<std::string> operand_start = {"number", "t", "function", "(", "-"};

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr run() {
        NodePtr n = expr(0);
        skip();
        if (pos_ != s_.size()) fail("unexpected character", {"+", "-", "*", "/", "^", "end of input"});
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
        throw ParseError(pos_, msg, std::move(expected));
    }

    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void guard(int depth) const {
        if (depth > max_depth) fail("expression nested too deeply", {});
    }

    NodePtr expr(int depth) {
        guard(depth);
        NodePtr lhs = term(depth + 1);
        for (;;) {
            if (accept('+')) {
                lhs = make(NodeKind::add, {lhs, term(depth + 1)});
            } else if (accept('-')) {
                lhs = make(NodeKind::sub, {lhs, term(depth + 1)});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term(int depth) {
        guard(depth);
        NodePtr lhs = unary(depth + 1);
        for (;;) {
            if (accept('*')) {
                lhs = make(NodeKind::mul, {lhs, unary(depth + 1)});
            } else if (accept('/')) {
                lhs = make(NodeKind::div, {lhs, unary(depth + 1)});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary(int depth) {
        guard(depth);
        if (accept('-')) return make(NodeKind::negate, {unary(depth + 1)});
        NodePtr base = primary(depth + 1);
        if (accept('^')) return make(NodeKind::pow, {base, unary(depth + 1)});
        return base;
    }

    NodePtr primary(int depth) {
        guard(depth);
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input", operand_start);
        char c = s_[pos_];
        if (is_digit(c) || c == '.') return number();
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr(depth + 1);
            if (!accept(')')) fail("missing closing parenthesis", {")"});
            return inner;
        }
        if (is_ident_start(c)) return identifier(depth);
        fail("unexpected character", operand_start);
    }

    NodePtr number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        }
        if (pos_ - start == 1 && s_[start] == '.') {
            pos_ = start;
            fail("malformed number", {"number"});
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ >= s_.size() || !is_digit(s_[pos_])) {
                pos_ = save + 1;
                fail("malformed exponent", {"digit"});
            }
            while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        }
        double v = 0.0;
        auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (res.ec != std::errc() || !std::isfinite(v)) {
            pos_ = start;
            fail("number out of range", {"number"});
        }
        return make_number(v);
    }

    NodePtr identifier(int depth) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (is_ident_start(s_[pos_]) || is_digit(s_[pos_]))) ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        if (name == "t") return make(NodeKind::variable);
        if (name == "lambda") {
            auto n = std::make_shared<Node>();
            n->kind = NodeKind::param;
            n->name = "lambda";
            return n;
        }
        auto it = builtins().find(name);
        if (it == builtins().end()) {
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'", {"t", "lambda", "function"});
        }
        if (!accept('(')) fail("expected '(' after function name", {"("});
        std::vector<NodePtr> args;
        args.push_back(expr(depth + 1));
        while (accept(',')) args.push_back(expr(depth + 1));
        if (!accept(')')) fail("missing closing parenthesis", {")", ","});
        if (static_cast<int>(args.size()) != it->second.second) {
            fail(std::string(name) + " takes " + std::to_string(it->second.second) + " argument(s)", {});
        }
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::call;
        n->fn = it->second.first;
        n->args = std::move(args);
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

int precedence(const Node& n) {
    switch (n.kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul:
        case NodeKind::div: return 2;
        case NodeKind::negate: return 3;
        case NodeKind::pow: return 4;
        default: return 5;
    }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& c, bool parens, std::string& out) {
    if (parens) out += '(';
    print_node(c, out);
    if (parens) out += ')';
}

void print_node(const Node& n, std::string& out) {
    int prec = precedence(n);
    switch (n.kind) {
        case NodeKind::number: out += format_double(n.value); break;
        case NodeKind::variable: out += 't'; break;
        case NodeKind::param: out += n.name; break;
        case NodeKind::negate:
            out += '-';
            print_child(*n.args[0], precedence(*n.args[0]) < prec, out);
            break;
        case NodeKind::add:
        case NodeKind::sub:
        case NodeKind::mul:
        case NodeKind::div: {
            static const char* ops[] = {" + ", " - ", "*", "/"};
            int op = static_cast<int>(n.kind) - static_cast<int>(NodeKind::add);
            print_child(*n.args[0], precedence(*n.args[0]) < prec, out);
            out += ops[op];
            // a negation on the right parses back as an operand, so it needs no parentheses
            const Node& r = *n.args[1];
            print_child(r, precedence(r) <= prec && r.kind != NodeKind::negate, out);
            break;
        }
        case NodeKind::pow:
            print_child(*n.args[0], precedence(*n.args[0]) <= prec, out);
            out += '^';
            print_child(*n.args[1], precedence(*n.args[1]) < 3, out);
            break;
        case NodeKind::call:
            out += builtin_name(n.fn);
            out += '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out += ", ";
                print_node(*n.args[i], out);
            }
            out += ')';
            break;
    }
}

double eval(const Node& n, double t) {
    switch (n.kind) {
        case NodeKind::number: return n.value;
        case NodeKind::variable: return t;
        case NodeKind::param: throw InputError("unbound parameter " + n.name);
        case NodeKind::negate: return -eval(*n.args[0], t);
        case NodeKind::add: return eval(*n.args[0], t) + eval(*n.args[1], t);
        case NodeKind::sub: return eval(*n.args[0], t) - eval(*n.args[1], t);
        case NodeKind::mul: return eval(*n.args[0], t) * eval(*n.args[1], t);
        case NodeKind::div: return eval(*n.args[0], t) / eval(*n.args[1], t);
        case NodeKind::pow: return std::pow(eval(*n.args[0], t), eval(*n.args[1], t));
        case NodeKind::call: {
            double x = eval(*n.args[0], t);
            switch (n.fn) {
                case Builtin::exp: return std::exp(x);
                case Builtin::log: return std::log(x);
                case Builtin::sqrt: return std::sqrt(x);
                case Builtin::abs: return std::abs(x);
                case Builtin::min: return std::min(x, eval(*n.args[1], t));
                case Builtin::max: return std::max(x, eval(*n.args[1], t));
                case Builtin::pow: return std::pow(x, eval(*n.args[1], t));
            }
        }
    }
    return std::nan("");
}

Dual dual_pow(Dual a, Dual b) {
    double v = std::pow(a.v, b.v);
    double d = 0.0;
    if (a.d != 0.0) d += b.v * std::pow(a.v, b.v - 1.0) * a.d;
    if (b.d != 0.0) d += v * std::log(a.v) * b.d;
    return {v, d};
}

Dual eval_d(const Node& n, double t) {
    switch (n.kind) {
        case NodeKind::number: return {n.value, 0.0};
        case NodeKind::variable: return {t, 1.0};
        case NodeKind::param: throw InputError("unbound parameter " + n.name);
        case NodeKind::negate: {
            Dual a = eval_d(*n.args[0], t);
            return {-a.v, -a.d};
        }
        case NodeKind::add: {
            Dual a = eval_d(*n.args[0], t), b = eval_d(*n.args[1], t);
            return {a.v + b.v, a.d + b.d};
        }
        case NodeKind::sub: {
            Dual a = eval_d(*n.args[0], t), b = eval_d(*n.args[1], t);
            return {a.v - b.v, a.d - b.d};
        }
        case NodeKind::mul: {
            Dual a = eval_d(*n.args[0], t), b = eval_d(*n.args[1], t);
            return {a.v * b.v, a.d * b.v + a.v * b.d};
        }
        case NodeKind::div: {
            Dual a = eval_d(*n.args[0], t), b = eval_d(*n.args[1], t);
            return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
        }
        case NodeKind::pow: return dual_pow(eval_d(*n.args[0], t), eval_d(*n.args[1], t));
        case NodeKind::call: {
            Dual a = eval_d(*n.args[0], t);
            switch (n.fn) {
                case Builtin::exp: {
                    double e = std::exp(a.v);
                    return {e, e * a.d};
                }
                case Builtin::log: return {std::log(a.v), a.d / a.v};
                case Builtin::sqrt: {
                    double s = std::sqrt(a.v);
                    return {s, a.d / (2.0 * s)};
                }
                case Builtin::abs: return {std::abs(a.v), a.v < 0 ? -a.d : a.d};
                case Builtin::min: {
                    Dual b = eval_d(*n.args[1], t);
                    return b.v < a.v ? b : a;
                }
                case Builtin::max: {
                    Dual b = eval_d(*n.args[1], t);
                    return b.v > a.v ? b : a;
                }
                case Builtin::pow: return dual_pow(a, eval_d(*n.args[1], t));
            }
        }
    }
    return {std::nan(""), std::nan("")};
}

bool any_param(const Node& n) {
    if (n.kind == NodeKind::param) return true;
    for (const auto& a : n.args)
        if (any_param(*a)) return true;
    return false;
}

NodePtr substitute(const NodePtr& n, std::string_view name, double value) {
    if (n->kind == NodeKind::param && n->name == name) return make_number(value);
    if (n->args.empty()) return n;
    auto copy = std::make_shared<Node>(*n);
    for (auto& a : copy->args) a = substitute(a, name, value);
    return copy;
}

}  // namespace

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).run()); }

Expression Expression::constant(double c) { return Expression(make_number(c)); }

Expression Expression::from_node(NodePtr root) { return Expression(std::move(root)); }

std::string Expression::print() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

double Expression::operator()(double t) const { return eval(*root_, t); }

Dual Expression::eval_dual(double t) const { return eval_d(*root_, t); }

bool Expression::has_params() const { return any_param(*root_); }

Expression Expression::bind(std::string_view name, double value) const {
    return Expression(substitute(root_, name, value));
}

bool same_tree(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
    if (a.kind == NodeKind::number && !(a.value == b.value && std::signbit(a.value) == std::signbit(b.value))) {
        return false;
    }
    if (a.kind == NodeKind::param && a.name != b.name) return false;
    if (a.kind == NodeKind::call && a.fn != b.fn) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!same_tree(*a.args[i], *b.args[i])) return false;
    return true;
}

bool operator==(const Expression& a, const Expression& b) { return same_tree(*a.root_, *b.root_); }

}  // namespace hardy
