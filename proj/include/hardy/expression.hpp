#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

enum class NodeKind { number, variable, param, negate, add, sub, mul, div, pow, call };
enum class Builtin { exp, log, sqrt, abs, min, max, pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    double value = 0.0;  // number
    std::string name;    // param
    Builtin fn = Builtin::exp;
    std::vector<NodePtr> args;
};

struct Dual {
    double v;
    double d;
};

// Arithmetic expression in the variable t. Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 't' | ident | func '(' expr (',' expr)* ')' | '(' expr ')'
// The only identifier besides t is `lambda`, used by sharpness families.
class Expression {
public:
    static Expression parse(std::string_view text);
    static Expression constant(double c);
    static Expression from_node(NodePtr root);

    std::string print() const;
    double operator()(double t) const;
    Dual eval_dual(double t) const;
    double derivative(double t) const { return eval_dual(t).d; }

    bool has_params() const;
    Expression bind(std::string_view name, double value) const;

    const Node& root() const { return *root_; }
    NodePtr root_ptr() const { return root_; }

    friend bool operator==(const Expression& a, const Expression& b);

private:
    explicit Expression(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

bool same_tree(const Node& a, const Node& b);

}  // namespace hardy
