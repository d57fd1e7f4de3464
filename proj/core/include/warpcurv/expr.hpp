#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "warpcurv/jet.hpp"

namespace warpcurv {

enum class Op {
    Constant,
    Variable,
    Neg,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Exp,
    Ln,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
};

const char* op_name(Op op);
bool is_unary(Op op);
bool is_binary(Op op);

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    Op op = Op::Constant;
    double constant = 0.0;
    NodePtr lhs;
    NodePtr rhs;
};

/// Immutable expression tree in the base coordinate `t`.
class WarpExpr {
public:
    WarpExpr() = default;
    explicit WarpExpr(NodePtr root, std::string source = {});

    static WarpExpr constant(double c);
    static WarpExpr variable();
    static WarpExpr unary(Op op, const WarpExpr& arg);
    static WarpExpr binary(Op op, const WarpExpr& lhs, const WarpExpr& rhs);

    const ExprNode& root() const { return *root_; }
    const NodePtr& root_ptr() const { return root_; }
    const std::string& source_text() const { return source_; }
    bool empty() const { return root_ == nullptr; }
    bool depends_on_t() const;

    // Plain evaluation; throws EvaluationError on a non-finite intermediate.
    double evaluate(double t) const;
    // Value, first and second derivative by dual-number propagation.
    Jet2 evaluate_jet(double t) const;

private:
    NodePtr root_;
    std::string source_;
};

// Canonical, fully parenthesised text form. Parsing it reproduces a
// structurally equal tree.
std::string to_string(const WarpExpr& expr);

bool structurally_equal(const WarpExpr& a, const WarpExpr& b);

/// Result of parsing a warp specification: either a single smooth
/// expression, or `piecewise(p; left; right)` with a junction at p.
struct WarpDefinition {
    WarpExpr left;
    WarpExpr right;
    std::optional<double> junction;
    std::string source_text;

    bool is_piecewise() const { return junction.has_value(); }
};

std::string to_string(const WarpDefinition& def);

// Parses an expression over `t`. `piecewise` is rejected.
WarpExpr parse_expression(std::string_view text);

// Parses an expression, allowing `piecewise(p; L; R)` at the top level only.
WarpDefinition parse_warp(std::string_view text);

} // namespace warpcurv
