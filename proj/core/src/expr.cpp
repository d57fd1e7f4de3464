#include "warpcurv/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "warpcurv/error.hpp"

namespace warpcurv {

namespace {

struct FunctionName {
    std::string_view name;
    Op op;
};

constexpr std::array<FunctionName, 6> kUnaryFunctions{{
    {"sin", Op::Sin},
    {"cos", Op::Cos},
    {"sinh", Op::Sinh},
    {"cosh", Op::Cosh},
    {"exp", Op::Exp},
    {"ln", Op::Ln},
}};

NodePtr make_node(Op op, double c = 0.0, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto node = std::make_shared<ExprNode>();
    node->op = op;
    node->constant = c;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

template <typename T>
T apply_unary(Op op, const T& x) {
    using std::cos, std::cosh, std::exp, std::log, std::sin, std::sinh;
    switch (op) {
        case Op::Neg: return -x;
        case Op::Sin: return sin(x);
        case Op::Cos: return cos(x);
        case Op::Sinh: return sinh(x);
        case Op::Cosh: return cosh(x);
        case Op::Exp: return exp(x);
        case Op::Ln: return log(x);
        default: break;
    }
    throw EvaluationError(std::string("not a unary operator: ") + op_name(op));
}

template <typename T>
T apply_binary(Op op, const T& a, const T& b) {
    using std::pow;
    switch (op) {
        case Op::Add: return a + b;
        case Op::Sub: return a - b;
        case Op::Mul: return a * b;
        case Op::Div: return a / b;
        case Op::Pow: return pow(a, b);
        default: break;
    }
    throw EvaluationError(std::string("not a binary operator: ") + op_name(op));
}

bool is_finite(double x) { return std::isfinite(x); }
bool is_finite(const Jet2& j) { return j.finite(); }

template <typename T>
T evaluate_node(const ExprNode& node, const T& t) {
    T result{};
    if (node.op == Op::Constant) {
        if constexpr (std::is_same_v<T, Jet2>) {
            result = Jet2::constant(node.constant);
        } else {
            result = node.constant;
        }
    } else if (node.op == Op::Variable) {
        result = t;
    } else if (is_unary(node.op)) {
        result = apply_unary(node.op, evaluate_node(*node.lhs, t));
    } else {
        result = apply_binary(node.op, evaluate_node(*node.lhs, t), evaluate_node(*node.rhs, t));
    }
    if (!is_finite(result)) {
        throw EvaluationError(std::string("non-finite result in '") + op_name(node.op) + "'");
    }
    return result;
}

bool depends_on_t(const ExprNode& node) {
    if (node.op == Op::Variable) return true;
    if (node.lhs && depends_on_t(*node.lhs)) return true;
    return node.rhs && depends_on_t(*node.rhs);
}

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
    if (a.op != b.op) return false;
    if (a.op == Op::Constant) return a.constant == b.constant;
    if (a.op == Op::Variable) return true;
    if (!nodes_equal(*a.lhs, *b.lhs)) return false;
    return !is_binary(a.op) || nodes_equal(*a.rhs, *b.rhs);
}

std::string format_number(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

void print_node(const ExprNode& node, std::string& out) {
    switch (node.op) {
        case Op::Constant:
            if (std::signbit(node.constant)) {
                out += "(" + format_number(node.constant) + ")";
            } else {
                out += format_number(node.constant);
            }
            return;
        case Op::Variable:
            out += "t";
            return;
        case Op::Neg:
            out += "(-";
            print_node(*node.lhs, out);
            out += ")";
            return;
        case Op::Pow:
            out += "pow(";
            print_node(*node.lhs, out);
            out += ", ";
            print_node(*node.rhs, out);
            out += ")";
            return;
        default:
            break;
    }
    if (is_unary(node.op)) {
        out += op_name(node.op);
        out += "(";
        print_node(*node.lhs, out);
        out += ")";
        return;
    }
    const char* symbol = node.op == Op::Add ? " + " : node.op == Op::Sub ? " - " : node.op == Op::Mul ? " * " : " / ";
    out += "(";
    print_node(*node.lhs, out);
    out += symbol;
    print_node(*node.rhs, out);
    out += ")";
}

// Recursive-descent parser. Grammar (see docs/warp-grammar.md):
//   warp    := 'piecewise' '(' expr ';' expr ';' expr ')' | expr
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('-' | '+') factor | power
//   power   := primary ('^' factor)?
//   primary := number | 't' | 'pi' | name '(' expr ')' | 'pow' '(' expr ',' expr ')' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    WarpDefinition parse_top(bool allow_piecewise) {
        WarpDefinition def;
        def.source_text = std::string(text_);
        skip_ws();
        const std::size_t start = pos_;
        if (peek_identifier() == "piecewise") {
            if (!allow_piecewise) {
                throw ParseError("piecewise is not allowed in this context", start);
            }
            pos_ += 9;
            expect('(');
            const std::size_t junction_pos = pos_;
            WarpExpr junction(parse_expr());
            if (junction.depends_on_t()) {
                throw ParseError("piecewise junction must not depend on t", junction_pos);
            }
            expect(';');
            def.left = WarpExpr(parse_expr());
            expect(';');
            def.right = WarpExpr(parse_expr());
            expect(')');
            try {
                def.junction = junction.evaluate(0.0);
            } catch (const EvaluationError& e) {
                throw ParseError(std::string("invalid junction: ") + e.what(), junction_pos);
            }
        } else {
            def.left = WarpExpr(parse_expr());
            def.right = def.left;
        }
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return def;
    }

private:
    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                lhs = make_node(Op::Add, 0.0, lhs, parse_term());
            } else if (accept('-')) {
                lhs = make_node(Op::Sub, 0.0, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                lhs = make_node(Op::Mul, 0.0, lhs, parse_factor());
            } else if (accept('/')) {
                lhs = make_node(Op::Div, 0.0, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_factor() {
        skip_ws();
        if (accept('-')) {
            return make_node(Op::Neg, 0.0, parse_factor());
        }
        if (accept('+')) {
            return parse_factor();
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        skip_ws();
        if (accept('^')) {
            return make_node(Op::Pow, 0.0, base, parse_factor());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (accept('(')) {
            NodePtr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_identifier();
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        auto is_digit = [&](std::size_t i) {
            return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
        };
        std::size_t end = pos_;
        while (is_digit(end)) ++end;
        if (end < text_.size() && text_[end] == '.') {
            ++end;
            while (is_digit(end)) ++end;
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t exp_end = end + 1;
            if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-')) ++exp_end;
            if (is_digit(exp_end)) {
                while (is_digit(exp_end)) ++exp_end;
                end = exp_end;
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
        if (ec != std::errc() || ptr != text_.data() + end) {
            throw ParseError("malformed number", start);
        }
        pos_ = end;
        return make_node(Op::Constant, value);
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        const std::string_view name = peek_identifier();
        pos_ += name.size();
        if (name == "t") {
            return make_node(Op::Variable);
        }
        if (name == "pi") {
            return make_node(Op::Constant, std::numbers::pi);
        }
        if (name == "piecewise") {
            throw ParseError("piecewise is only allowed at the top level", start);
        }
        if (name == "sqrt") {
            expect('(');
            NodePtr arg = parse_expr();
            expect(')');
            return make_node(Op::Pow, 0.0, arg, make_node(Op::Constant, 0.5));
        }
        if (name == "pow") {
            expect('(');
            NodePtr base = parse_expr();
            expect(',');
            NodePtr exponent = parse_expr();
            expect(')');
            return make_node(Op::Pow, 0.0, base, exponent);
        }
        for (const auto& fn : kUnaryFunctions) {
            if (fn.name == name) {
                expect('(');
                NodePtr arg = parse_expr();
                expect(')');
                return make_node(fn.op, 0.0, arg);
            }
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }

    std::string_view peek_identifier() const {
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
            ++end;
        }
        if (end == pos_ || std::isdigit(static_cast<unsigned char>(text_[pos_]))) return {};
        return text_.substr(pos_, end - pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) {
                throw ParseError(std::string("expected '") + c + "' but reached end of expression", pos_);
            }
            throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

const char* op_name(Op op) {
    switch (op) {
        case Op::Constant: return "constant";
        case Op::Variable: return "t";
        case Op::Neg: return "neg";
        case Op::Sin: return "sin";
        case Op::Cos: return "cos";
        case Op::Sinh: return "sinh";
        case Op::Cosh: return "cosh";
        case Op::Exp: return "exp";
        case Op::Ln: return "ln";
        case Op::Add: return "add";
        case Op::Sub: return "sub";
        case Op::Mul: return "mul";
        case Op::Div: return "div";
        case Op::Pow: return "pow";
    }
    return "?";
}

bool is_unary(Op op) {
    switch (op) {
        case Op::Neg:
        case Op::Sin:
        case Op::Cos:
        case Op::Sinh:
        case Op::Cosh:
        case Op::Exp:
        case Op::Ln:
            return true;
        default:
            return false;
    }
}

bool is_binary(Op op) {
    switch (op) {
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
        case Op::Pow:
            return true;
        default:
            return false;
    }
}

WarpExpr::WarpExpr(NodePtr root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}

WarpExpr WarpExpr::constant(double c) { return WarpExpr(make_node(Op::Constant, c)); }

WarpExpr WarpExpr::variable() { return WarpExpr(make_node(Op::Variable)); }

WarpExpr WarpExpr::unary(Op op, const WarpExpr& arg) {
    if (!is_unary(op)) throw ConstructionError(std::string("not a unary operator: ") + op_name(op));
    return WarpExpr(make_node(op, 0.0, arg.root_));
}

WarpExpr WarpExpr::binary(Op op, const WarpExpr& lhs, const WarpExpr& rhs) {
    if (!is_binary(op)) throw ConstructionError(std::string("not a binary operator: ") + op_name(op));
    return WarpExpr(make_node(op, 0.0, lhs.root_, rhs.root_));
}

bool WarpExpr::depends_on_t() const { return root_ && warpcurv::depends_on_t(*root_); }

double WarpExpr::evaluate(double t) const { return evaluate_node<double>(*root_, t); }

Jet2 WarpExpr::evaluate_jet(double t) const { return evaluate_node<Jet2>(*root_, Jet2::variable(t)); }

std::string to_string(const WarpExpr& expr) {
    std::string out;
    print_node(expr.root(), out);
    return out;
}

bool structurally_equal(const WarpExpr& a, const WarpExpr& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    return nodes_equal(a.root(), b.root());
}

std::string to_string(const WarpDefinition& def) {
    if (!def.junction) return to_string(def.left);
    return "piecewise(" + format_number(*def.junction) + "; " + to_string(def.left) + "; " +
           to_string(def.right) + ")";
}

WarpExpr parse_expression(std::string_view text) {
    WarpDefinition def = Parser(text).parse_top(false);
    return WarpExpr(def.left.root_ptr(), std::string(text));
}

WarpDefinition parse_warp(std::string_view text) {
    WarpDefinition def = Parser(text).parse_top(true);
    def.left = WarpExpr(def.left.root_ptr(), std::string(text));
    def.right = WarpExpr(def.right.root_ptr(), std::string(text));
    return def;
}

} // namespace warpcurv
