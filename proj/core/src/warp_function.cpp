#include "warpcurv/warp_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "warpcurv/error.hpp"

namespace warpcurv {

namespace {

class ExprBranch final : public WarpBranch {
public:
    explicit ExprBranch(WarpExpr expr) : expr_(std::move(expr)) {}

    Jet2 jet(double t) const override { return expr_.evaluate_jet(t); }
    double value(double t) const override { return expr_.evaluate(t); }
    std::string describe() const override { return to_string(expr_); }
    const WarpExpr* expression() const override { return &expr_; }

private:
    WarpExpr expr_;
};

class NumericBranch final : public WarpBranch {
public:
    NumericBranch(JetFunction jet, ValueFunction value, std::string label)
        : jet_(std::move(jet)), value_(std::move(value)), label_(std::move(label)) {}

    Jet2 jet(double t) const override {
        const Jet2 j = jet_(t);
        if (!j.finite()) {
            throw EvaluationError("non-finite jet from '" + label_ + "'");
        }
        return j;
    }

    double value(double t) const override {
        const double v = value_ ? value_(t) : jet_(t).value;
        if (!std::isfinite(v)) {
            throw EvaluationError("non-finite value from '" + label_ + "'");
        }
        return v;
    }

    std::string describe() const override { return label_; }

private:
    JetFunction jet_;
    ValueFunction value_;
    std::string label_;
};

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

const char* side_name(Side side) {
    switch (side) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::Auto: return "auto";
    }
    return "?";
}

WarpFunction::WarpFunction(std::shared_ptr<const WarpBranch> left, std::shared_ptr<const WarpBranch> right,
                           std::optional<double> junction, Interval domain)
    : left_(std::move(left)), right_(std::move(right)), junction_(junction), domain_(domain) {}

WarpFunction WarpFunction::from_definition(const WarpDefinition& def, Interval domain, const WarpOptions& options) {
    if (def.junction) {
        return piecewise(*def.junction, def.left, def.right, domain, options);
    }
    return smooth(def.left, domain, options);
}

WarpFunction WarpFunction::parse(std::string_view text, Interval domain, const WarpOptions& options) {
    return from_definition(parse_warp(text), domain, options);
}

WarpFunction WarpFunction::smooth(const WarpExpr& expr, Interval domain, const WarpOptions& options) {
    auto branch = std::make_shared<const ExprBranch>(expr);
    WarpFunction f(branch, branch, std::nullopt, domain);
    f.validate(options);
    return f;
}

WarpFunction WarpFunction::piecewise(double junction, const WarpExpr& left, const WarpExpr& right, Interval domain,
                                     const WarpOptions& options) {
    WarpFunction f(std::make_shared<const ExprBranch>(left), std::make_shared<const ExprBranch>(right), junction,
                   domain);
    f.validate(options);
    return f;
}

WarpFunction WarpFunction::numeric(JetFunction jet, Interval domain, std::string label, ValueFunction value,
                                   const WarpOptions& options) {
    if (!jet) {
        throw ConstructionError("numeric warp '" + label + "' has no jet function");
    }
    auto branch = std::make_shared<const NumericBranch>(std::move(jet), std::move(value), std::move(label));
    WarpFunction f(branch, branch, std::nullopt, domain);
    f.validate(options);
    return f;
}

void WarpFunction::validate(const WarpOptions& options) const {
    if (!(std::isfinite(domain_.a) && std::isfinite(domain_.b) && domain_.a < domain_.b)) {
        throw ConstructionError("warp domain must be a finite interval (a, b) with a < b");
    }
    if (junction_) {
        const double p = *junction_;
        if (!domain_.contains(p)) {
            throw ConstructionError("junction " + format_double(p) + " lies outside the warp domain");
        }
        double lhs = 0.0, rhs = 0.0;
        try {
            lhs = left_->value(p);
            rhs = right_->value(p);
        } catch (const EvaluationError& e) {
            throw ConstructionError(std::string("warp cannot be evaluated at the junction: ") + e.what());
        }
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > options.continuity_tolerance * scale) {
            throw ConstructionError("warp is not continuous at the junction: left limit " + format_double(lhs) +
                                    ", right limit " + format_double(rhs));
        }
    }

    const int n = std::max(options.positivity_samples, 0);
    auto check = [&](double t) {
        double v = 0.0;
        try {
            v = value(t, junction_ && t == *junction_ ? Side::Left : Side::Auto);
        } catch (const EvaluationError& e) {
            throw ConstructionError("warp '" + describe() + "' cannot be evaluated at t=" + format_double(t) + ": " +
                                    e.what());
        }
        if (!(v > 0.0)) {
            throw ConstructionError("warp '" + describe() + "' is not positive at t=" + format_double(t) +
                                    " (value " + format_double(v) + ")");
        }
    };
    check(domain_.a + options.endpoint_offset);
    check(domain_.b - options.endpoint_offset);
    for (int k = 0; k < n; ++k) {
        check(domain_.a + domain_.length() * (k + 1) / (n + 1));
    }
}

const WarpBranch& WarpFunction::branch(double t, Side side) const {
    if (!domain_.contains(t)) {
        throw EvaluationError("t=" + format_double(t) + " lies outside the domain (" + format_double(domain_.a) +
                              ", " + format_double(domain_.b) + ")");
    }
    if (!junction_) {
        return *left_;
    }
    switch (side) {
        case Side::Left: return *left_;
        case Side::Right: return *right_;
        case Side::Auto: break;
    }
    if (t < *junction_) return *left_;
    if (t > *junction_) return *right_;
    throw EvaluationError("t=" + format_double(t) + " is the junction; choose side=left or side=right");
}

Jet2 WarpFunction::jet(double t, Side side) const { return branch(t, side).jet(t); }

double WarpFunction::value(double t, Side side) const { return branch(t, side).value(t); }

double WarpFunction::jump() const {
    if (!junction_) {
        throw EvaluationError("warp '" + describe() + "' has no junction");
    }
    const double p = *junction_;
    return right_->jet(p).d1 - left_->jet(p).d1;
}

std::string WarpFunction::describe() const {
    if (!junction_) return left_->describe();
    return "piecewise(" + format_double(*junction_) + "; " + left_->describe() + "; " + right_->describe() + ")";
}

Jet2 eval_jet(const WarpFunction& f, double t, Side side) { return f.jet(t, side); }

double jump(const WarpFunction& f) { return f.jump(); }

} // namespace warpcurv
