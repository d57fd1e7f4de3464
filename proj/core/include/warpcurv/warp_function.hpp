#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "warpcurv/expr.hpp"
#include "warpcurv/jet.hpp"

namespace warpcurv {

// Open interval (a, b) of the base coordinate.
struct Interval {
    double a = 0.0;
    double b = 1.0;

    bool contains(double t) const { return a < t && t < b; }
    double length() const { return b - a; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Which branch of a piecewise warp to evaluate. Auto chooses by the sign of
// t - p and refuses t == p.
enum class Side { Left, Right, Auto };

const char* side_name(Side side);

// One smooth branch of a warp function.
class WarpBranch {
public:
    virtual ~WarpBranch() = default;
    virtual Jet2 jet(double t) const = 0;
    virtual double value(double t) const = 0;
    virtual std::string describe() const = 0;
    virtual const WarpExpr* expression() const { return nullptr; }
};

using JetFunction = std::function<Jet2(double)>;
using ValueFunction = std::function<double(double)>;

struct WarpOptions {
    int positivity_samples = 1024;
    double endpoint_offset = 1e-9;
    // Relative tolerance for C0 continuity of the two branches at the junction.
    double continuity_tolerance = 1e-12;
};

/// A positive warping function on an open base interval, smooth except
/// possibly at a single junction p where only continuity is required.
///
/// Branches are either parsed expressions (differentiated by dual numbers)
/// or numerically backed callables that supply their own jets.
class WarpFunction {
public:
    static WarpFunction from_definition(const WarpDefinition& def, Interval domain,
                                        const WarpOptions& options = {});
    static WarpFunction parse(std::string_view text, Interval domain, const WarpOptions& options = {});
    static WarpFunction smooth(const WarpExpr& expr, Interval domain, const WarpOptions& options = {});
    static WarpFunction piecewise(double junction, const WarpExpr& left, const WarpExpr& right,
                                  Interval domain, const WarpOptions& options = {});
    // jet supplies (f, f', f''); value, when given, is used wherever only f is
    // needed so that value-only consumers never touch the derivative path.
    static WarpFunction numeric(JetFunction jet, Interval domain, std::string label,
                                ValueFunction value = {}, const WarpOptions& options = {});

    Jet2 jet(double t, Side side = Side::Auto) const;
    double value(double t, Side side = Side::Auto) const;

    // f'(p+) - f'(p-); throws if no junction is declared.
    double jump() const;

    const Interval& domain() const { return domain_; }
    const std::optional<double>& junction() const { return junction_; }
    bool is_smooth() const { return !junction_.has_value(); }
    const WarpBranch& left() const { return *left_; }
    const WarpBranch& right() const { return *right_; }
    std::string describe() const;

private:
    WarpFunction(std::shared_ptr<const WarpBranch> left, std::shared_ptr<const WarpBranch> right,
                 std::optional<double> junction, Interval domain);

    void validate(const WarpOptions& options) const;
    const WarpBranch& branch(double t, Side side) const;

    std::shared_ptr<const WarpBranch> left_;
    std::shared_ptr<const WarpBranch> right_;
    std::optional<double> junction_;
    Interval domain_;
};

Jet2 eval_jet(const WarpFunction& f, double t, Side side = Side::Auto);
double jump(const WarpFunction& f);

} // namespace warpcurv
