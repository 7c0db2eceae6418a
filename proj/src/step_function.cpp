#include "ncmax/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncmax {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.size() != values_.size())
        throw std::invalid_argument("StepFunction: breakpoints/values size mismatch");
    double prev = 0.0;
    for (double t : breaks_) {
        if (!std::isfinite(t) || t <= prev)
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing from 0");
        prev = t;
    }
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("StepFunction: non-finite value");
    prefix_.reserve(values_.size());
    double acc = 0.0, lo = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        acc += values_[i] * (breaks_[i] - lo);
        prefix_.push_back(acc);
        lo = breaks_[i];
    }
}

double StepFunction::operator()(double t) const {
    if (t < 0.0) return 0.0;
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    if (it == breaks_.end()) return 0.0;
    return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

double StepFunction::integral_to(double t) const {
    if (t <= 0.0 || values_.empty()) return 0.0;
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    if (it == breaks_.end()) return prefix_.back();
    std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
    double lo = (i == 0) ? 0.0 : breaks_[i - 1];
    double base = (i == 0) ? 0.0 : prefix_[i - 1];
    return base + values_[i] * (t - lo);
}

double StepFunction::max_value() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, v);
    return m;
}

bool StepFunction::nonincreasing() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] > values_[i - 1]) return false;
    return true;
}

bool StepFunction::nonnegative() const {
    for (double v : values_)
        if (v < 0.0) return false;
    return true;
}

StepFunction mu_of_profile(const SpectralProfile& p) {
    std::vector<double> breaks, values;
    breaks.reserve(p.size());
    values.reserve(p.size());
    double cum = 0.0;
    for (const Atom& a : p.atoms()) {
        cum += a.weight;
        breaks.push_back(cum);
        values.push_back(a.value);
    }
    return StepFunction(std::move(breaks), std::move(values));
}

double integrate_mu(const StepFunction& f, double t) {
    if (t < 0.0) throw std::invalid_argument("integrate_mu: t must be >= 0");
    return f.integral_to(t);
}

bool submajorizes(const StepFunction& g, const StepFunction& f) {
    if (!f.nonincreasing() || !f.nonnegative() || !g.nonincreasing() || !g.nonnegative())
        throw std::invalid_argument("submajorizes: inputs must be nonincreasing and nonnegative");
    // the difference of prefix integrals is piecewise linear, so it suffices
    // to compare at the union of breakpoints (and beyond the last one, where
    // both integrals are constant)
    std::vector<double> ts;
    ts.insert(ts.end(), f.breakpoints().begin(), f.breakpoints().end());
    ts.insert(ts.end(), g.breakpoints().begin(), g.breakpoints().end());
    for (double t : ts)
        if (f.integral_to(t) > g.integral_to(t)) return false;
    return f.total_integral() <= g.total_integral();
}

RealStepFunction::RealStepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.empty()) {
        breaks_.clear();
        return;
    }
    if (breaks_.size() != values_.size() + 1)
        throw std::invalid_argument("RealStepFunction: need one more breakpoint than values");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (breaks_[i] <= breaks_[i - 1])
            throw std::invalid_argument("RealStepFunction: breakpoints must be strictly increasing");
}

double RealStepFunction::abs_mass(double a, double b) const {
    if (b <= a) return 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double lo = std::max(a, breaks_[i]);
        double hi = std::min(b, breaks_[i + 1]);
        if (hi > lo) m += std::abs(values_[i]) * (hi - lo);
    }
    return m;
}

}  // namespace ncmax
