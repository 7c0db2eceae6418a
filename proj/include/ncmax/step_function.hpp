#ifndef NCMAX_STEP_FUNCTION_HPP
#define NCMAX_STEP_FUNCTION_HPP

#include <vector>

#include "ncmax/profile.hpp"

namespace ncmax {

// Right-continuous piecewise-constant function on [0,inf): value v_i on
// [t_{i-1}, t_i) with 0 = t_0 < t_1 < ... < t_k, and 0 on [t_k, inf).
// Prefix integrals are cached at construction.
class StepFunction {
public:
    StepFunction() = default;
    // breakpoints are the right endpoints t_1 < ... < t_k (t_0 = 0 implied)
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }
    bool is_zero() const { return values_.empty(); }

    // support of positivity ends here
    double support_end() const { return breaks_.empty() ? 0.0 : breaks_.back(); }
    double total_integral() const { return prefix_.empty() ? 0.0 : prefix_.back(); }

    double operator()(double t) const;          // right-continuous value, 0 for t < 0
    double integral_to(double t) const;          // exact \int_0^t, piecewise linear in t
    double max_value() const;

    bool nonincreasing() const;
    bool nonnegative() const;

private:
    std::vector<double> breaks_;   // t_1..t_k, strictly increasing, t_1 > 0
    std::vector<double> values_;   // v_1..v_k
    std::vector<double> prefix_;   // prefix_[i] = integral over [0, t_{i+1})
};

// Decreasing rearrangement mu(.,A) of a canonical profile: value lambda_i on
// [W_{i-1}, W_i) with W_i the cumulative weights.
StepFunction mu_of_profile(const SpectralProfile& p);

// exact \int_0^t f
double integrate_mu(const StepFunction& f, double t);

// true iff \int_0^t f <= \int_0^t g for all t >= 0 (f submajorized by g).
// Decided at the union of breakpoints; both inputs must be nonincreasing.
bool submajorizes(const StepFunction& g, const StepFunction& f);

// Compactly supported step function on the whole line, for the classical
// d=1 maximal comparator. Value v_i on [b_{i-1}, b_i), 0 outside.
class RealStepFunction {
public:
    RealStepFunction() = default;
    RealStepFunction(std::vector<double> breakpoints, std::vector<double> values);

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    // \int over [a, b) of |f|
    double abs_mass(double a, double b) const;

private:
    std::vector<double> breaks_;  // b_0 < b_1 < ... < b_k
    std::vector<double> values_;  // v_1..v_k on [b_{i-1}, b_i)
};

}  // namespace ncmax

#endif
