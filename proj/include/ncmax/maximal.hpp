#ifndef NCMAX_MAXIMAL_HPP
#define NCMAX_MAXIMAL_HPP

#include "ncmax/cesaro.hpp"
#include "ncmax/profile.hpp"
#include "ncmax/step_function.hpp"

namespace ncmax {

struct MaximalEvaluation {
    double value = 0.0;
    double witness_radius = 0.0;  // smallest radius attaining the maximum
};

// MA(x) = sup_r (trace-weighted average of atoms in [x-r, x+r]), 0/0 = 0.
// Windows are closed; the supremum is attained at a radius where an atom
// enters the window, so candidate radii are {|x - lambda_i|}.
MaximalEvaluation ma_point(const SpectralProfile& p, double x);

// Functional calculus: {(MA(lambda_i), w_i)} canonicalized.
SpectralProfile ma_operator(const SpectralProfile& p);

struct BoundCheck {
    bool holds = false;
    double worst_ratio = 0.0;  // sup_t mu(t, MA(|A|)) / (C mu(A))(t)
    double witness_t = 0.0;
};

// mu(t, MA(|A|)) <= 16 (C mu(A))(t) for all t > 0. The left side is a step
// function and the right side is continuous nonincreasing, so each constancy
// interval is tightest at its right endpoint; all of them are checked.
BoundCheck verify_16_bound(const SpectralProfile& p);

// Classical centered d=1 maximal function of a compactly supported step
// function on the line, exact via breakpoint-hit candidate radii.
double classical_max_point(const RealStepFunction& f, double x);

// Brute-force grid comparator for ma_point (test oracle).
double ma_grid_oracle(const SpectralProfile& p, double x, int grid_size);

}  // namespace ncmax

#endif
