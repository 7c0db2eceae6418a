#ifndef NCMAX_CESARO_HPP
#define NCMAX_CESARO_HPP

#include <vector>

#include "ncmax/step_function.hpp"

namespace ncmax {

// Exact representation of (Cf)(t) = (1/t)\int_0^t f for a step function f:
// on [t_{i-1}, t_i) the value is a_i/t + b_i, and a_inf/t on [t_k, inf).
// Continuous on (0,inf), nonincreasing and nonnegative for nonincreasing f.
class CesaroCurve {
public:
    struct Piece {
        double t_lo, t_hi;  // [t_lo, t_hi)
        double a, b;        // value a/t + b
    };

    CesaroCurve() = default;
    CesaroCurve(std::vector<Piece> pieces, double tail_a);

    const std::vector<Piece>& piece_list() const { return pieces_; }
    double tail_coefficient() const { return tail_a_; }
    double support_end() const { return pieces_.empty() ? 0.0 : pieces_.back().t_hi; }

    double operator()(double t) const;   // t > 0; limit value at t = 0
    double value_at_zero() const;        // lim_{t->0+}, equals f(0) for step f
    double integral_to(double t) const;  // exact \int_0^t via a*ln(s) + b*s

private:
    std::vector<Piece> pieces_;
    double tail_a_ = 0.0;
};

CesaroCurve cesaro(const StepFunction& f);

double integral_of_cesaro(const CesaroCurve& c, double t);

// true iff \int_0^t f <= \int_0^t C(mu(g)) for all t > 0.
// The difference is concave-minus-linear per subinterval; breakpoints of both
// sides plus interior tangency candidates s = a/(v-b) are checked.
bool submajorized_by_cesaro(const StepFunction& f, const SpectralProfile& g);

}  // namespace ncmax

#endif
