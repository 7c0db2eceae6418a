#ifndef NCMAX_QUADRATURE_HPP
#define NCMAX_QUADRATURE_HPP

#include <functional>

namespace ncmax {

// Adaptive Simpson on [a,b] to relative tolerance rel_tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth = 40);

// \int_0^b f with an integrable endpoint behaviour at 0: dyadic chunks
// [b 2^{-k-1}, b 2^{-k}] integrated adaptively until the running tail is
// negligible. Throws std::runtime_error if the chunk contributions do not
// decay (divergent integral).
double graded_integral_to_zero(const std::function<double(double)>& f, double b,
                               double rel_tol);

}  // namespace ncmax

#endif
