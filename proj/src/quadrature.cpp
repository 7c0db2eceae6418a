#include "ncmax/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ncmax {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h * (fa + 4.0 * fm + fb) / 6.0; }

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    if (b <= a) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(fa, fm, fb, b - a);
    double scale = std::max(std::abs(whole), 1e-300);
    return adaptive_step(f, a, b, fa, fm, fb, whole, rel_tol * scale, max_depth);
}

double graded_integral_to_zero(const std::function<double(double)>& f, double b,
                               double rel_tol) {
    if (b <= 0.0) return 0.0;
    double total = 0.0;
    double hi = b;
    double prev_chunk = -1.0;
    int stagnant = 0;
    for (int k = 0; k < 2000; ++k) {
        double lo = 0.5 * hi;
        double chunk = adaptive_simpson(f, lo, hi, rel_tol * 0.1);
        total += chunk;
        if (prev_chunk >= 0.0 && chunk >= prev_chunk * 0.999) {
            if (++stagnant >= 50)
                throw std::runtime_error("graded_integral_to_zero: integral appears divergent");
        } else {
            stagnant = 0;
        }
        if (total > 0.0 && chunk < rel_tol * total && k > 8) return total;
        prev_chunk = chunk;
        hi = lo;
    }
    throw std::runtime_error("graded_integral_to_zero: failed to converge");
}

}  // namespace ncmax
