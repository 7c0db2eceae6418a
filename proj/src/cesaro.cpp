#include "ncmax/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncmax {

CesaroCurve::CesaroCurve(std::vector<Piece> pieces, double tail_a)
    : pieces_(std::move(pieces)), tail_a_(tail_a) {}

double CesaroCurve::operator()(double t) const {
    if (t <= 0.0) return value_at_zero();
    for (const Piece& pc : pieces_)
        if (t < pc.t_hi) return pc.a / t + pc.b;
    return (t > 0.0) ? tail_a_ / t : 0.0;
}

double CesaroCurve::value_at_zero() const {
    // the first piece of the Cesaro curve of a step function is constant
    return pieces_.empty() ? 0.0 : pieces_.front().b;
}

double CesaroCurve::integral_to(double t) const {
    if (t <= 0.0) return 0.0;
    double acc = 0.0;
    for (const Piece& pc : pieces_) {
        double hi = std::min(t, pc.t_hi);
        if (hi <= pc.t_lo) break;
        if (pc.t_lo == 0.0) {
            // a = 0 on the first piece; the s->0 endpoint contributes 0
            acc += pc.b * hi;
        } else {
            acc += pc.a * (std::log(hi) - std::log(pc.t_lo)) + pc.b * (hi - pc.t_lo);
        }
        if (hi < pc.t_hi) return acc;
    }
    double lo = support_end();
    if (t > lo && lo > 0.0) acc += tail_a_ * (std::log(t) - std::log(lo));
    return acc;
}

CesaroCurve cesaro(const StepFunction& f) {
    if (!f.nonnegative()) throw std::invalid_argument("cesaro: f must be nonnegative");
    std::vector<CesaroCurve::Piece> pieces;
    double lo = 0.0;
    for (std::size_t i = 0; i < f.pieces(); ++i) {
        double hi = f.breakpoints()[i];
        double v = f.values()[i];
        double base = f.integral_to(lo);
        // (1/t)(base + v (t - lo)) = (base - v lo)/t + v
        pieces.push_back({lo, hi, base - v * lo, v});
        lo = hi;
    }
    return CesaroCurve(std::move(pieces), f.total_integral());
}

double integral_of_cesaro(const CesaroCurve& c, double t) {
    if (t <= 0.0) throw std::invalid_argument("integral_of_cesaro: t must be > 0");
    return c.integral_to(t);
}

bool submajorized_by_cesaro(const StepFunction& f, const SpectralProfile& g) {
    if (!f.nonincreasing() || !f.nonnegative())
        throw std::invalid_argument("submajorized_by_cesaro: f must be nonincreasing, nonnegative");
    if (f.is_zero()) return true;
    CesaroCurve cg = cesaro(mu_of_profile(g));

    std::vector<double> ts;
    ts.insert(ts.end(), f.breakpoints().begin(), f.breakpoints().end());
    for (const auto& pc : cg.piece_list())
        if (pc.t_hi > 0.0) ts.push_back(pc.t_hi);
    // interior tangency candidates: per (linear piece of \int f, hyperbolic
    // piece of C mu(g)) pair, slope match v = a/s + b gives s = a/(v-b)
    for (std::size_t i = 0; i < f.pieces(); ++i) {
        double v = f.values()[i];
        double flo = (i == 0) ? 0.0 : f.breakpoints()[i - 1];
        double fhi = f.breakpoints()[i];
        for (const auto& pc : cg.piece_list()) {
            if (v > pc.b && pc.a > 0.0) {
                double s = pc.a / (v - pc.b);
                if (s > std::max(flo, pc.t_lo) && s < std::min(fhi, pc.t_hi)) ts.push_back(s);
            }
        }
        double se = cg.support_end();
        if (se > 0.0 && v > 0.0) {
            double s = cg.tail_coefficient() / v;  // tail piece, b = 0
            if (s > std::max(flo, se) && s < fhi) ts.push_back(s);
        }
    }
    for (double t : ts)
        if (f.integral_to(t) > cg.integral_to(t)) return false;
    // beyond all candidates the left side is constant and the right side is
    // nondecreasing, so the last breakpoint decides the tail
    return true;
}

}  // namespace ncmax
