#include "ncmax/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ncmax {

MaximalEvaluation ma_point(const SpectralProfile& p, double x) {
    if (x < 0.0) throw std::invalid_argument("ma_point: x must be >= 0");
    if (p.empty()) return {0.0, 0.0};  // 0/0 = 0 convention

    // the windowed average is constant between atom-entry radii, and at each
    // entry radius the closed window includes the entering atom
    struct Entry {
        double dist, mass, weight;
    };
    std::vector<Entry> entries;
    entries.reserve(p.size());
    for (const Atom& a : p.atoms())
        entries.push_back({std::abs(a.value - x), a.value * a.weight, a.weight});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.dist < b.dist; });

    MaximalEvaluation best{0.0, 0.0};
    double mass = 0.0, weight = 0.0;
    std::size_t i = 0;
    while (i < entries.size()) {
        double r = entries[i].dist;
        for (; i < entries.size() && entries[i].dist == r; ++i) {
            mass += entries[i].mass;
            weight += entries[i].weight;
        }
        double avg = mass / weight;
        if (avg > best.value) best = {avg, r};
    }
    return best;
}

SpectralProfile ma_operator(const SpectralProfile& p) {
    std::vector<Atom> out;
    out.reserve(p.size());
    for (const Atom& a : p.atoms()) out.push_back({ma_point(p, a.value).value, a.weight});
    return SpectralProfile(std::move(out));
}

BoundCheck verify_16_bound(const SpectralProfile& p) {
    if (p.empty()) throw std::invalid_argument("verify_16_bound: profile must be nonempty");
    StepFunction lhs = mu_of_profile(ma_operator(p));
    CesaroCurve rhs = cesaro(mu_of_profile(p));

    // lhs is a nonincreasing step function, rhs is continuous nonincreasing:
    // on each constancy interval of lhs the ratio peaks at the right endpoint
    BoundCheck out;
    for (std::size_t i = 0; i < lhs.pieces(); ++i) {
        double t = lhs.breakpoints()[i];
        double ratio = lhs.values()[i] / rhs(t);
        if (ratio > out.worst_ratio) {
            out.worst_ratio = ratio;
            out.witness_t = t;
        }
    }
    out.holds = out.worst_ratio <= 16.0 * (1.0 + 1e-9);
    return out;
}

double classical_max_point(const RealStepFunction& f, double x) {
    if (f.is_zero()) return 0.0;
    // per radius interval between breakpoint hits, A(r)/2r is monotone, so
    // candidates are the radii where x-r or x+r meets a breakpoint
    std::vector<double> radii;
    for (double b : f.breakpoints()) {
        double r = std::abs(b - x);
        if (r > 0.0) radii.push_back(r);
    }
    double best = 0.0;
    for (double r : radii) best = std::max(best, f.abs_mass(x - r, x + r) / (2.0 * r));
    // r -> 0+ limit: the local value (midpoint of the two one-sided values at
    // a breakpoint); realized by a window far below the breakpoint spacing
    double dmin = f.breakpoints()[1] - f.breakpoints()[0];
    for (std::size_t i = 2; i < f.breakpoints().size(); ++i)
        dmin = std::min(dmin, f.breakpoints()[i] - f.breakpoints()[i - 1]);
    double r0 = dmin * 0.25;
    for (double b : f.breakpoints()) {
        double d = std::abs(b - x);
        if (d > 0.0) r0 = std::min(r0, d * 0.5);
    }
    best = std::max(best, f.abs_mass(x - r0, x + r0) / (2.0 * r0));
    return best;
}

double ma_grid_oracle(const SpectralProfile& p, double x, int grid_size) {
    if (grid_size < 10) throw std::invalid_argument("ma_grid_oracle: gridSize must be >= 10");
    if (p.empty()) return 0.0;
    double r_max = x + p.max_value();
    double best = 0.0;
    for (int k = 1; k <= grid_size; ++k) {
        double r = r_max * static_cast<double>(k) / grid_size;
        double mass = 0.0, weight = 0.0;
        for (const Atom& a : p.atoms()) {
            if (std::abs(a.value - x) <= r) {
                mass += a.value * a.weight;
                weight += a.weight;
            }
        }
        if (weight > 0.0) best = std::max(best, mass / weight);
    }
    return best;
}

}  // namespace ncmax
