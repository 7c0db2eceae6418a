#include "ncmax/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncmax {

namespace {
constexpr double kMergeRelTol = 1e-12;

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= kMergeRelTol * std::max(std::abs(a), std::abs(b));
}
}  // namespace

SpectralProfile::SpectralProfile(std::vector<Atom> atoms) {
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.value) || a.value < 0.0)
            throw std::invalid_argument("SpectralProfile: atom value must be finite and >= 0");
        if (!std::isfinite(a.weight) || a.weight <= 0.0)
            throw std::invalid_argument("SpectralProfile: atom weight must be finite and > 0");
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.value > b.value; });
    for (const Atom& a : atoms) {
        if (a.value == 0.0) continue;  // zero atoms carry no spectral mass
        if (!atoms_.empty() && nearly_equal(atoms_.back().value, a.value)) {
            atoms_.back().weight += a.weight;
        } else {
            atoms_.push_back(a);
        }
    }
    for (const Atom& a : atoms_) {
        total_weight_ += a.weight;
        trace_ += a.value * a.weight;
    }
}

double SpectralProfile::distribution(double s) const {
    double w = 0.0;
    for (const Atom& a : atoms_) {
        if (a.value > s)
            w += a.weight;
        else
            break;  // values are decreasing
    }
    return w;
}

double SpectralProfile::mu_from_distribution(double t) const {
    if (t <= 0.0) throw std::invalid_argument("mu_from_distribution: t must be > 0");
    // right-continuous inverse: mu(t) = inf{ s >= 0 : n(s) <= t }.
    // Walking the sorted atoms, mu(t) = value_i on [W_{i-1}, W_i).
    double cum = 0.0;
    for (const Atom& a : atoms_) {
        cum += a.weight;
        if (t < cum) return a.value;
    }
    return 0.0;
}

std::pair<SpectralProfile, SpectralProfile> SpectralProfile::split_at_value(double v) const {
    if (v < 0.0) throw std::invalid_argument("split_at_value: v must be >= 0");
    std::vector<Atom> head, tail;
    for (const Atom& a : atoms_) {
        (a.value > v ? head : tail).push_back(a);
    }
    return {SpectralProfile(std::move(head)), SpectralProfile(std::move(tail))};
}

SpectralProfile SpectralProfile::scaled(double c) const {
    if (c <= 0.0) throw std::invalid_argument("scaled: c must be > 0");
    std::vector<Atom> out = atoms_;
    for (Atom& a : out) a.value *= c;
    return SpectralProfile(std::move(out));
}

}  // namespace ncmax
