#ifndef NCMAX_PROFILE_HPP
#define NCMAX_PROFILE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace ncmax {

struct Atom {
    double value;   // eigenvalue of |A|, >= 0
    double weight;  // trace weight, > 0
};

// Finite spectral model of a positive tau-measurable operator: a list of
// (value, weight) atoms. Canonical form has values strictly decreasing,
// equal values merged (relative tolerance 1e-12), zero values dropped.
class SpectralProfile {
public:
    SpectralProfile() = default;
    explicit SpectralProfile(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_weight() const { return total_weight_; }
    // trace of |A|: sum of value*weight
    double trace() const { return trace_; }
    double max_value() const { return atoms_.empty() ? 0.0 : atoms_.front().value; }
    double min_value() const { return atoms_.empty() ? 0.0 : atoms_.back().value; }

    // n_A(s): total weight of atoms with value strictly above s.
    double distribution(double s) const;

    // mu(t) via the generalized inverse of the distribution function.
    // Must agree with the sorted step function everywhere; t <= 0 rejected.
    double mu_from_distribution(double t) const;

    // (head, tail): atoms with value > v, atoms with value <= v.
    std::pair<SpectralProfile, SpectralProfile> split_at_value(double v) const;

    SpectralProfile scaled(double c) const;

private:
    std::vector<Atom> atoms_;  // strictly decreasing values
    double total_weight_ = 0.0;
    double trace_ = 0.0;
};

}  // namespace ncmax

#endif
