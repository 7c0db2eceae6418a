#ifndef NCMAX_INGEST_HPP
#define NCMAX_INGEST_HPP

#include <cstdint>
#include <vector>

#include "ncmax/profile.hpp"
#include "ncmax/step_function.hpp"

namespace ncmax {

struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<double> entries;  // row-major

    double& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);

// Singular values with unit weights, one-sided Jacobi rotations converged to
// relative tolerance tol (default 1e-12); values below tol * sigma_max dropped.
SpectralProfile profile_from_matrix(const DenseMatrix& m, double tol = 1e-12);

// Level-set ingestion of |f| for a step function on the half line:
// atoms (distinct |value|, total length of its level set).
SpectralProfile profile_from_stepfn(const RealStepFunction& f);

struct GeneratorSpec {
    std::uint64_t seed = 42;
    int min_atoms = 1;
    int max_atoms = 64;
    double value_lo = 1e-3, value_hi = 1e3;    // log-uniform
    double weight_lo = 1e-2, weight_hi = 1e2;  // log-uniform
};

// Deterministic function of (spec.seed, index).
SpectralProfile random_profile(const GeneratorSpec& g, std::uint64_t index);

// Symmetric matrix with entries from the derived per-index stream.
DenseMatrix random_symmetric_matrix(const GeneratorSpec& g, std::uint64_t index, int n);

}  // namespace ncmax

#endif
