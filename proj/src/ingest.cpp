#include "ncmax/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace ncmax {

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix add: dimension mismatch");
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

SpectralProfile profile_from_matrix(const DenseMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("profile_from_matrix: tol must be > 0");
    if (m.rows <= 0 || m.cols <= 0 ||
        m.entries.size() != static_cast<std::size_t>(m.rows) * m.cols)
        throw std::invalid_argument("profile_from_matrix: bad dimensions");
    for (double e : m.entries)
        if (!std::isfinite(e)) throw std::invalid_argument("profile_from_matrix: non-finite entry");

    // one-sided Jacobi: orthogonalize the columns of the tall orientation
    int rows = m.rows, cols = m.cols;
    std::vector<std::vector<double>> col;
    if (rows >= cols) {
        col.assign(cols, std::vector<double>(rows));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) col[c][r] = m.at(r, c);
    } else {
        std::swap(rows, cols);
        col.assign(cols, std::vector<double>(rows));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) col[r][c] = m.at(r, c);
    }

    const int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (int i = 0; i < cols - 1; ++i) {
            for (int j = i + 1; j < cols; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int r = 0; r < rows; ++r) {
                    alpha += col[i][r] * col[i][r];
                    beta += col[j][r] * col[j][r];
                    gamma += col[i][r] * col[j][r];
                }
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta) || gamma == 0.0) continue;
                converged = false;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = std::copysign(1.0, zeta) /
                           (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int r = 0; r < rows; ++r) {
                    double vi = col[i][r], vj = col[j][r];
                    col[i][r] = c * vi - s * vj;
                    col[j][r] = s * vi + c * vj;
                }
            }
        }
    }
    if (!converged)
        throw std::runtime_error("profile_from_matrix: Jacobi SVD did not converge in 100 sweeps");

    std::vector<double> sigma(cols);
    double sigma_max = 0.0;
    for (int c = 0; c < cols; ++c) {
        double s2 = 0.0;
        for (int r = 0; r < rows; ++r) s2 += col[c][r] * col[c][r];
        sigma[c] = std::sqrt(s2);
        sigma_max = std::max(sigma_max, sigma[c]);
    }
    std::vector<Atom> atoms;
    for (double s : sigma)
        if (s > tol * sigma_max) atoms.push_back({s, 1.0});
    return SpectralProfile(std::move(atoms));
}

SpectralProfile profile_from_stepfn(const RealStepFunction& f) {
    // level sets of |f|: total length per distinct absolute value
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        double v = std::abs(f.values()[i]);
        if (v == 0.0) continue;
        atoms.push_back({v, f.breakpoints()[i + 1] - f.breakpoints()[i]});
    }
    return SpectralProfile(std::move(atoms));  // canonicalization merges level sets
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1)));
}

}  // namespace

SpectralProfile random_profile(const GeneratorSpec& g, std::uint64_t index) {
    std::mt19937_64 rng = trial_rng(g.seed, index);
    std::uniform_int_distribution<int> size_dist(g.min_atoms, g.max_atoms);
    std::uniform_real_distribution<double> lv(std::log(g.value_lo), std::log(g.value_hi));
    std::uniform_real_distribution<double> lw(std::log(g.weight_lo), std::log(g.weight_hi));
    int n = size_dist(rng);
    std::vector<Atom> atoms;
    atoms.reserve(n);
    for (int i = 0; i < n; ++i) atoms.push_back({std::exp(lv(rng)), std::exp(lw(rng))});
    return SpectralProfile(std::move(atoms));
}

DenseMatrix random_symmetric_matrix(const GeneratorSpec& g, std::uint64_t index, int n) {
    std::mt19937_64 rng = trial_rng(g.seed, index ^ 0x517cc1b727220a95ULL);
    std::normal_distribution<double> nd(0.0, 1.0);
    DenseMatrix m;
    m.rows = m.cols = n;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = nd(rng);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

}  // namespace ncmax
