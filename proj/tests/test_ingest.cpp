#include <doctest.h>

#include <stdexcept>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "ncmax/ingest.hpp"

using namespace ncmax;

namespace {

DenseMatrix diag(std::vector<double> d) {
    DenseMatrix m;
    m.rows = m.cols = static_cast<int>(d.size());
    m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

// expand (value, weight) atoms into a flat sorted list of singular values
std::vector<double> expanded(const SpectralProfile& p) {
    std::vector<double> out;
    for (const auto& a : p.atoms()) {
        auto n = static_cast<long>(std::llround(a.weight));
        REQUIRE(std::abs(a.weight - static_cast<double>(n)) < 1e-9);
        for (long k = 0; k < n; ++k) out.push_back(a.value);
    }
    return out;  // atoms are already sorted descending
}

}  // namespace

TEST_CASE("profile_from_matrix on diagonal inputs") {
    SpectralProfile id3 = profile_from_matrix(diag({1.0, 1.0, 1.0}));
    REQUIRE(id3.size() == 1);
    CHECK(id3.atoms()[0].value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id3.atoms()[0].weight == 3.0);

    SpectralProfile d = profile_from_matrix(diag({3.0, -1.0}));
    REQUIRE(d.size() == 2);
    CHECK(d.atoms()[0].value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(d.atoms()[1].value == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(profile_from_matrix(diag({0.0, 0.0})).empty());
}

TEST_CASE("profile_from_matrix matches an eigensolver on A^T A") {
    GeneratorSpec g{1717};
    for (int i = 0; i < 100; ++i) {
        DenseMatrix m = random_symmetric_matrix(g, i, 8);
        std::vector<double> mine = expanded(profile_from_matrix(m));

        Eigen::MatrixXd a(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) a(r, c) = m.at(r, c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
        std::vector<double> ref;
        for (int k = 0; k < 8; ++k) ref.push_back(std::sqrt(std::max(0.0, es.eigenvalues()[k])));
        std::sort(ref.begin(), ref.end(), std::greater<>());
        while (ref.size() > mine.size()) ref.pop_back();  // dropped near-zero values

        double scale = ref.empty() ? 1.0 : std::max(1.0, ref[0]);
        REQUIRE(mine.size() == ref.size());
        for (std::size_t k = 0; k < mine.size(); ++k)
            CHECK(std::abs(mine[k] - ref[k]) <= 1e-9 * scale);
    }
}

TEST_CASE("profile_from_matrix is stable under row permutation") {
    GeneratorSpec g{2323};
    DenseMatrix m = random_symmetric_matrix(g, 0, 6);
    DenseMatrix swapped = m;
    for (int c = 0; c < 6; ++c) std::swap(swapped.at(0, c), swapped.at(4, c));
    std::vector<double> a = expanded(profile_from_matrix(m));
    std::vector<double> b = expanded(profile_from_matrix(swapped));
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-10));
}

TEST_CASE("profile_from_stepfn level sets") {
    SpectralProfile flat = profile_from_stepfn(RealStepFunction({0.0, 3.0}, {2.0}));
    REQUIRE(flat.size() == 1);
    CHECK(flat.atoms()[0].value == 2.0);
    CHECK(flat.atoms()[0].weight == 3.0);

    // |.| is taken, equal levels merge across disjoint intervals
    SpectralProfile m = profile_from_stepfn(
        RealStepFunction({-1.0, 0.0, 1.0, 2.0}, {3.0, -3.0, 1.0}));
    REQUIRE(m.size() == 2);
    CHECK(m.atoms()[0].value == 3.0);
    CHECK(m.atoms()[0].weight == 2.0);
    CHECK(m.atoms()[1].value == 1.0);
    CHECK(m.atoms()[1].weight == 1.0);

    CHECK(profile_from_stepfn(RealStepFunction({0.0, 1.0}, {0.0})).empty());
    CHECK(profile_from_stepfn(RealStepFunction{}).empty());
}

TEST_CASE("random_profile determinism and bounds") {
    GeneratorSpec g{42};
    SpectralProfile a = random_profile(g, 7);
    SpectralProfile b = random_profile(g, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.atoms()[k].value == b.atoms()[k].value);
        CHECK(a.atoms()[k].weight == b.atoms()[k].weight);
    }

    GeneratorSpec other{43};
    SpectralProfile c = random_profile(other, 7);
    bool same = a.size() == c.size();
    if (same)
        for (std::size_t k = 0; k < a.size(); ++k)
            same = same && a.atoms()[k].value == c.atoms()[k].value;
    CHECK_FALSE(same);

    for (int i = 0; i < 200; ++i) {
        SpectralProfile p = random_profile(g, i);
        CHECK(p.size() >= 1);
        CHECK(p.size() <= 64);
        for (const auto& atom : p.atoms()) {
            CHECK(atom.value >= 1e-3 * (1.0 - 1e-12));
            CHECK(atom.value <= 1e3 * (1.0 + 1e-12));
            CHECK(atom.weight >= 1e-2 * (1.0 - 1e-12));
            CHECK(atom.weight <= 1e2 * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("matrix addition shape checks") {
    DenseMatrix a = diag({1.0, 2.0});
    DenseMatrix s = a + a;
    CHECK(s.at(0, 0) == 2.0);
    CHECK(s.at(1, 1) == 4.0);
    CHECK_THROWS_AS(a + diag({1.0, 2.0, 3.0}), std::invalid_argument);
}
