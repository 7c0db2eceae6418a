#ifndef NCMAX_WEIGHT_HPP
#define NCMAX_WEIGHT_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncmax {

// Quasiconcave weight functions phi/psi: a closed catalog of parametric
// families plus piecewise-linear user input. Quasiconcavity (increasing,
// value/t nonincreasing) is verified on a log-grid at construction.
class WeightFunction {
public:
    enum class Kind {
        Power,            // t^alpha, alpha in (0,1]
        LogType,          // t * log^beta(1 + t^-gamma)
        MaxOne,           // max{1, t}
        ReciprocalLog,    // 1 on (0,1], t/(1+ln t) on (1,inf)
        PiecewiseLinear,  // concave interpolant of vertices, last slope extended
        InverseIntegral,  // t / \int_0^t ds/phi(s) for a base phi
    };

    static WeightFunction power(double alpha);
    static WeightFunction logtype(double beta, double gamma);
    static WeightFunction max_one();
    static WeightFunction reciprocal_log();
    static WeightFunction piecewise_linear(std::vector<std::pair<double, double>> vertices);

    Kind kind() const { return kind_; }
    double operator()(double t) const;  // 0 at t = 0 only when zero_at_origin()

    bool zero_at_origin() const;
    // lim_{t->inf} value/t; positive means \int_t^inf value(s)/s^2 ds diverges
    double slope_at_infinity() const;

    // J(t) = \int_0^t ds/phi(s): closed form where the catalog has one,
    // graded-mesh adaptive Simpson otherwise. Throws if divergent at zero.
    double reciprocal_prefix_integral(double t) const;
    bool reciprocal_integrable_at_zero() const;

    // parameters, for serialization and the CLI
    double alpha() const { return p1_; }
    double beta() const { return p1_; }
    double gamma() const { return p2_; }
    const std::vector<std::pair<double, double>>& vertices() const { return vertices_; }

    std::string describe() const;

    friend WeightFunction psi_from_phi_inv(const WeightFunction& phi);

private:
    WeightFunction(Kind k, double p1, double p2);
    void verify_quasiconcave() const;

    Kind kind_ = Kind::MaxOne;
    double p1_ = 0.0, p2_ = 0.0;
    std::vector<std::pair<double, double>> vertices_;
    std::shared_ptr<const WeightFunction> base_;  // InverseIntegral only
};

// psi(t) = t * (\int_0^t ds/phi(s))^{-1}; rejects phi with 1/phi not locally
// integrable at zero.
WeightFunction psi_from_phi_inv(const WeightFunction& phi);

// "power:0.5", "logtype:2,0.5", "maxone", "reciprocallog"
WeightFunction parse_weight(const std::string& s);

}  // namespace ncmax

#endif
