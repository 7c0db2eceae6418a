#ifndef NCMAX_SPACES_HPP
#define NCMAX_SPACES_HPP

#include <optional>
#include <string>

#include "ncmax/cesaro.hpp"
#include "ncmax/profile.hpp"
#include "ncmax/step_function.hpp"
#include "ncmax/weight.hpp"

namespace ncmax {

struct NormResult {
    double value = 0.0;
    std::string space;                  // tag + parameters
    std::optional<double> maximizer_t;  // Marcinkiewicz witness only
    std::string method = "exact";       // "exact" or "quadrature(tol)"
};

// ||A||_p = (sum lambda_i^p w_i)^{1/p}, exponent >= 1
NormResult norm_lp(const SpectralProfile& p, double exponent);

// Lorentz L_{p,q}; q = infinity accepted as std::numeric_limits<double>::infinity()
NormResult norm_lpq(const SpectralProfile& p, double pp, double qq);

// ||A||_{L1+Linf} = \int_0^1 mu(t,A) dt
NormResult norm_l1_plus_linf(const SpectralProfile& p);

// max{||A||_1, ||A||_inf}
NormResult norm_l1_cap_linf(const SpectralProfile& p);

// \int mu d phi, exact Stieltjes sum over the step representation
NormResult norm_lorentz(const SpectralProfile& p, const WeightFunction& phi);

// sup_t (1/psi(t)) \int_0^t mu; golden-section per prefix-integral piece with
// both endpoints evaluated, analytic tail beyond the support
NormResult norm_marcinkiewicz(const SpectralProfile& p, const WeightFunction& psi);

// L_{p,q} norms of explicit curves (for the Hardy-constant checks)
double lpq_norm_of_step(const StepFunction& f, double pp, double qq);
double lpq_norm_of_cesaro(const CesaroCurve& c, double pp, double qq, double rel_tol = 1e-11);

// Upper concave envelope of sampled vertices via a monotone chain;
// result is >= input at every vertex and within a factor 2 below it.
WeightFunction least_concave_majorant(const WeightFunction& phi);

struct RatioScan {
    double ratio = 0.0;  // sup or inf over the grid
    double witness_t = 0.0;
};

struct LogGrid {
    double t_min = 1e-6;
    double t_max = 1e6;
    int points = 241;
};

// sup over the grid of (\int_t^inf psi(s)/s^2 ds) / (phi(t)/t); the improper
// integral is computed as \int_0^{1/t} psi(1/u) du. Throws if psi(s)/s does
// not tend to 0.
RatioScan lorentz_range_condition(const WeightFunction& psi, const WeightFunction& phi,
                                  const LogGrid& grid = {});

// inf over the grid of phi(t) / (t log(1+1/t))
RatioScan phi_floor_condition(const WeightFunction& phi, const LogGrid& grid = {});

// membership witness for the range space: mu(f) submajorized by C mu(g)
bool f_space_witness(const SpectralProfile& f, const SpectralProfile& g);

// "lp:p=2", "lpq:p=2,q=1", "lorentz:phi=power:0.5", "marcinkiewicz:psi=maxone",
// "l1plusinf", "l1capinf", "weakl1"
NormResult norm_by_spec(const SpectralProfile& p, const std::string& space_spec);

}  // namespace ncmax

#endif
