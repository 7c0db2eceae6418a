#ifndef NCMAX_HARNESS_HPP
#define NCMAX_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncmax/spaces.hpp"

namespace ncmax {

struct Violation {
    std::uint64_t trial_index = 0;
    std::string witness;  // serialized offending input, replayable
    double lhs = 0.0, rhs = 0.0;
};

struct ReportDocument {
    std::string suite;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool passed = true;
    std::vector<Violation> violations;
    double extremal_ratio = 0.0;
    std::string extremal_witness;
    std::int64_t runtime_millis = 0;

    nlohmann::json to_json() const;  // schema "ncmax/1"
};

// suite ids: theorem-16, decomposition, sublinearity, triangle-svf, weak-type,
// linf-contraction, hardy-constants, norms-triangle, oracle-ma, oracle-mu.
// Throws std::invalid_argument on an unknown suite.
ReportDocument run_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed);

// id 1: the Lorentz-to-Lorentz example (floor + range conditions);
// id 2: the L1+Linf -> Marcinkiewicz example (closed-form psi check).
ReportDocument run_example(int id, const LogGrid& grid = {});

// "t,value" rows at log-spaced t plus breakpoints; left limits at step
// breakpoints are emitted as "t-" marker rows.
std::string emit_curve_step(const StepFunction& f, int samples, double t_lo, double t_hi);
std::string emit_curve_cesaro(const CesaroCurve& c, int samples, double t_lo, double t_hi);

}  // namespace ncmax

#endif
