#include "ncmax/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ncmax/quadrature.hpp"

namespace ncmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string space_tag(const std::string& name, double a = 0.0, double b = 0.0, int nargs = 0) {
    std::ostringstream os;
    os << name;
    if (nargs >= 1) os << ":" << a;
    if (nargs >= 2) os << "," << b;
    return os.str();
}

// maximize f on [lo,hi] by golden-section to relative tolerance 1e-10,
// both endpoints always evaluated
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi) {
    double best_t = lo, best_v = f(lo);
    double fhi = f(hi);
    if (fhi > best_v) {
        best_v = fhi;
        best_t = hi;
    }
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10 * std::max(1.0, std::abs(b))) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double m = 0.5 * (a + b), fm = f(m);
    if (fm > best_v) {
        best_v = fm;
        best_t = m;
    }
    return {best_t, best_v};
}

}  // namespace

NormResult norm_lp(const SpectralProfile& p, double exponent) {
    if (exponent < 1.0) throw std::invalid_argument("norm_lp: exponent must be >= 1");
    double s = 0.0;
    for (const Atom& a : p.atoms()) s += std::pow(a.value, exponent) * a.weight;
    return {std::pow(s, 1.0 / exponent), space_tag("lp", exponent, 0, 1), std::nullopt, "exact"};
}

double lpq_norm_of_step(const StepFunction& f, double pp, double qq) {
    if (f.is_zero()) return 0.0;
    if (qq == kInf) {
        // sup t^{1/p} v_i on [W_{i-1}, W_i) is attained at the right end
        double best = 0.0;
        for (std::size_t i = 0; i < f.pieces(); ++i)
            best = std::max(best, f.values()[i] * std::pow(f.breakpoints()[i], 1.0 / pp));
        return best;
    }
    double s = 0.0, lo = 0.0;
    for (std::size_t i = 0; i < f.pieces(); ++i) {
        double hi = f.breakpoints()[i];
        double v = f.values()[i];
        s += std::pow(v, qq) * (pp / qq) *
             (std::pow(hi, qq / pp) - std::pow(lo, qq / pp));
        lo = hi;
    }
    return std::pow(s, 1.0 / qq);
}

NormResult norm_lpq(const SpectralProfile& p, double pp, double qq) {
    if (pp < 1.0 || qq < 1.0) throw std::invalid_argument("norm_lpq: need p >= 1, q >= 1");
    double v = lpq_norm_of_step(mu_of_profile(p), pp, qq);
    return {v, space_tag("lpq", pp, qq, 2), std::nullopt, "exact"};
}

NormResult norm_l1_plus_linf(const SpectralProfile& p) {
    return {mu_of_profile(p).integral_to(1.0), "l1plusinf", std::nullopt, "exact"};
}

NormResult norm_l1_cap_linf(const SpectralProfile& p) {
    return {std::max(p.trace(), p.max_value()), "l1capinf", std::nullopt, "exact"};
}

NormResult norm_lorentz(const SpectralProfile& p, const WeightFunction& phi) {
    if (!phi.zero_at_origin())
        throw std::invalid_argument("norm_lorentz: phi must vanish at 0+ (" + phi.describe() + ")");
    double s = 0.0, lo = 0.0;
    StepFunction mu = mu_of_profile(p);
    for (std::size_t i = 0; i < mu.pieces(); ++i) {
        double hi = mu.breakpoints()[i];
        s += mu.values()[i] * (phi(hi) - phi(lo));
        lo = hi;
    }
    return {s, "lorentz:phi=" + phi.describe(), std::nullopt, "exact"};
}

NormResult norm_marcinkiewicz(const SpectralProfile& p, const WeightFunction& psi) {
    std::string tag = "marcinkiewicz:psi=" + psi.describe();
    if (p.empty()) return {0.0, tag, 0.0, "exact"};
    StepFunction mu = mu_of_profile(p);
    auto objective = [&](double t) { return mu.integral_to(t) / psi(t); };
    double best_v = 0.0, best_t = 0.0;
    double lo = 0.0;
    for (std::size_t i = 0; i < mu.pieces(); ++i) {
        double hi = mu.breakpoints()[i];
        double a = std::max(lo, 1e-300);  // objective -> psi(0+) f(0) * 0 handled by limit
        auto [t, v] = golden_max(objective, a, hi);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
        lo = hi;
    }
    // for t >= totalWeight the objective is (total mass)/psi(t), nonincreasing,
    // so the tail maximum sits at the support end (already evaluated above)
    return {best_v, tag, best_t, "golden-section(1e-10)"};
}

double lpq_norm_of_cesaro(const CesaroCurve& c, double pp, double qq, double rel_tol) {
    if (c.piece_list().empty()) return 0.0;
    double T = c.support_end();
    double a_inf = c.tail_coefficient();
    if (qq == kInf) {
        double best = 0.0;
        for (const auto& pc : c.piece_list()) {
            auto g = [&](double t) { return std::pow(t, 1.0 / pp) * (pc.a / t + pc.b); };
            double lo = std::max(pc.t_lo, 1e-300);
            best = std::max(best, std::max(g(lo), g(pc.t_hi)));
            if (pc.b > 0.0 && pc.a > 0.0) {
                double tc = pc.a * (pp - 1.0) / pc.b;
                if (tc > pc.t_lo && tc < pc.t_hi) best = std::max(best, g(tc));
            }
        }
        best = std::max(best, std::pow(T, 1.0 / pp - 1.0) * a_inf);
        return best;
    }
    double s = 0.0;
    for (const auto& pc : c.piece_list()) {
        if (pc.t_lo == 0.0) {
            // first piece is constant (a = 0): b^q (p/q) t_hi^{q/p} exactly
            s += std::pow(pc.b, qq) * (pp / qq) * std::pow(pc.t_hi, qq / pp);
        } else {
            auto g = [&](double t) {
                return std::pow(pc.a / t + pc.b, qq) * std::pow(t, qq / pp - 1.0);
            };
            s += adaptive_simpson(g, pc.t_lo, pc.t_hi, rel_tol, 48);
        }
    }
    // tail: a_inf^q \int_T^inf t^{q/p - q - 1} dt, convergent for p > 1
    double expo = qq / pp - qq;
    s += std::pow(a_inf, qq) * std::pow(T, expo) / (-expo);
    return std::pow(s, 1.0 / qq);
}

WeightFunction least_concave_majorant(const WeightFunction& phi) {
    if (phi.kind() != WeightFunction::Kind::PiecewiseLinear)
        throw std::invalid_argument("least_concave_majorant: input must be piecewise linear");
    std::vector<std::pair<double, double>> pts = phi.vertices();
    if (pts.front().first != 0.0) pts.insert(pts.begin(), {0.0, 0.0});
    // upper hull, monotone chain over points already sorted by abscissa
    std::vector<std::pair<double, double>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull[hull.size() - 1];
            double cross = (a.first - o.first) * (pt.second - o.second) -
                           (a.second - o.second) * (pt.first - o.first);
            if (cross >= 0.0)
                hull.pop_back();  // a is below the chord o->pt
            else
                break;
        }
        hull.push_back(pt);
    }
    return WeightFunction::piecewise_linear(std::move(hull));
}

RatioScan lorentz_range_condition(const WeightFunction& psi, const WeightFunction& phi,
                                  const LogGrid& grid) {
    if (psi.slope_at_infinity() > 1e-12)
        throw std::runtime_error("lorentz_range_condition: psi(s)/s does not tend to 0, "
                                 "\\int psi(s)/s^2 ds diverges");
    auto integrand = [&psi](double u) { return psi(1.0 / u); };
    RatioScan out;
    out.ratio = 0.0;
    double step = std::log(grid.t_max / grid.t_min) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
        double t = grid.t_min * std::exp(step * i);
        double integral = graded_integral_to_zero(integrand, 1.0 / t, 1e-9);
        double ratio = integral / (phi(t) / t);
        if (ratio > out.ratio) {
            out.ratio = ratio;
            out.witness_t = t;
        }
    }
    return out;
}

RatioScan phi_floor_condition(const WeightFunction& phi, const LogGrid& grid) {
    RatioScan out;
    out.ratio = kInf;
    double step = std::log(grid.t_max / grid.t_min) / (grid.points - 1);
    for (int i = 0; i < grid.points; ++i) {
        double t = grid.t_min * std::exp(step * i);
        double floor = t * std::log1p(1.0 / t);
        double ratio = phi(t) / floor;
        if (ratio < out.ratio) {
            out.ratio = ratio;
            out.witness_t = t;
        }
    }
    return out;
}

bool f_space_witness(const SpectralProfile& f, const SpectralProfile& g) {
    return submajorized_by_cesaro(mu_of_profile(f), g);
}

namespace {

double parse_named(const std::string& args, const std::string& key) {
    // "p=2,q=1" style
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq != std::string::npos && item.substr(0, eq) == key) {
            std::string v = item.substr(eq + 1);
            if (v == "inf") return kInf;
            return std::stod(v);
        }
    }
    throw std::invalid_argument("norm spec: missing parameter '" + key + "' in '" + args + "'");
}

}  // namespace

NormResult norm_by_spec(const SpectralProfile& p, const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string args = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
    if (name == "lp") return norm_lp(p, parse_named(args, "p"));
    if (name == "lpq") return norm_lpq(p, parse_named(args, "p"), parse_named(args, "q"));
    if (name == "weakl1") return norm_lpq(p, 1.0, kInf);
    if (name == "l1plusinf") return norm_l1_plus_linf(p);
    if (name == "l1capinf") return norm_l1_cap_linf(p);
    if (name == "lorentz") {
        auto eq = args.find("phi=");
        if (eq == std::string::npos) throw std::invalid_argument("lorentz spec needs phi=...");
        return norm_lorentz(p, parse_weight(args.substr(eq + 4)));
    }
    if (name == "marcinkiewicz") {
        auto eq = args.find("psi=");
        if (eq == std::string::npos)
            throw std::invalid_argument("marcinkiewicz spec needs psi=...");
        return norm_marcinkiewicz(p, parse_weight(args.substr(eq + 4)));
    }
    throw std::invalid_argument("unknown norm space '" + spec + "'");
}

}  // namespace ncmax
