#include "ncmax/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncmax/quadrature.hpp"

namespace ncmax {

WeightFunction::WeightFunction(Kind k, double p1, double p2) : kind_(k), p1_(p1), p2_(p2) {}

WeightFunction WeightFunction::power(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("WeightFunction::power: alpha must be in (0,1]");
    WeightFunction w(Kind::Power, alpha, 0.0);
    w.verify_quasiconcave();
    return w;
}

WeightFunction WeightFunction::logtype(double beta, double gamma) {
    if (!(beta > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("WeightFunction::logtype: beta, gamma must be > 0");
    WeightFunction w(Kind::LogType, beta, gamma);
    w.verify_quasiconcave();
    return w;
}

WeightFunction WeightFunction::max_one() { return WeightFunction(Kind::MaxOne, 0.0, 0.0); }

WeightFunction WeightFunction::reciprocal_log() {
    return WeightFunction(Kind::ReciprocalLog, 0.0, 0.0);
}

WeightFunction WeightFunction::piecewise_linear(std::vector<std::pair<double, double>> vertices) {
    if (vertices.size() < 2)
        throw std::invalid_argument("piecewise_linear: need at least two vertices");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i].first <= vertices[i - 1].first)
            throw std::invalid_argument("piecewise_linear: duplicate abscissa");
    WeightFunction w(Kind::PiecewiseLinear, 0.0, 0.0);
    w.vertices_ = std::move(vertices);
    w.verify_quasiconcave();
    return w;
}

double WeightFunction::operator()(double t) const {
    if (t < 0.0) throw std::invalid_argument("WeightFunction: t must be >= 0");
    switch (kind_) {
        case Kind::Power:
            return std::pow(t, p1_);
        case Kind::LogType: {
            if (t == 0.0) return 0.0;
            // ln(1 + t^-gamma) = -gamma ln t + ln(1 + t^gamma), stable for tiny t
            double L = (t < 1.0) ? -p2_ * std::log(t) + std::log1p(std::pow(t, p2_))
                                 : std::log1p(std::pow(t, -p2_));
            return t * std::pow(L, p1_);
        }
        case Kind::MaxOne:
            return std::max(1.0, t);
        case Kind::ReciprocalLog:
            return (t <= 1.0) ? 1.0 : t / (1.0 + std::log(t));
        case Kind::PiecewiseLinear: {
            if (t <= vertices_.front().first) {
                // interpolate from the origin side of the first segment
                if (vertices_.front().first == 0.0) return vertices_.front().second;
                double m = vertices_.front().second / vertices_.front().first;
                return m * t;
            }
            for (std::size_t i = 1; i < vertices_.size(); ++i) {
                if (t <= vertices_[i].first) {
                    double t0 = vertices_[i - 1].first, v0 = vertices_[i - 1].second;
                    double t1 = vertices_[i].first, v1 = vertices_[i].second;
                    return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
                }
            }
            std::size_t n = vertices_.size();
            double m = (vertices_[n - 1].second - vertices_[n - 2].second) /
                       (vertices_[n - 1].first - vertices_[n - 2].first);
            return vertices_[n - 1].second + m * (t - vertices_[n - 1].first);
        }
        case Kind::InverseIntegral: {
            if (t == 0.0) {
                // lim t/J(t) = lim phi(t) by l'Hopital
                return (*base_)(0.0);
            }
            return t / base_->reciprocal_prefix_integral(t);
        }
    }
    return 0.0;
}

bool WeightFunction::zero_at_origin() const {
    switch (kind_) {
        case Kind::Power:
        case Kind::LogType:
            return true;
        case Kind::MaxOne:
        case Kind::ReciprocalLog:
            return false;
        case Kind::PiecewiseLinear:
            return vertices_.front().first == 0.0 && vertices_.front().second == 0.0;
        case Kind::InverseIntegral:
            return base_->zero_at_origin();
    }
    return false;
}

double WeightFunction::slope_at_infinity() const {
    switch (kind_) {
        case Kind::Power:
            return (p1_ == 1.0) ? 1.0 : 0.0;
        case Kind::LogType:
        case Kind::ReciprocalLog:
            return 0.0;
        case Kind::MaxOne:
            return 1.0;
        case Kind::PiecewiseLinear: {
            std::size_t n = vertices_.size();
            return (vertices_[n - 1].second - vertices_[n - 2].second) /
                   (vertices_[n - 1].first - vertices_[n - 2].first);
        }
        case Kind::InverseIntegral:
            return 1.0 / base_->reciprocal_prefix_integral(1e12);
    }
    return 0.0;
}

bool WeightFunction::reciprocal_integrable_at_zero() const {
    switch (kind_) {
        case Kind::Power:
            return p1_ < 1.0;
        case Kind::LogType:
            return p1_ > 1.0;
        case Kind::MaxOne:
        case Kind::ReciprocalLog:
            return true;
        case Kind::PiecewiseLinear:
            return !zero_at_origin();
        case Kind::InverseIntegral:
            // 1/psi = J(t)/t which behaves like 1/phi near zero
            return base_->reciprocal_integrable_at_zero();
    }
    return false;
}

double WeightFunction::reciprocal_prefix_integral(double t) const {
    if (t < 0.0) throw std::invalid_argument("reciprocal_prefix_integral: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (!reciprocal_integrable_at_zero())
        throw std::runtime_error("reciprocal_prefix_integral: 1/phi not integrable at zero for " +
                                 describe());
    switch (kind_) {
        case Kind::Power:
            return std::pow(t, 1.0 - p1_) / (1.0 - p1_);
        case Kind::MaxOne:
            return (t <= 1.0) ? t : 1.0 + std::log(t);
        case Kind::ReciprocalLog: {
            if (t <= 1.0) return t;
            double lt = std::log(t);
            return 1.0 + lt + 0.5 * lt * lt;
        }
        case Kind::LogType: {
            // substitute s = e^{-x}: \int_0^c ds/phi(s) = \int_{ln(1/c)}^inf dx/L(x)^beta
            // with L(x) = log1p(e^{gamma x}); L(x) - gamma x decays like e^{-gamma x},
            // so beyond Xc the analytic (gamma x)^{-beta} tail is exact to roundoff
            double beta = p1_, gamma = p2_;
            double head = 0.0;
            double c = t;
            if (t > 1.0) {
                auto inv = [this](double s) { return 1.0 / (*this)(s); };
                head = adaptive_simpson(inv, 1.0, t, 1e-10);
                c = 1.0;
            }
            double x0 = std::log(1.0 / c);
            double xc = std::max(x0, 80.0 / gamma);
            auto g = [beta, gamma](double x) {
                double y = gamma * x;
                double L = (y > 30.0) ? y + std::exp(-y) : std::log1p(std::exp(y));
                return std::pow(L, -beta);
            };
            double mid = (xc > x0) ? adaptive_simpson(g, x0, xc, 1e-10, 48) : 0.0;
            double tail = std::pow(xc, 1.0 - beta) / (std::pow(gamma, beta) * (beta - 1.0));
            return head + mid + tail;
        }
        default: {
            auto inv = [this](double s) { return 1.0 / (*this)(s); };
            return graded_integral_to_zero(inv, t, 1e-8);
        }
    }
}

void WeightFunction::verify_quasiconcave() const {
    const double tol = 1e-9;
    std::vector<double> grid;
    for (int k = -80; k <= 80; ++k) grid.push_back(std::pow(10.0, k * 0.1));
    if (kind_ == Kind::PiecewiseLinear)
        for (const auto& v : vertices_)
            if (v.first > 0.0) grid.push_back(v.first);
    std::sort(grid.begin(), grid.end());
    double prev_v = -1.0, prev_ratio = -1.0;
    for (double t : grid) {
        double v = (*this)(t);
        if (!(v > 0.0)) throw std::invalid_argument("WeightFunction: not positive at t > 0");
        double ratio = v / t;
        if (prev_v >= 0.0) {
            if (v < prev_v * (1.0 - tol))
                throw std::invalid_argument("WeightFunction: not increasing (not quasiconcave)");
            if (ratio > prev_ratio * (1.0 + tol))
                throw std::invalid_argument("WeightFunction: value/t not decreasing (not quasiconcave)");
        }
        prev_v = v;
        prev_ratio = ratio;
    }
}

std::string WeightFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Power: os << "power:" << p1_; break;
        case Kind::LogType: os << "logtype:" << p1_ << "," << p2_; break;
        case Kind::MaxOne: os << "maxone"; break;
        case Kind::ReciprocalLog: os << "reciprocallog"; break;
        case Kind::PiecewiseLinear: os << "piecewiselinear[" << vertices_.size() << "]"; break;
        case Kind::InverseIntegral: os << "inverseintegral(" << base_->describe() << ")"; break;
    }
    return os.str();
}

WeightFunction psi_from_phi_inv(const WeightFunction& phi) {
    if (!phi.reciprocal_integrable_at_zero())
        throw std::invalid_argument("psi_from_phi_inv: 1/phi diverges at zero for " +
                                    phi.describe());
    WeightFunction w(WeightFunction::Kind::InverseIntegral, 0.0, 0.0);
    w.base_ = std::make_shared<WeightFunction>(phi);
    return w;
}

WeightFunction parse_weight(const std::string& s) {
    auto colon = s.find(':');
    std::string kind = s.substr(0, colon);
    std::string args = (colon == std::string::npos) ? "" : s.substr(colon + 1);
    if (kind == "power") return WeightFunction::power(std::stod(args));
    if (kind == "logtype") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("parse_weight: logtype needs beta,gamma");
        return WeightFunction::logtype(std::stod(args.substr(0, comma)),
                                       std::stod(args.substr(comma + 1)));
    }
    if (kind == "maxone") return WeightFunction::max_one();
    if (kind == "reciprocallog") return WeightFunction::reciprocal_log();
    throw std::invalid_argument("parse_weight: unknown weight '" + s + "'");
}

}  // namespace ncmax
