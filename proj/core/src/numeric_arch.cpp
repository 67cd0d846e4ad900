#include "hermop/numeric_arch.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "hermop/errors.hpp"

namespace hermop {

void validate_quadrature_config(const QuadratureConfig& cfg) {
    HERMOP_DOMAIN_CHECK(cfg.rel_tol > 0, "quadrature: tolerance must be > 0");
    HERMOP_DOMAIN_CHECK(cfg.max_subdivisions >= 1,
                        "quadrature: need at least one refinement level");
    HERMOP_DOMAIN_CHECK(cfg.mc_samples >= 1000,
                        "quadrature: Monte Carlo needs at least 1000 samples");
}

double gaussian_cone_constant(int n, int d) {
    HERMOP_DOMAIN_CHECK(n >= 1 && d >= n, "gaussian_cone_constant: need d >= n >= 1");
    double g = 1;
    for (int i = 0; i < n; ++i) g *= std::tgamma(static_cast<double>(d - i));
    const double pi = std::acos(-1.0);
    return std::pow(2.0, -static_cast<double>(d) * n) *
           std::pow(pi, -0.5 * n * (n - 1)) / g;
}

namespace {

double rat_to_double(const Rat& r) {
    return static_cast<double>(rat_num(r)) / static_cast<double>(rat_den(r));
}

void check_positive_definite(int n, const RatMatrix& Y) {
    HERMOP_DOMAIN_CHECK(static_cast<int>(Y.size()) == n,
                        "gaussian check: matrix size does not match n");
    for (const auto& row : Y)
        HERMOP_DOMAIN_CHECK(static_cast<int>(row.size()) == n,
                            "gaussian check: matrix is not square");
    if (n == 1) {
        HERMOP_DOMAIN_CHECK(Y[0][0] > 0, "gaussian check: Y is not positive definite");
        return;
    }
    HERMOP_DOMAIN_CHECK(Y[0][1] == Y[1][0], "gaussian check: Y is not symmetric");
    HERMOP_DOMAIN_CHECK(Y[0][0] > 0 && Y[0][0] * Y[1][1] - Y[0][1] * Y[1][0] > 0,
                        "gaussian check: Y is not positive definite");
}

Rat rat_det(int n, const RatMatrix& Y) {
    return n == 1 ? Y[0][0] : Y[0][0] * Y[1][1] - Y[0][1] * Y[1][0];
}

// (2 pi)^{-d} \int_{C^d} exp(-y/2 |x|^2) dx = I^d with
// I = \int_0^inf exp(-y r^2 / 2) r dr per complex coordinate.
double gaussian_numeric_rank_one(double y, int d, const QuadratureConfig& cfg) {
    boost::math::quadrature::exp_sinh<double> integrator(cfg.max_subdivisions);
    const double radial = integrator.integrate(
        [y](double r) { return std::exp(-0.5 * y * r * r) * r; }, cfg.rel_tol);
    return std::pow(radial, d);
}

struct McEstimate {
    double mean = 0;
    double std_error = 0;
};

// Importance sampling of c_2(d) \int_{T>0} exp(-1/2 tr(TY)) det(T)^{d-2} dT
// with T = [[t11, t12], [conj(t12), t22]]:
//   t11 ~ Exp(Y11/2), t22 ~ Exp(Y22/2), t12 uniform on |t12|^2 < t11 t22.
// The exponential factors in tr(TY) cancel against the proposal density,
// leaving weight exp(-Re(t12) Y12) det(T)^{d-2} * 4 pi t11 t22 / (Y11 Y22).
McEstimate gaussian_numeric_rank_two(const RatMatrix& Y, int d,
                                     const QuadratureConfig& cfg) {
    const double y11 = rat_to_double(Y[0][0]);
    const double y22 = rat_to_double(Y[1][1]);
    const double y12 = rat_to_double(Y[0][1]);
    const double pi = std::acos(-1.0);
    std::mt19937_64 rng(cfg.seed);
    auto unit = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    };
    double sum = 0;
    double sum_sq = 0;
    const std::size_t samples = cfg.mc_samples;
    for (std::size_t it = 0; it < samples; ++it) {
        const double t11 = -2.0 * std::log(unit()) / y11;
        const double t22 = -2.0 * std::log(unit()) / y22;
        const double radius = std::sqrt(t11 * t22 * unit());
        const double angle = 2.0 * pi * unit();
        const double x = radius * std::cos(angle);
        const double det = t11 * t22 - radius * radius;
        const double w = std::exp(-x * y12) *
                         std::pow(det, static_cast<double>(d - 2)) * 4.0 * pi *
                         t11 * t22 / (y11 * y22);
        sum += w;
        sum_sq += w * w;
    }
    const double c = gaussian_cone_constant(2, d);
    const double mean = sum / static_cast<double>(samples);
    const double var =
        (sum_sq / static_cast<double>(samples) - mean * mean) /
        static_cast<double>(samples - 1);
    return {c * mean, c * std::sqrt(std::max(var, 0.0))};
}

} // namespace

GaussianCheckResult gaussian_det_check(int n, int d, const RatMatrix& Y,
                                       const QuadratureConfig& cfg) {
    validate_quadrature_config(cfg);
    HERMOP_DOMAIN_CHECK(n == 1 || n == 2, "gaussian check: n must be 1 or 2");
    HERMOP_DOMAIN_CHECK(d >= n, "gaussian check: require d >= n");
    check_positive_definite(n, Y);
    const double reference =
        std::pow(rat_to_double(rat_det(n, Y)), -static_cast<double>(d));
    GaussianCheckResult out;
    out.reference = reference;
    if (n == 1) {
        out.numeric = gaussian_numeric_rank_one(rat_to_double(Y[0][0]), d, cfg);
    } else {
        const McEstimate est = gaussian_numeric_rank_two(Y, d, cfg);
        out.numeric = est.mean;
        out.std_error = est.std_error;
    }
    out.rel_error = std::abs(out.numeric - reference) / std::abs(reference);
    return out;
}

namespace {

double check_arch_domain(int k, double s) {
    const double margin = 0.5 * k - s - 1.0;
    HERMOP_DOMAIN_CHECK(margin > 0,
                        "archimedean constant: divergent parameters, need "
                        "k/2 - s - 1 > 0");
    return margin;
}

} // namespace

double arch_constant_reference(int k, double s) {
    const double margin = check_arch_domain(k, s);
    return std::acos(-1.0) * std::pow(2.0, -(2.0 * s + 2.0)) / margin;
}

double arch_constant_scalar(int k, double s, const QuadratureConfig& cfg) {
    validate_quadrature_config(cfg);
    check_arch_domain(k, s);
    const double a = 0.5 * k - s - 2.0;
    const double pi = std::acos(-1.0);
    // Polar form: angular trapezoid times a radial tanh-sinh rule that
    // absorbs the (1 - r^2)^a endpoint singularity for a in (-1, 0).
    boost::math::quadrature::tanh_sinh<double> radial(cfg.max_subdivisions);
    const int angular_nodes = 64;
    double disc = 0;
    for (int j = 0; j < angular_nodes; ++j) {
        const double theta = 2.0 * pi * j / angular_nodes;
        const double cos_t = std::cos(theta);
        const double sin_t = std::sin(theta);
        disc += radial.integrate(
            [a, cos_t, sin_t](double r) {
                const double re = r * cos_t;
                const double im = r * sin_t;
                return std::pow(1.0 - re * re - im * im, a) * r;
            },
            0.0, 1.0, cfg.rel_tol);
    }
    disc *= 2.0 * pi / angular_nodes;
    return std::pow(2.0, -(2.0 * s + 2.0)) * disc;
}

} // namespace hermop
