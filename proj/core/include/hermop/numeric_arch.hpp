#pragma once

// Floating-point checks of the archimedean integrals.  This is the only
// module that touches floating point; every other module is exact.
//
// Gaussian determinant identity, for Y positive definite hermitian n x n
// and d >= n:
//
//   (2 pi)^{-dn} \int_{M_{n,d}(C)} exp(-1/2 tr(X* Y X)) dX = det(Y)^{-d}
//     = c_n(d) \int_{T > 0 hermitian} exp(-1/2 tr(T Y)) det(T)^{d-n} dT,
//
//   c_n(d) = 2^{-dn} pi^{-n(n-1)/2} (prod_{i=0}^{n-1} Gamma(d-i))^{-1}.
//
// For n = 1 the left-hand side splits into d radial Gaussian integrals and
// is evaluated by deterministic quadrature.  For n = 2 the T-integral form
// is estimated by importance-sampled Monte Carlo over the cone of positive
// definite hermitian 2 x 2 matrices, with det(Y)^{-d} as the reference.
//
// Archimedean constant, degree one and scalar weight k, for real s with
// k/2 - s - 1 > 0:
//
//   c(s) = 2^{-(2s+2)} \int_{|S| < 1} (1 - |S|^2)^{k/2 - s - 2} dS
//        = 2^{-(2s+2)} pi / (k/2 - s - 1),
//
// integrated over the open unit disc in C with Lebesgue area measure.
// Outside the convergence region the integral diverges and the evaluator
// refuses to run.

#include <cstddef>
#include <cstdint>

#include "hermop/rat_matrix.hpp"

namespace hermop {

struct QuadratureConfig {
    // Relative tolerance for deterministic quadrature.
    double rel_tol = 1e-8;
    // Refinement depth for the adaptive schemes.
    int max_subdivisions = 12;
    // Seed for the Monte Carlo estimator.
    std::uint64_t seed = 0x5eed5eed5eedULL;
    // Monte Carlo sample count.
    std::size_t mc_samples = 1000000;
};

void validate_quadrature_config(const QuadratureConfig& cfg);

struct GaussianCheckResult {
    double numeric = 0;
    double reference = 0;
    double rel_error = 0;
    // Monte Carlo standard error of `numeric`; 0 for the deterministic route.
    double std_error = 0;
};

// 2^{-dn} pi^{-n(n-1)/2} / prod_{i=0}^{n-1} Gamma(d - i).
double gaussian_cone_constant(int n, int d);

// Compares the numeric integral against det(Y)^{-d}.  Y must be a positive
// definite symmetric rational matrix of size n in {1, 2}, and d >= n.
GaussianCheckResult gaussian_det_check(int n, int d, const RatMatrix& Y,
                                       const QuadratureConfig& cfg);

// Closed form pi * 2^{-(2s+2)} / (k/2 - s - 1); throws on divergence.
double arch_constant_reference(int k, double s);
// Disc-integral evaluation of c(s); throws on k/2 - s - 1 <= 0.
double arch_constant_scalar(int k, double s, const QuadratureConfig& cfg);

} // namespace hermop
