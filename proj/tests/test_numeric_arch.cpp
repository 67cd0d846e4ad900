#include "doctest.h"

#include <cmath>

#include "hermop/errors.hpp"
#include "hermop/numeric_arch.hpp"

using namespace hermop;

namespace {

const double kPi = std::acos(-1.0);

RatMatrix diag2(const Rat& a, const Rat& b) {
    return {{a, Rat(0)}, {Rat(0), b}};
}

} // namespace

TEST_CASE("quadrature config validation") {
    QuadratureConfig cfg;
    validate_quadrature_config(cfg);
    cfg.rel_tol = 0;
    CHECK_THROWS_AS(validate_quadrature_config(cfg), domain_error);
    cfg.rel_tol = 1e-8;
    cfg.mc_samples = 10;
    CHECK_THROWS_AS(validate_quadrature_config(cfg), domain_error);
}

TEST_CASE("cone constant values") {
    CHECK(gaussian_cone_constant(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gaussian_cone_constant(1, 3) ==
          doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(gaussian_cone_constant(2, 2) ==
          doctest::Approx(1.0 / (16.0 * kPi)).epsilon(1e-12));
    CHECK(gaussian_cone_constant(2, 3) ==
          doctest::Approx(1.0 / (128.0 * kPi)).epsilon(1e-12));
    CHECK_THROWS_AS(gaussian_cone_constant(2, 1), domain_error);
}

TEST_CASE("rank one gaussian integral matches the determinant power") {
    QuadratureConfig cfg;
    const auto r1 = gaussian_det_check(1, 1, {{Rat(2)}}, cfg);
    CHECK(r1.reference == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r1.rel_error < 1e-6);
    const auto r2 = gaussian_det_check(1, 3, {{Rat(1)}}, cfg);
    CHECK(r2.reference == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2.rel_error < 1e-6);
    const auto r3 = gaussian_det_check(1, 4, {{Rat(5, 2)}}, cfg);
    CHECK(r3.reference == doctest::Approx(std::pow(2.5, -4)).epsilon(1e-12));
    CHECK(r3.rel_error < 1e-6);
    CHECK(r3.std_error == 0.0);
}

TEST_CASE("rank two monte carlo matches the determinant power") {
    QuadratureConfig cfg;
    const auto diag = gaussian_det_check(2, 2, diag2(Rat(1), Rat(2)), cfg);
    CHECK(diag.reference == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(diag.rel_error < 1e-2);
    CHECK(std::abs(diag.numeric - diag.reference) <= 3.0 * diag.std_error);
    CHECK(diag.std_error > 0.0);

    const RatMatrix coupled = {{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
    const auto off = gaussian_det_check(2, 3, coupled, cfg);
    CHECK(off.reference == doctest::Approx(1.0 / 27.0).epsilon(1e-12));
    CHECK(off.rel_error < 1e-2);
    CHECK(std::abs(off.numeric - off.reference) <= 3.0 * off.std_error);
}

TEST_CASE("monte carlo is deterministic for a fixed seed") {
    QuadratureConfig cfg;
    cfg.mc_samples = 20000;
    const auto a = gaussian_det_check(2, 2, diag2(Rat(1), Rat(1)), cfg);
    const auto b = gaussian_det_check(2, 2, diag2(Rat(1), Rat(1)), cfg);
    CHECK(a.numeric == b.numeric);
    cfg.seed += 1;
    const auto c = gaussian_det_check(2, 2, diag2(Rat(1), Rat(1)), cfg);
    CHECK(a.numeric != c.numeric);
}

TEST_CASE("gaussian check input validation") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(gaussian_det_check(1, 1, {{Rat(0)}}, cfg), domain_error);
    CHECK_THROWS_AS(gaussian_det_check(1, 1, {{Rat(-1)}}, cfg), domain_error);
    CHECK_THROWS_AS(gaussian_det_check(3, 3, {{Rat(1)}}, cfg), domain_error);
    CHECK_THROWS_AS(gaussian_det_check(2, 1, diag2(Rat(1), Rat(1)), cfg),
                    domain_error);
    CHECK_THROWS_AS(
        gaussian_det_check(2, 2, {{Rat(1), Rat(2)}, {Rat(0), Rat(1)}}, cfg),
        domain_error);
    CHECK_THROWS_AS(gaussian_det_check(2, 2, diag2(Rat(1), Rat(-3)), cfg),
                    domain_error);
}

TEST_CASE("archimedean constant against the disc oracle") {
    QuadratureConfig cfg;
    CHECK(arch_constant_reference(8, 1.0) == doctest::Approx(kPi / 32).epsilon(1e-12));
    CHECK(arch_constant_reference(6, 0.0) == doctest::Approx(kPi / 8).epsilon(1e-12));
    const double grid_s[] = {0.0, 0.5, 1.0, 1.5, 2.0};
    const double grid_ref[] = {kPi / 12, kPi / 20, kPi / 32, kPi / 48, kPi / 64};
    double prev = 1e300;
    for (int j = 0; j < 5; ++j) {
        const double ref = arch_constant_reference(8, grid_s[j]);
        CHECK(ref == doctest::Approx(grid_ref[j]).epsilon(1e-12));
        const double val = arch_constant_scalar(8, grid_s[j], cfg);
        CHECK(std::abs(val - ref) / ref < 1e-6);
        CHECK(val < prev);
        prev = val;
    }
}

TEST_CASE("archimedean constant with a singular radial endpoint") {
    QuadratureConfig cfg;
    // k/2 - s - 2 = -0.1: integrable endpoint singularity at |S| = 1.
    const double val = arch_constant_scalar(7, 1.6, cfg);
    const double ref = arch_constant_reference(7, 1.6);
    CHECK(std::abs(val - ref) / ref < 1e-6);
}

TEST_CASE("archimedean constant divergence") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(arch_constant_scalar(4, 1.0, cfg), domain_error);
    CHECK_THROWS_AS(arch_constant_scalar(6, 2.0, cfg), domain_error);
    CHECK_THROWS_AS(arch_constant_reference(4, 1.0), domain_error);
}
