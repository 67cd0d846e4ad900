#include "doctest.h"

#include "hermop/poly_matrix.hpp"

using namespace hermop;

namespace {

const std::set<VarTag> kWTags{VarTag::W};

// Independent oracle: the binomial series (1-x)^{-k} has j-th coefficient
// k(k+1)...(k+j-1)/j!.
ParamField rising_over_factorial(int j) {
    ParamField c(1);
    for (int t = 0; t < j; ++t)
        c *= (ParamField::kappa() + ParamField(t)) / ParamField(t + 1);
    return c;
}

} // namespace

TEST_CASE("1x1 det power series matches the binomial series oracle") {
    MultiPoly w = MultiPoly::variable(var_W(1, 1));
    MultiPoly tau = MultiPoly::variable(var_T(1, 1));
    PolyMatrix M(1, 1);
    M.at(1, 1) = MultiPoly::constant(Rat(1)) - w * tau;

    SUBCASE("documented degree-2 jet") {
        MultiPoly jet = det_power_series(M, ParamField::kappa(), 2, kWTags);
        ParamField k = ParamField::kappa();
        MultiPoly expect = MultiPoly::constant(Rat(1)) + (w * tau).scaled(k) +
                           (w * tau).pow(2).scaled(k * (k + ParamField(1)) * ParamField(Rat(1, 2)));
        CHECK(jet == expect);
        // The truncation degree counts W only; the retained w^2*tau^2 term
        // has total degree 4.
        CHECK(jet.total_degree() == 4);
    }

    SUBCASE("oracle comparison up to degree 5") {
        MultiPoly jet = det_power_series(M, ParamField::kappa(), 5, kWTags);
        MultiPoly expect;
        for (int j = 0; j <= 5; ++j) expect += (w * tau).pow(unsigned(j)).scaled(rising_over_factorial(j));
        CHECK(jet == expect);
    }

    SUBCASE("derivative of the jet") {
        MultiPoly jet = det_power_series(M, ParamField::kappa(), 2, kWTags);
        ParamField k = ParamField::kappa();
        MultiPoly expect = tau.scaled(k) + (w * tau * tau).scaled(k * (k + ParamField(1)));
        CHECK(jet.partial_derivative(var_W(1, 1)) == expect);
    }
}

TEST_CASE("zero perturbation gives 1") {
    PolyMatrix M = PolyMatrix::identity(3);
    CHECK(det_power_series(M, ParamField::kappa(), 4, kWTags) == MultiPoly::constant(Rat(1)));
}

TEST_CASE("2x2 diagonal case at truncation degree 1") {
    MultiPoly w1t1 = MultiPoly::variable(var_W(1, 1)) * MultiPoly::variable(var_T(1, 1));
    MultiPoly w2t2 = MultiPoly::variable(var_W(2, 2)) * MultiPoly::variable(var_T(2, 2));
    PolyMatrix M = PolyMatrix::identity(2);
    M.at(1, 1) -= w1t1;
    M.at(2, 2) -= w2t2;
    ParamField k = ParamField::kappa();
    CHECK(det_power_series(M, k, 1, kWTags) ==
          MultiPoly::constant(Rat(1)) + w1t1.scaled(k) + w2t2.scaled(k));
}

TEST_CASE("diagonal series factors into 1-D series up to degree 6") {
    MultiPoly w1t1 = MultiPoly::variable(var_W(1, 1)) * MultiPoly::variable(var_T(1, 1));
    MultiPoly w2t2 = MultiPoly::variable(var_W(2, 2)) * MultiPoly::variable(var_T(2, 2));
    PolyMatrix M = PolyMatrix::identity(2);
    M.at(1, 1) -= w1t1;
    M.at(2, 2) -= w2t2;
    MultiPoly joint = det_power_series(M, ParamField::kappa(), 6, kWTags);

    PolyMatrix M1(1, 1), M2(1, 1);
    M1.at(1, 1) = MultiPoly::constant(Rat(1)) - w1t1;
    M2.at(1, 1) = MultiPoly::constant(Rat(1)) - w2t2;
    MultiPoly product = det_power_series(M1, ParamField::kappa(), 6, kWTags) *
                        det_power_series(M2, ParamField::kappa(), 6, kWTags);
    CHECK(joint == product.truncate_by_tags(6, kWTags));
}

TEST_CASE("non-identity constant part is rejected") {
    PolyMatrix M = PolyMatrix::identity(2);
    M.at(1, 2) = MultiPoly::constant(Rat(1));
    CHECK_THROWS_AS(det_power_series(M, ParamField::kappa(), 2, kWTags), domain_error);

    PolyMatrix M2 = PolyMatrix::identity(1);
    M2.at(1, 1) = MultiPoly::constant(Rat(2));
    CHECK_THROWS_AS(det_power_series(M2, ParamField::kappa(), 2, kWTags), domain_error);
}

TEST_CASE("matrix arithmetic shape checks") {
    PolyMatrix A(2, 3), B(3, 2);
    CHECK_THROWS_AS(A + B, domain_error);
    PolyMatrix C = A * B;
    CHECK(C.rows() == 2);
    CHECK(C.cols() == 2);
    CHECK_THROWS_AS(A.trace(), domain_error);
    CHECK_THROWS_AS(A.at(3, 1), domain_error);
}
