#include "doctest.h"

#include <random>

#include "hermop/linsolve.hpp"

using namespace hermop;

namespace {

template <typename F>
bool in_kernel(const std::vector<std::vector<F>>& M, const std::vector<F>& x) {
    for (const auto& row : M) {
        F acc(0);
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("identity has trivial kernel") {
    std::vector<std::vector<Rat>> M{{1, 0}, {0, 1}};
    auto r = nullspace(M, 2);
    CHECK(r.basis.empty());
    CHECK(r.rank == 2);
}

TEST_CASE("zero matrix has full kernel") {
    std::vector<std::vector<Rat>> M{{0, 0}, {0, 0}};
    auto r = nullspace(M, 2);
    REQUIRE(r.basis.size() == 2);
    CHECK(r.rank == 0);
    CHECK(r.basis[0] == std::vector<Rat>{1, 0});
    CHECK(r.basis[1] == std::vector<Rat>{0, 1});
}

TEST_CASE("single symbolic relation [k k]") {
    ParamField k = ParamField::kappa();
    std::vector<std::vector<ParamField>> M{{k, k}};
    auto r = nullspace(M, 2);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.rank == 1);
    CHECK(r.basis[0][0] == ParamField(1));
    CHECK(r.basis[0][1] == ParamField(-1));
}

TEST_CASE("symbolic kernel with polynomial normalization") {
    ParamField k = ParamField::kappa();
    // Rows are proportional: kernel is spanned by (1, -k) after clearing
    // the 1/k denominators.
    std::vector<std::vector<ParamField>> M{{k, ParamField(1)}, {k * k, k}};
    auto r = nullspace(M, 2);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.rank == 1);
    CHECK(in_kernel(M, r.basis[0]));
    CHECK(r.basis[0][0] == ParamField(1));
    CHECK(r.basis[0][1] == -k);
}

TEST_CASE("rational kernel vectors are primitive") {
    std::vector<std::vector<Rat>> M{{1, 2, 3}, {2, 4, 6}};
    auto r = nullspace(M, 3);
    CHECK(r.rank == 1);
    REQUIRE(r.basis.size() == 2);
    for (const auto& x : r.basis) {
        CHECK(in_kernel(M, x));
        for (const auto& v : x) CHECK(rat_den(v) == 1);
    }
}

TEST_CASE("seeded random matrices: exact kernel and rank-nullity") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Rat>> M(static_cast<std::size_t>(rows),
                                        std::vector<Rat>(static_cast<std::size_t>(cols)));
        for (auto& row : M)
            for (auto& v : row) v = entry(rng);
        auto r = nullspace(M, cols);
        CHECK(r.rank + static_cast<int>(r.basis.size()) == cols);
        for (const auto& x : r.basis) CHECK(in_kernel(M, x));
    }
}

TEST_CASE("empty row set means everything is in the kernel") {
    std::vector<std::vector<Rat>> M;
    auto r = nullspace(M, 3);
    CHECK(r.rank == 0);
    CHECK(r.basis.size() == 3);
}

TEST_CASE("ragged input is rejected") {
    std::vector<std::vector<Rat>> M{{1, 2}, {1}};
    CHECK_THROWS_AS(nullspace(M, 2), domain_error);
}
