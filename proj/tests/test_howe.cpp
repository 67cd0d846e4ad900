#include "doctest.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "hermop/errors.hpp"
#include "hermop/howe.hpp"

using namespace hermop;

namespace {

using PairKey = std::pair<Partition, Partition>;

std::set<PairKey> as_set(const std::vector<YoungPair>& v) {
    std::set<PairKey> out;
    for (const YoungPair& d : v) out.insert({d.d1, d.d2});
    return out;
}

// Independent brute-force enumeration: odometer over all weakly decreasing
// tuples of bounded length and entry size, then constraint filtering.
std::set<PairKey> brute_force_delta(int n, int kappa, int max_boxes) {
    std::vector<Partition> all;
    all.push_back({});
    for (int len = 1; len <= max_boxes; ++len) {
        std::vector<int> idx(len, 1);
        while (true) {
            bool ok = true;
            int total = 0;
            for (int i = 0; i < len; ++i) {
                total += idx[i];
                if (i > 0 && idx[i] > idx[i - 1]) ok = false;
            }
            if (ok && total <= max_boxes) all.emplace_back(idx.begin(), idx.end());
            int pos = len - 1;
            while (pos >= 0 && idx[pos] == max_boxes) {
                idx[pos] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    std::set<PairKey> out;
    for (const Partition& d1 : all)
        for (const Partition& d2 : all) {
            if (static_cast<int>(d1.size()) > n) continue;
            if (static_cast<int>(d2.size()) > n) continue;
            if (static_cast<int>(d1.size() + d2.size()) > kappa) continue;
            int total = 0;
            for (int x : d1) total += x;
            for (int x : d2) total += x;
            if (total > max_boxes) continue;
            out.insert({d1, d2});
        }
    return out;
}

} // namespace

TEST_CASE("enumerate_delta small families") {
    const std::set<PairKey> five = {
        {{}, {}}, {{1}, {}}, {{2}, {}}, {{}, {1}}, {{}, {2}}};
    CHECK(as_set(enumerate_delta(1, 1, 2)) == five);
    CHECK(enumerate_delta(1, 1, 2).size() == 5);

    const std::set<PairKey> eight = {
        {{}, {}},     {{1}, {}},    {{2}, {}},    {{1, 1}, {}},
        {{}, {1}},    {{}, {2}},    {{}, {1, 1}}, {{1}, {1}}};
    CHECK(as_set(enumerate_delta(2, 2, 2)) == eight);
    CHECK(enumerate_delta(2, 2, 2).size() == 8);

    const auto trivial = enumerate_delta(3, 5, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].d1.empty());
    CHECK(trivial[0].d2.empty());
}

TEST_CASE("enumerate_delta matches brute force and is lex sorted") {
    for (int n = 1; n <= 3; ++n)
        for (int kappa = 1; kappa <= 4; ++kappa)
            for (int mb = 0; mb <= 4; ++mb) {
                const auto fast = enumerate_delta(n, kappa, mb);
                CHECK(as_set(fast) == brute_force_delta(n, kappa, mb));
                for (std::size_t i = 1; i < fast.size(); ++i) {
                    const PairKey prev{fast[i - 1].d1, fast[i - 1].d2};
                    const PairKey cur{fast[i].d1, fast[i].d2};
                    CHECK(prev < cur);
                }
            }
}

TEST_CASE("sigma_map pads and shifts") {
    const auto [l1, r1] = sigma_map({{2, 1}, {1}, 2, 3});
    CHECK(l1 == GLWeight{5, 4});
    CHECK(r1 == GLWeight{1, 0});
    const auto [l2, r2] = sigma_map({{}, {}, 2, 3});
    CHECK(l2 == GLWeight{3, 3});
    CHECK(r2 == GLWeight{0, 0});
    const auto [l3, r3] = sigma_map({{4}, {}, 1, 1});
    CHECK(l3 == GLWeight{5});
    CHECK(r3 == GLWeight{0});
}

TEST_CASE("lambda_map lays out the two diagrams") {
    CHECK(lambda_map({{2, 1}, {1}, 2, 3}) == GLWeight{2, 1, -1});
    CHECK(lambda_map({{}, {}, 2, 2}) == GLWeight{0, 0});
    CHECK(lambda_map({{3}, {2}, 1, 2}) == GLWeight{3, -2});
    CHECK(lambda_map({{}, {2, 1}, 2, 4}) == GLWeight{0, 0, -1, -2});
}

TEST_CASE("contragredience tests") {
    CHECK(is_contragredient_pair({2, 1, -1}, {1, -1, -2}));
    CHECK(is_contragredient_pair({0, 0, 0}, {0, 0, 0}));
    CHECK_FALSE(is_contragredient_pair({1, 0}, {1, 0}));
    CHECK_THROWS_AS(is_contragredient_pair({1, 0}, {1, 0, 0}), domain_error);
    CHECK(contragredient({3, -2}) == GLWeight{2, -3});
}

TEST_CASE("gl_dimension evaluates the Weyl product") {
    CHECK(gl_dimension({0, 0, 0}) == 1);
    CHECK(gl_dimension({1, 0}) == 2);
    CHECK(gl_dimension({1, 1, 0}) == 3);
    CHECK(gl_dimension({2, 0}) == 3);
    CHECK(gl_dimension({5, 4}) == 2);
    CHECK(gl_dimension({}) == 1);
    CHECK_THROWS_AS(gl_dimension({0, 1}), domain_error);
}

TEST_CASE("two-factor pairing criterion over the enumeration") {
    for (int kappa : {2, 3, 4}) {
        const auto family = enumerate_delta(1, kappa, 4);
        for (const YoungPair& a : family)
            for (const YoungPair& b : family) {
                const bool paired =
                    is_contragredient_pair(lambda_map(a), lambda_map(b));
                const bool swapped = (a.d1 == b.d2 && a.d2 == b.d1);
                CHECK(paired == swapped);
            }
    }
}

TEST_CASE("lambda_map outputs are weakly decreasing") {
    for (const auto& [n, kappa, mb] :
         std::vector<std::tuple<int, int, int>>{{2, 3, 5}, {1, 4, 4}, {3, 2, 3}}) {
        for (const YoungPair& d : enumerate_delta(n, kappa, mb)) {
            const GLWeight w = lambda_map(d);
            for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i - 1] >= w[i]);
        }
    }
}

TEST_CASE("dimension is invariant under contragredience") {
    for (const YoungPair& d : enumerate_delta(2, 3, 4)) {
        const GLWeight w = lambda_map(d);
        CHECK(gl_dimension(w) == gl_dimension(contragredient(w)));
    }
}

TEST_CASE("sigma_map round trip recovers the first diagram") {
    for (const YoungPair& d : enumerate_delta(2, 3, 4)) {
        auto [left, right] = sigma_map(d);
        for (int& e : left) e -= d.kappa;
        GLWeight padded(d.n, 0);
        for (std::size_t i = 0; i < d.d1.size(); ++i) padded[i] = d.d1[i];
        CHECK(left == padded);
        GLWeight padded2(d.n, 0);
        for (std::size_t i = 0; i < d.d2.size(); ++i) padded2[i] = d.d2[i];
        CHECK(right == padded2);
    }
}

TEST_CASE("young pair validation") {
    CHECK_THROWS_AS(validate_young_pair({{1, 2}, {}, 2, 2}), domain_error);
    CHECK_THROWS_AS(validate_young_pair({{1, 1, 1}, {}, 2, 4}), domain_error);
    CHECK_THROWS_AS(validate_young_pair({{1}, {1}, 2, 1}), domain_error);
    CHECK_THROWS_AS(validate_young_pair({{0}, {}, 1, 1}), domain_error);
}
