#include "hermop/howe.hpp"

#include <algorithm>
#include <numeric>

#include "hermop/errors.hpp"

namespace hermop {

namespace {

// All partitions with at most max_boxes boxes and at most max_len parts,
// parts listed weakly decreasing.
std::vector<Partition> partitions_up_to(int max_boxes, int max_len) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, max_boxes, max_boxes);
    return out;
}

} // namespace

void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        HERMOP_DOMAIN_CHECK(p[i] >= 1, "partition parts must be positive");
        HERMOP_DOMAIN_CHECK(i == 0 || p[i - 1] >= p[i],
                            "partition must be weakly decreasing");
    }
}

void validate_gl_weight(const GLWeight& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        HERMOP_DOMAIN_CHECK(w[i - 1] >= w[i], "weight must be weakly decreasing");
}

void validate_young_pair(const YoungPair& d) {
    HERMOP_DOMAIN_CHECK(d.n >= 1, "row bound must be positive");
    HERMOP_DOMAIN_CHECK(d.kappa >= 1, "column bound must be positive");
    validate_partition(d.d1);
    validate_partition(d.d2);
    const int l1 = static_cast<int>(d.d1.size());
    const int l2 = static_cast<int>(d.d2.size());
    HERMOP_DOMAIN_CHECK(l1 <= d.n && l2 <= d.n,
                        "diagram length must not exceed the row bound");
    HERMOP_DOMAIN_CHECK(l1 + l2 <= d.kappa,
                        "combined diagram length must not exceed the column bound");
}

int boxes(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

std::vector<YoungPair> enumerate_delta(int n, int kappa, int max_boxes) {
    HERMOP_DOMAIN_CHECK(n >= 1, "row bound must be positive");
    HERMOP_DOMAIN_CHECK(kappa >= 1, "column bound must be positive");
    HERMOP_DOMAIN_CHECK(max_boxes >= 0, "box bound must be nonnegative");
    const std::vector<Partition> parts = partitions_up_to(max_boxes, n);
    std::vector<YoungPair> out;
    for (const Partition& d1 : parts)
        for (const Partition& d2 : parts) {
            if (boxes(d1) + boxes(d2) > max_boxes) continue;
            if (static_cast<int>(d1.size() + d2.size()) > kappa) continue;
            out.push_back(YoungPair{d1, d2, n, kappa});
        }
    std::sort(out.begin(), out.end(), [](const YoungPair& a, const YoungPair& b) {
        if (a.d1 != b.d1) return a.d1 < b.d1;
        return a.d2 < b.d2;
    });
    return out;
}

std::pair<GLWeight, GLWeight> sigma_map(const YoungPair& d) {
    validate_young_pair(d);
    GLWeight left(d.n, 0), right(d.n, 0);
    for (std::size_t i = 0; i < d.d1.size(); ++i) left[i] = d.d1[i];
    for (int& e : left) e += d.kappa;
    for (std::size_t i = 0; i < d.d2.size(); ++i) right[i] = d.d2[i];
    return {left, right};
}

GLWeight lambda_map(const YoungPair& d) {
    validate_young_pair(d);
    GLWeight w(d.kappa, 0);
    for (std::size_t i = 0; i < d.d1.size(); ++i) w[i] = d.d1[i];
    for (std::size_t i = 0; i < d.d2.size(); ++i)
        w[d.kappa - 1 - i] = -d.d2[i];
    return w;
}

GLWeight contragredient(const GLWeight& w) {
    GLWeight out(w.rbegin(), w.rend());
    for (int& e : out) e = -e;
    return out;
}

bool is_contragredient_pair(const GLWeight& a, const GLWeight& b) {
    HERMOP_DOMAIN_CHECK(a.size() == b.size(), "weights must have equal lengths");
    return b == contragredient(a);
}

Int gl_dimension(const GLWeight& w) {
    validate_gl_weight(w);
    Rat dim(1);
    const int m = static_cast<int>(w.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            dim *= Rat(w[i] - w[j] + j - i, j - i);
    HERMOP_LOGIC_CHECK(rat_den(dim) == 1, "dimension formula must be integral");
    return rat_num(dim);
}

} // namespace hermop
