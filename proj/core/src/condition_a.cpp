#include "hermop/condition_a.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "hermop/errors.hpp"
#include "hermop/linsolve.hpp"
#include "hermop/poly_text.hpp"

namespace hermop {

namespace {

// Nonzero length of a partition given with optional trailing zeros.
int partition_length(const std::vector<int>& part) {
    int len = static_cast<int>(part.size());
    while (len > 0 && part[len - 1] == 0) --len;
    return len;
}

void validate_partition(const std::vector<int>& part, const char* which) {
    for (std::size_t i = 0; i < part.size(); ++i) {
        HERMOP_DOMAIN_CHECK(part[i] >= 0,
                            std::string(which) + " weight entries must be nonnegative");
        HERMOP_DOMAIN_CHECK(i == 0 || part[i - 1] >= part[i],
                            std::string(which) + " weight must be weakly decreasing");
    }
}

// Global row index of local row i (1-based) in the given block (1-based).
int block_offset(const BlockSpec& spec, int block) {
    int off = 0;
    for (int s = 0; s + 1 < block; ++s) off += spec.sizes[s];
    return off;
}

void check_block_pair(const BlockSpec& spec, int block, int i, int j) {
    HERMOP_DOMAIN_CHECK(block >= 1 && block <= static_cast<int>(spec.sizes.size()),
                        "block index out of range");
    const int ns = spec.sizes[block - 1];
    HERMOP_DOMAIN_CHECK(i >= 1 && j >= 1 && i < j && j <= ns,
                        "block-local indices must satisfy 1 <= i < j <= block size");
}

void check_T_vars(const MultiPoly& p, int n) {
    for (const VarId& v : p.variables())
        HERMOP_DOMAIN_CHECK(v.tag == VarTag::T && v.row <= n && v.col <= n,
                            "polynomial must use T variables of the block total size");
}

// sum_c T_{to,c} * dP/dT_{from,c}, moving row degree from `from` to `to`.
MultiPoly row_transfer(const MultiPoly& p, int n, int from, int to) {
    MultiPoly out;
    for (int c = 1; c <= n; ++c)
        out += MultiPoly::variable(var_T(to, c)) *
               p.partial_derivative(var_T(from, c));
    return out;
}

// sum_r T_{r,to} * dP/dT_{r,from}, moving column degree from `from` to `to`.
MultiPoly col_transfer(const MultiPoly& p, int n, int from, int to) {
    MultiPoly out;
    for (int r = 1; r <= n; ++r)
        out += MultiPoly::variable(var_T(r, to)) *
               p.partial_derivative(var_T(r, from));
    return out;
}

// All exponent matrices with the given row and column sums, as monomials in
// the T variables, in descending graded-lex order.
std::vector<Monomial> candidate_monomials(const std::vector<int>& rowsum,
                                          const std::vector<int>& colsum) {
    const int n = static_cast<int>(rowsum.size());
    std::vector<int> colrem = colsum;
    std::vector<int> cell(static_cast<std::size_t>(n) * n, 0);
    std::vector<Monomial> out;
    std::function<void(int, int, int)> rec = [&](int r, int c, int rowrem) {
        if (r == n) {
            Monomial m;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (cell[u * n + v] > 0)
                        m.emplace_back(var_T(u + 1, v + 1), cell[u * n + v]);
            out.push_back(normalize_monomial(std::move(m)));
            return;
        }
        if (c == n) {
            if (rowrem == 0) rec(r + 1, 0, r + 1 < n ? rowsum[r + 1] : 0);
            return;
        }
        const int cap = std::min(rowrem, colrem[c]);
        for (int e = 0; e <= cap; ++e) {
            cell[r * n + c] = e;
            colrem[c] -= e;
            rec(r, c + 1, rowrem - e);
            colrem[c] += e;
            cell[r * n + c] = 0;
        }
    };
    rec(0, 0, n > 0 ? rowsum[0] : 0);
    std::sort(out.begin(), out.end(), MonomialOrderDesc{});
    return out;
}

std::string lowering_label(char side, int block, int i, int j) {
    return std::string(1, side) + std::to_string(block) + ":" +
           std::to_string(i) + "->" + std::to_string(j);
}

void attach_lowering_components(VectorPoly& vp, const BlockSpec& spec) {
    for (int s = 1; s <= static_cast<int>(spec.sizes.size()); ++s)
        for (int i = 1; i < spec.sizes[s - 1]; ++i)
            for (int j = i + 1; j <= spec.sizes[s - 1]; ++j) {
                vp.generated_components.emplace(
                    lowering_label('L', s, i, j),
                    left_lowering(vp.hwv, spec, s, i, j));
                vp.generated_components.emplace(
                    lowering_label('R', s, i, j),
                    right_lowering(vp.hwv, spec, s, i, j));
            }
}

// Interpolating polynomial in the k symbol through (xs[i], ys[i]).
Poly2 newton_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t m = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    Poly2 p = Poly2::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;)
        p = p * (Poly2::kappa() - Poly2::constant(xs[i])) + Poly2::constant(dd[i]);
    return p;
}

} // namespace

int BlockSpec::n() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

void validate_block_spec(const BlockSpec& spec) {
    HERMOP_DOMAIN_CHECK(!spec.sizes.empty(), "at least one block is required");
    for (std::size_t s = 0; s < spec.sizes.size(); ++s) {
        HERMOP_DOMAIN_CHECK(spec.sizes[s] >= 1, "block sizes must be positive");
        HERMOP_DOMAIN_CHECK(s == 0 || spec.sizes[s - 1] >= spec.sizes[s],
                            "block sizes must be weakly decreasing");
    }
    HERMOP_DOMAIN_CHECK(spec.n() <= 9, "total size must not exceed 9");
    HERMOP_DOMAIN_CHECK(spec.kcols >= 1 && spec.kcols <= 9,
                        "column count must lie in 1..9");
}

void validate_weights(const BlockSpec& spec, const std::vector<WeightPair>& weights) {
    validate_block_spec(spec);
    HERMOP_DOMAIN_CHECK(weights.size() == spec.sizes.size(),
                        "one weight pair per block is required");
    const int nd = spec.sizes.back();
    for (const WeightPair& w : weights) {
        validate_partition(w.k, "row");
        validate_partition(w.l, "column");
        const int lk = partition_length(w.k);
        const int ll = partition_length(w.l);
        HERMOP_DOMAIN_CHECK(lk <= nd && ll <= nd,
                            "weight length must not exceed the smallest block size");
        HERMOP_DOMAIN_CHECK(lk + ll <= spec.kcols,
                            "combined weight length must not exceed the column count");
    }
}

TorusWeight expected_torus_weight(const BlockSpec& spec,
                                  const std::vector<WeightPair>& weights) {
    validate_weights(spec, weights);
    TorusWeight tw;
    for (std::size_t s = 0; s < spec.sizes.size(); ++s)
        for (int i = 0; i < spec.sizes[s]; ++i) {
            const auto& k = weights[s].k;
            const auto& l = weights[s].l;
            tw.left.push_back(i < static_cast<int>(k.size()) ? k[i] : 0);
            tw.right.push_back(i < static_cast<int>(l.size()) ? l[i] : 0);
        }
    return tw;
}

WeilPoly build_P_tilde(const MultiPoly& p, const BlockSpec& spec) {
    validate_block_spec(spec);
    const int n = spec.n();
    check_T_vars(p, n);
    std::map<VarId, MultiPoly> images;
    for (const VarId& v : p.variables())
        images.emplace(v, pairing_entry(v.row, v.col, spec.kcols));
    return make_weil_poly({n, spec.kcols}, p.substitute(images));
}

TorusWeight torus_weight(const MultiPoly& p, const BlockSpec& spec) {
    validate_block_spec(spec);
    const int n = spec.n();
    check_T_vars(p, n);
    HERMOP_DOMAIN_CHECK(!p.is_zero(), "the zero polynomial has no torus weight");
    auto degrees = [n](const Monomial& m) {
        TorusWeight tw;
        tw.left.assign(n, 0);
        tw.right.assign(n, 0);
        for (const auto& [v, e] : m) {
            tw.left[v.row - 1] += e;
            tw.right[v.col - 1] += e;
        }
        return tw;
    };
    const Monomial& first = p.terms().begin()->first;
    TorusWeight tw = degrees(first);
    for (const auto& [m, c] : p.terms()) {
        const TorusWeight other = degrees(m);
        if (other.left != tw.left || other.right != tw.right)
            throw domain_error(
                "polynomial is not torus-homogeneous: monomials " +
                to_canonical_text(MultiPoly::term(first, ParamField(Rat(1)))) +
                " and " +
                to_canonical_text(MultiPoly::term(m, ParamField(Rat(1)))) +
                " have different weights");
    }
    return tw;
}

MultiPoly left_raising(const MultiPoly& p, const BlockSpec& spec, int block,
                       int i, int j) {
    validate_block_spec(spec);
    check_block_pair(spec, block, i, j);
    const int off = block_offset(spec, block);
    return row_transfer(p, spec.n(), off + j, off + i);
}

MultiPoly left_lowering(const MultiPoly& p, const BlockSpec& spec, int block,
                        int i, int j) {
    validate_block_spec(spec);
    check_block_pair(spec, block, i, j);
    const int off = block_offset(spec, block);
    return row_transfer(p, spec.n(), off + i, off + j);
}

MultiPoly right_raising(const MultiPoly& p, const BlockSpec& spec, int block,
                        int i, int j) {
    validate_block_spec(spec);
    check_block_pair(spec, block, i, j);
    const int off = block_offset(spec, block);
    return col_transfer(p, spec.n(), off + j, off + i);
}

MultiPoly right_lowering(const MultiPoly& p, const BlockSpec& spec, int block,
                         int i, int j) {
    validate_block_spec(spec);
    check_block_pair(spec, block, i, j);
    const int off = block_offset(spec, block);
    return col_transfer(p, spec.n(), off + i, off + j);
}

bool check_equivariance(const VectorPoly& p, const BlockSpec& spec,
                        const std::vector<WeightPair>& weights) {
    validate_weights(spec, weights);
    HERMOP_DOMAIN_CHECK(!p.hwv.is_zero(), "vector polynomial must be nonzero");
    const TorusWeight actual = torus_weight(p.hwv, spec);
    const TorusWeight wanted = expected_torus_weight(spec, weights);
    if (actual.left != wanted.left || actual.right != wanted.right) return false;
    for (int s = 1; s <= static_cast<int>(spec.sizes.size()); ++s)
        for (int i = 1; i < spec.sizes[s - 1]; ++i)
            for (int j = i + 1; j <= spec.sizes[s - 1]; ++j) {
                if (!left_raising(p.hwv, spec, s, i, j).is_zero()) return false;
                if (!right_raising(p.hwv, spec, s, i, j).is_zero()) return false;
            }
    return true;
}

std::vector<VectorPoly> solve_condition_A(const BlockSpec& spec,
                                          const std::vector<WeightPair>& weights) {
    validate_weights(spec, weights);
    const TorusWeight wanted = expected_torus_weight(spec, weights);
    const int left_total =
        std::accumulate(wanted.left.begin(), wanted.left.end(), 0);
    const int right_total =
        std::accumulate(wanted.right.begin(), wanted.right.end(), 0);
    if (left_total != right_total) return {};
    const std::vector<Monomial> cands =
        candidate_monomials(wanted.left, wanted.right);
    if (cands.empty()) return {};
    const std::size_t ncand = cands.size();

    std::vector<std::vector<Rat>> equations;
    auto add_operator = [&](const std::vector<MultiPoly>& images) {
        std::map<Monomial, std::vector<Rat>, MonomialOrderDesc> rows;
        for (std::size_t idx = 0; idx < images.size(); ++idx)
            for (const auto& [m, c] : images[idx].terms()) {
                auto& row = rows[m];
                if (row.empty()) row.assign(ncand, Rat(0));
                row[idx] += c.as_rational();
            }
        for (auto& [m, row] : rows) equations.push_back(std::move(row));
    };

    const int d = static_cast<int>(spec.sizes.size());
    for (int s = 1; s <= d; ++s)
        for (int i = 1; i < spec.sizes[s - 1]; ++i)
            for (int j = i + 1; j <= spec.sizes[s - 1]; ++j) {
                std::vector<MultiPoly> left_images, right_images;
                for (const Monomial& m : cands) {
                    const MultiPoly p = MultiPoly::term(m, ParamField(Rat(1)));
                    left_images.push_back(left_raising(p, spec, s, i, j));
                    right_images.push_back(right_raising(p, spec, s, i, j));
                }
                add_operator(left_images);
                add_operator(right_images);
            }

    std::vector<WeilPoly> tildes;
    tildes.reserve(ncand);
    for (const Monomial& m : cands)
        tildes.push_back(
            build_P_tilde(MultiPoly::term(m, ParamField(Rat(1))), spec));
    int start = 1;
    for (int s = 0; s < d; ++s) {
        for (int i = start; i < start + spec.sizes[s]; ++i)
            for (int j = start; j < start + spec.sizes[s]; ++j) {
                std::vector<MultiPoly> images;
                for (const WeilPoly& t : tildes)
                    images.push_back(apply_pi_minus(t, i, j).body);
                add_operator(images);
            }
        start += spec.sizes[s];
    }

    const NullspaceResult<Rat> ns = nullspace<Rat>(equations, ncand);
    std::vector<VectorPoly> basis;
    for (const std::vector<Rat>& vec : ns.basis) {
        VectorPoly vp;
        for (std::size_t idx = 0; idx < ncand; ++idx)
            if (vec[idx] != 0) vp.hwv.add_term(cands[idx], ParamField(vec[idx]));
        attach_lowering_components(vp, spec);
        basis.push_back(std::move(vp));
    }
    return basis;
}

std::vector<VectorPoly> solve_condition_A_symbolic(
    const std::vector<int>& sizes, const std::vector<WeightPair>& weights) {
    int kmin = 1;
    for (const WeightPair& w : weights)
        kmin = std::max(kmin, partition_length(w.k) + partition_length(w.l));
    BlockSpec probe{sizes, kmin};
    validate_weights(probe, weights);
    const TorusWeight wanted = expected_torus_weight(probe, weights);
    const std::size_t ncand =
        candidate_monomials(wanted.left, wanted.right).size();
    const int points = static_cast<int>(ncand) + 1;
    HERMOP_DOMAIN_CHECK(kmin + points <= 9,
                        "candidate space too large for column-count interpolation");

    struct Sample {
        int kcols;
        std::vector<MultiPoly> hwvs;
    };
    std::vector<Sample> samples;
    for (int kc = kmin; kc <= kmin + points; ++kc) {
        std::vector<VectorPoly> sol = solve_condition_A({sizes, kc}, weights);
        Sample smp{kc, {}};
        for (VectorPoly& vp : sol) smp.hwvs.push_back(std::move(vp.hwv));
        samples.push_back(std::move(smp));
    }

    // Re-read coordinates against a common candidate list and normalize each
    // basis vector to leading coefficient one so that coordinates become
    // well-defined functions of the column count.
    const std::vector<Monomial> cands =
        candidate_monomials(wanted.left, wanted.right);
    const std::size_t dim = samples.front().hwvs.size();
    for (const Sample& smp : samples)
        HERMOP_DOMAIN_CHECK(smp.hwvs.size() == dim,
                            "solution dimension varies with the column count");
    // coords[sample][vecindex][candidate]
    std::vector<std::vector<std::vector<Rat>>> coords;
    std::vector<std::vector<std::size_t>> pivots;
    for (const Sample& smp : samples) {
        std::vector<std::vector<Rat>> vecs;
        std::vector<std::size_t> pivs;
        for (const MultiPoly& h : smp.hwvs) {
            std::vector<Rat> v(cands.size(), Rat(0));
            for (std::size_t idx = 0; idx < cands.size(); ++idx)
                v[idx] = h.coefficient(cands[idx]).as_rational();
            std::size_t piv = 0;
            while (piv < v.size() && v[piv] == 0) ++piv;
            HERMOP_DOMAIN_CHECK(piv < v.size(), "zero basis vector");
            for (std::size_t idx = v.size(); idx-- > 0;) v[idx] /= v[piv];
            pivs.push_back(piv);
            vecs.push_back(std::move(v));
        }
        // Sort by pivot for stable matching across samples.
        std::vector<std::size_t> order(vecs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivs[a] < pivs[b]; });
        std::vector<std::vector<Rat>> sorted_vecs;
        std::vector<std::size_t> sorted_pivs;
        for (std::size_t i : order) {
            sorted_vecs.push_back(std::move(vecs[i]));
            sorted_pivs.push_back(pivs[i]);
        }
        coords.push_back(std::move(sorted_vecs));
        pivots.push_back(std::move(sorted_pivs));
    }
    for (const auto& pivs : pivots)
        HERMOP_DOMAIN_CHECK(pivs == pivots.front(),
                            "solution structure varies with the column count");

    // Interpolate through all but the last sample; the last is the holdout.
    const std::size_t fit = samples.size() - 1;
    std::vector<Rat> xs;
    for (std::size_t p = 0; p < fit; ++p) xs.emplace_back(samples[p].kcols);
    std::vector<VectorPoly> out;
    BlockSpec comp_spec{sizes, kmin};
    for (std::size_t b = 0; b < dim; ++b) {
        VectorPoly vp;
        for (std::size_t idx = 0; idx < cands.size(); ++idx) {
            std::vector<Rat> ys;
            for (std::size_t p = 0; p < fit; ++p) ys.push_back(coords[p][b][idx]);
            const Poly2 poly = newton_interpolate(xs, ys);
            const Rat holdout =
                poly.eval(Rat(samples.back().kcols), Rat(0));
            HERMOP_DOMAIN_CHECK(
                holdout == coords.back()[b][idx],
                "coefficients do not interpolate as polynomials in the column count");
            if (!poly.is_zero()) vp.hwv.add_term(cands[idx], ParamField(poly));
        }
        attach_lowering_components(vp, comp_spec);
        out.push_back(std::move(vp));
    }
    return out;
}

} // namespace hermop
