#pragma once

// Equivariant harmonic solutions over a row-block decomposition.
//
// Data: block sizes n_1 >= ... >= n_d >= 1 with n = sum n_s, a concrete
// column count kcols, and per-block weight pairs (k_s; l_s) of partitions.
// A polynomial P in the n x n matrix entries T_{ij} is a solution when
//
//   (1) P~ = P(X tY) is pluriharmonic within every row block, and
//   (2) P is equivariant of weight (k_s; l_s) under the block-diagonal
//       left/right matrix actions T -> A T tB.
//
// Condition (2) is checked infinitesimally: the torus weight (row and
// column degree vectors) must match the padded weights, and the
// highest-weight component must be annihilated by the weight-raising
// operators of every block.  The solver assembles the finite candidate
// monomial space forced by the torus weights and extracts the exact
// rational nullspace of all constraints.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermop/multipoly.hpp"
#include "hermop/weil.hpp"

namespace hermop {

struct BlockSpec {
    std::vector<int> sizes; // n_1 >= ... >= n_d >= 1
    int kcols = 1;          // concrete column count
    int n() const;
};

// Partitions k (row weight) and l (column weight) for one block; entries
// weakly decreasing and nonnegative, trailing zeros allowed.
struct WeightPair {
    std::vector<int> k;
    std::vector<int> l;
};

// A vector-valued solution represented by its highest-weight component;
// further components are generated by the recorded lowering operators,
// keyed by labels such as "L2:1->2" (left factor of block 2, row 1 to 2)
// and "R1:1->3" (right factor of block 1).
struct VectorPoly {
    MultiPoly hwv;
    std::map<std::string, MultiPoly> generated_components;
};

struct TorusWeight {
    std::vector<int> left;  // row degrees, length n
    std::vector<int> right; // column degrees, length n
};

void validate_block_spec(const BlockSpec& spec);

// Checks weight shapes against the spec: number of pairs equals the number
// of blocks, nonzero lengths bounded by the smallest block size, and
// len(k_s) + len(l_s) <= kcols for every block.
void validate_weights(const BlockSpec& spec, const std::vector<WeightPair>& weights);

// Expected torus weight: per-block partitions padded with zeros to the
// block sizes and concatenated.
TorusWeight expected_torus_weight(const BlockSpec& spec,
                                  const std::vector<WeightPair>& weights);

// P~ : substitutes every T_{ij} by the pairing sum_a X_{i,a} Y_{j,a}.
WeilPoly build_P_tilde(const MultiPoly& p, const BlockSpec& spec);

// Row/column degree vectors when all monomials share them; throws
// domain_error naming an offending monomial pair otherwise (and for the
// zero polynomial, which has no weight).
TorusWeight torus_weight(const MultiPoly& p, const BlockSpec& spec);

// Infinitesimal block actions on the highest-weight component; (i, j) are
// local indices with 1 <= i < j <= n_s.  Raising operators annihilate a
// highest-weight component, lowering operators generate the others.
MultiPoly left_raising(const MultiPoly& p, const BlockSpec& spec, int block,
                       int i, int j);
MultiPoly right_raising(const MultiPoly& p, const BlockSpec& spec, int block,
                        int i, int j);
MultiPoly left_lowering(const MultiPoly& p, const BlockSpec& spec, int block,
                        int i, int j);
MultiPoly right_lowering(const MultiPoly& p, const BlockSpec& spec, int block,
                         int i, int j);

bool check_equivariance(const VectorPoly& p, const BlockSpec& spec,
                        const std::vector<WeightPair>& weights);

// Basis of the full solution space (empty when no solution exists; invalid
// inputs throw domain_error).  Basis vectors carry first-order lowering
// components and are normalized to primitive integer coefficient vectors
// with positive leading coefficient in graded-lex order.
std::vector<VectorPoly> solve_condition_A(const BlockSpec& spec,
                                          const std::vector<WeightPair>& weights);

// Solution basis with coefficients polynomial in the symbol k (the column
// count): solves at several concrete counts, interpolates, and verifies at
// a holdout count.  Throws domain_error when the solution structure varies
// with the count or the coefficients fail to interpolate.
std::vector<VectorPoly> solve_condition_A_symbolic(
    const std::vector<int>& sizes, const std::vector<WeightPair>& weights);

} // namespace hermop
