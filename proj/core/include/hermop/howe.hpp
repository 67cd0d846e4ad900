#pragma once

// Bookkeeping for the duality decomposition indexed by pairs of Young
// diagrams.  For a row count n and a concrete column count kappa, the index
// family consists of pairs D = (D1, D2) of partitions with
//
//     len(D1) <= n,  len(D2) <= n,  len(D1) + len(D2) <= kappa.
//
// sigma_map(D) gives the paired weight ((D1 padded to n) + kappa, D2 padded
// to n); lambda_map(D) gives the length-kappa column-group weight
// (D1, 0, ..., 0, -reverse(D2)).  The length constraint above is exactly
// what keeps lambda_map weakly decreasing.

#include <utility>
#include <vector>

#include "hermop/rational.hpp"

namespace hermop {

// Weakly decreasing list of strictly positive integers; empty means the
// trivial diagram.
using Partition = std::vector<int>;

// Weakly decreasing integer vector (entries may be negative).
using GLWeight = std::vector<int>;

struct YoungPair {
    Partition d1;
    Partition d2;
    int n = 1;     // row bound
    int kappa = 1; // column bound
};

void validate_partition(const Partition& p);
void validate_gl_weight(const GLWeight& w);
void validate_young_pair(const YoungPair& d);

int boxes(const Partition& p);

// All valid pairs with |D1| + |D2| <= max_boxes, ordered lexicographically
// by (D1, D2) as integer sequences.
std::vector<YoungPair> enumerate_delta(int n, int kappa, int max_boxes);

// (left, right): left = D1 padded with zeros to length n, plus kappa on
// every entry; right = D2 padded with zeros to length n.
std::pair<GLWeight, GLWeight> sigma_map(const YoungPair& d);

// Length-kappa weight (D1, 0, ..., 0, -reverse(D2)).
GLWeight lambda_map(const YoungPair& d);

// Negated reverse: the highest weight of the dual representation.
GLWeight contragredient(const GLWeight& w);

// True iff b is the negated reverse of a; lengths must match.
bool is_contragredient_pair(const GLWeight& a, const GLWeight& b);

// Weyl dimension formula prod_{i<j} (w_i - w_j + j - i)/(j - i), exact.
Int gl_dimension(const GLWeight& w);

} // namespace hermop
