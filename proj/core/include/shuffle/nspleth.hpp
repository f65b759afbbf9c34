#pragma once

// The r-nonsymmetric plethysm map Pi_r on P(r), the flagged and
// signed-flagged h-bases it is defined on, and the nonsymmetric
// compositional Hall-Littlewood polynomials C_alpha.

#include <vector>

#include "shuffle/asympoly.hpp"
#include "shuffle/partition.hpp"

namespace shuffle {

struct FlaggedHIndex {
    std::vector<int> eta;  // in N^r
    Partition lambda;
    bool sign = false;  // signed family
};

// unsigned: h_{eta_1}(x_1) h_{eta_2}(x_1,x_2) ... h_{eta_r}(x_1..x_r) h_lambda(x)
// signed:   h_{eta_1}(x_1) h_{eta_2}[x_2+(1-t)x_1] ... h_{eta_r}[x_r+(1-t)(x_1+..+x_{r-1})]
//           times h_lambda[(1-t)x]
// each family is a graded basis of P(r)
AsymFn flagged_h(const FlaggedHIndex& idx);

// Pi_r sends each signed basis element to its unsigned partner (fwd); the
// inverse direction reverses that. Computed by a graded linear solve with
// the transition matrices memoized per (rank, degree).
AsymFn pi_r(const AsymFn& f, bool inverse = false);

// C_alpha = (-t)^{|alpha|-r} Pi_r(x^alpha); alpha must have all parts >= 1
AsymFn comp_hl(const std::vector<int>& alpha);

// direct evaluation of Pi_r: multiply each head by the geometric series of
// the ratios t x_i/x_j (i < j) truncated at the given order per ratio, apply
// pol, and substitute x -> x/(1-t) into the tail. Cross-check for pi_r; the
// order must be generous enough for the truncation to be exact.
AsymFn pi_r_series(const AsymFn& f, int order);

}  // namespace shuffle
