#pragma once

// Demazure/Hecke operator calculus on Laurent polynomials: isobaric divided
// differences pi_i and pihat_i, the Demazure-Lusztig operators T_i and their
// inverses, Demazure characters and atoms with exact expansion, polynomial
// truncation, Weyl symmetrization, and the variable-cycling twists.

#include <map>
#include <vector>

#include "shuffle/xpoly.hpp"

namespace shuffle {

enum class DDKind { pi, pihat, T, Tinv };
enum class KeyKind { character, atom };

// 1 <= i < N
XPoly divided_difference(DDKind kind, int i, const XPoly& f);
inline XPoly op_pi(int i, const XPoly& f) { return divided_difference(DDKind::pi, i, f); }
inline XPoly op_pihat(int i, const XPoly& f) { return divided_difference(DDKind::pihat, i, f); }
inline XPoly op_T(int i, const XPoly& f) { return divided_difference(DDKind::T, i, f); }
inline XPoly op_Tinv(int i, const XPoly& f) { return divided_difference(DDKind::Tinv, i, f); }

// permutations of {0..N-1} as image vectors: w[i] = destination of slot i,
// acting on compositions by (w . beta)[w[i]] = beta[i]
using Perm = std::vector<int>;

Perm perm_identity(int n);
int perm_length(const Perm& w);  // inversion count
Perm perm_mul(const Perm& u, const Perm& v);  // (u*v)[i] = u[v[i]]
std::vector<int> perm_apply(const Perm& w, const std::vector<int>& beta);

// minimal-length w with w . (alpha sorted decreasing) = alpha
Perm walpha(const std::vector<int>& alpha);

// Bruhat order on S_N (tableau criterion)
bool bruhat_leq(const Perm& u, const Perm& w);

// strict partial order used for triangularity: a < b iff a+ < b+ in strict
// dominance, or a+ = b+ and w_a > w_b strictly in Bruhat order
bool monomial_order_less(const std::vector<int>& a, const std::vector<int>& b);

// Demazure character D_alpha (kind=character) or atom A_alpha (kind=atom);
// alpha may have negative entries
XPoly key_polynomial(KeyKind kind, const std::vector<int>& alpha);

// exact finite expansion of f in characters or atoms
std::map<std::vector<int>, QT> key_expand(KeyKind kind, const XPoly& f);

// expand in Demazure characters of Z^r and keep only those indexed by N^r
XPoly pol_truncate(const XPoly& f, int r);

// pi_w for the longest element of the subgroup permuting x_a..x_N
XPoly weyl_symmetrize(const XPoly& f, int a);

// f(x_2, ..., x_N, q x_1)
XPoly twist_phi(const XPoly& f);
// f(x_2, ..., x_{r+1}, q x_1, x_{r+2}, ..., x_N)
XPoly twist_gamma(const XPoly& f, int r);

}  // namespace shuffle
