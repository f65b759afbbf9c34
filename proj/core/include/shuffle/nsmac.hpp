#pragma once

// Nonsymmetric Macdonald polynomials.  Finite-variable E_beta are produced
// by an exact joint eigen-solve against explicitly constructed Cherednik
// operators; the integral forms scale them by an arm/leg product over the
// composition diagram, and the q-flipped variants feed a t-adic limit that
// the stable forms refine.  Stable integral forms stE_{eta|lambda} live in
// P(r) and are pinned exactly by their Y-eigenvalues together with the
// requirement that r-fold Hecke symmetrization lands on the integral form
// symmetric Macdonald polynomial; modified forms are their image under the
// r-nonsymmetric plethysm map.

#include <utility>
#include <vector>

#include "shuffle/asympoly.hpp"
#include "shuffle/partition.hpp"
#include "shuffle/qt.hpp"
#include "shuffle/xpoly.hpp"

namespace shuffle {

// arm/leg statistics of the diagram of a composition: row k holds beta_k
// boxes; the arm of a box counts boxes strictly to its right in its own
// row, the leg counts rows below that match the column and rows above that
// are one shorter at it (see diagram_boxes for the exact rule)
struct BoxData {
    std::vector<std::pair<int, int>> boxes;  // {arm, leg} per box
    // prod over boxes of (1 - q^{arm+1} t^{leg+1})
    QT clearing_factor() const;
};

BoxData diagram_boxes(const std::vector<int>& beta);

// finite Cherednik operator Y_i on polynomials in x_1..x_N (N = f.N):
// t^{i-N} T_i ... T_{N-1} w T_1^{-1} ... T_{i-1}^{-1}, where w is the
// rotation f(x_1,..,x_N) -> f(q x_N, x_1, .., x_{N-1})
XPoly cherednik_finite(int i, const XPoly& f);

// monic nonsymmetric Macdonald polynomial E_beta(x_1..x_N; q, t): the joint
// eigenfunction of Y_1..Y_N of the form x^beta plus strictly smaller terms.
// Throws std::runtime_error if the triangular eigen-solve degenerates.
XPoly E_nonsym(const std::vector<int>& beta, int N);

struct IntegralForms {
    XPoly E;       // clearing_factor * E_beta; coefficients lie in Z[q,t]
    XPoly Etilde;  // q^{n((beta+)*)} * E with q -> q^{-1} in coefficients
    BoxData boxes;
};
IntegralForms integral_forms(const std::vector<int>& beta, int N);

// partial Hecke symmetrizer over the variables x_k..x_N, normalized to fix
// polynomials that are already symmetric in those variables
XPoly hecke_symmetrize(const XPoly& f, int k);

// index (eta | lambda) with eta in N^r and lambda a partition
using NsMacIndex = PairIndex;

// Y_j eigenvalue of stE_{eta|lambda}: q^{eta_j} t^{r + l(lambda) + 1 - s_j}
// where s is the standardization of the concatenated word (eta; lambda)
// (smallest letters relabeled 1,2,.. left to right, then the next smallest,
// and so on); zero when j > r or eta_j = 0
QT stable_eigenvalue(const NsMacIndex& idx, int j);

// integral form stable r-nonsymmetric Macdonald polynomial: the unique
// element of P(r) in its degree with Y_j f = stable_eigenvalue(idx, j) f
// for j = 1..r whose r-fold d_- image is q^{n(mu*)} J_mu(x; q^{-1}, t) for
// mu the partition rearrangement of (eta; lambda)
AsymFn stable_E(const NsMacIndex& idx);

// modified r-nonsymmetric Macdonald polynomial Pi_r(stable_E)
AsymFn modified_E(const NsMacIndex& idx);

}  // namespace shuffle
