#pragma once

// Flagged LLT polynomials attached to a marked partial Dyck path, in row and
// column flavors, signed and unsigned; the operator words in d_+ and d_-
// whose action on 1 produces the signed versions; LLT polynomials of tuples
// of skew shapes over the super alphabet; and the dictionary sending a
// marked path to a tuple of rows and a tuple of columns.

#include <utility>
#include <vector>

#include "shuffle/asympoly.hpp"
#include "shuffle/ddpa.hpp"
#include "shuffle/dyck.hpp"

namespace shuffle {

enum class LLTMode { row, col };

// Sum over flagged words T on the rows of the N^r completion of p, weighted
// by t^inv.  Words assign letters to rows 1..d; rows i <= r are capped at i.
// Unsigned words use positive letters only; signed words draw from the
// super alphabet 1 < 1bar < 2 < 2bar < ..., a barred letter of magnitude v
// contributing x_v and a factor (-t) in row mode, (-t)^{-1} in column mode.
// Marked boxes force the monotone condition of the mode on their two rows,
// and inv counts the area boxes satisfying it.  Letters are enumerated with
// magnitude at most nvars, which must be at least r + d so the truncation
// determines the stable polynomial; the result is the rank-r lift.  With
// nonattacking set, the sum keeps only words whose letters have distinct
// magnitudes on every area pair.
AsymFn llt_flagged(LLTMode mode, bool sgn, const PartialDyckPath& p,
                   const Marking& sigma, int nvars, bool nonattacking = false);

// Operator word read off the steps of p from the northeast end (first step
// visited acts first on 1 in rank 0).  Row mode: d_- per north step, -d_+
// per east step, and (d_+ d_- - d_- d_+)/(t-1) per marked corner.  Column
// mode scales each east step by t^{-r} with r = h - v counting the steps
// already visited, and a marked corner contributes the two orders of
// traversing its east and north steps, weighted as in row mode but with
// 1/(t^{-1}-1) in place of 1/(t-1).  Marked corners expand the word into a
// sum, one branch per choice of order at each corner.  Evaluating on 1
// gives the signed flagged LLT polynomial of the same marking: in row mode
// on the nose, in column mode after t -> t^{-1}.
OpSum chi_word(LLTMode mode, const PartialDyckPath& p, const Marking& sigma);

// Rows j = 1..beta.size() hold boxes with northeast corners (i, j) for
// alpha[j-1] < i <= beta[j-1]; both vectors weakly decreasing, entries may
// be negative.  A box in row j, column i of the k-th shape of a tuple has
// adjusted content i - j + k*epsilon; reading order is by adjusted content,
// southwest to northeast on ties.
struct SkewShape {
    std::vector<int> beta;
    std::vector<int> alpha;

    bool operator==(const SkewShape&) const = default;
};

using SkewTuple = std::vector<SkewShape>;

// Sum over super tableaux on nu: entries weakly increase along rows and up
// columns, equal positive letters may not sit in a column nor equal negative
// letters in a row.  The r last eastern-end-of-row boxes in reading order
// are capped at 1..r, the last one at 1.  An attacking pair is an ordered
// pair of boxes whose adjusted contents differ by strictly between 0 and 1;
// inv counts attacking pairs on which the tableau is column-decreasing.
// Unsigned keeps positive entries with weight t^inv; signed weights a
// tableau by t^inv (-t)^{-m} with m its number of barred entries.
AsymFn llt_tuple(int r, const SkewTuple& nu, bool sgn);

// The tuple of single-row shapes whose attacking pairs mirror the area
// boxes of the completion of p and whose horizontal dominoes mirror sigma,
// together with the tuple of single-column shapes occupying the same
// contents shape by shape.  Built from the north-step runs of the unique
// (d,d)-path whose attack structure is the completion of p, breaking a run
// between the two boxes of each unmarked corner, then reversing the tuple
// and negating each shape.  Both dictionary statements are checked, as is
// the alignment of the last p.r reading-order boxes with eastern ends;
// violations throw std::logic_error.
std::pair<SkewTuple, SkewTuple> path_to_tuples(const PartialDyckPath& p,
                                               const Marking& sigma);

// The path with the east and north steps of the given corner interchanged,
// removing that corner while leaving the rest of the marking valid.
PartialDyckPath flip_corner(const PartialDyckPath& p, const Box& corner);

}  // namespace shuffle
