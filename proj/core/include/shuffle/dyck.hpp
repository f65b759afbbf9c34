#pragma once

// Lattice-path combinatorics for the (km,kn) setting: Dyck paths with
// prescribed diagonal touchpoints, the sweep reading order on north steps,
// attacking pairs, the attacking path with its canonical marking, path
// statistics, and flagged parking-word enumeration.

#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace shuffle {

// Word over {N,E} from (0,0) to (a,b), staying weakly above the segment
// joining the endpoints.
struct DyckPath {
    int a = 0;
    int b = 0;
    std::string steps;

    bool operator==(const DyckPath&) const = default;
    bool operator<(const DyckPath& o) const {
        return std::tie(a, b, steps) < std::tie(o.a, o.b, o.steps);
    }
};

// Word over {N,E} from (0,r) to (d,d), staying weakly above the full
// (0,0)-(d,d) diagonal.  Prepending N^r gives an honest (d,d)-path; area
// and corners are read off that completion.
struct PartialDyckPath {
    int r = 0;
    int d = 0;
    std::string steps;

    bool operator==(const PartialDyckPath&) const = default;
    bool operator<(const PartialDyckPath& o) const {
        return std::tie(r, d, steps) < std::tie(o.r, o.d, o.steps);
    }
};

// Boxes are addressed by their northeast corner: (c, j) occupies
// [c-1,c] x [j-1,j], i.e. column c of row j.
using Box = std::pair<int, int>;
using Marking = std::set<Box>;

// strict_inc: values strictly increase going north along vertical runs;
// weak_dec: values weakly decrease going north along vertical runs.
enum class ParkKind { strict_inc, weak_dec };

// Values attached to the north steps of a DyckPath, in path order (from the
// southwest end of the step word).
struct ParkingWord {
    std::vector<int> values;
    ParkKind kind = ParkKind::strict_inc;

    bool operator==(const ParkingWord&) const = default;
};

struct PathStats {
    long area = 0;
    long dinv = 0;
    long maxtdinv = 0;
};

struct AttackingData {
    PartialDyckPath pihat;  // attacking path minus its first r north steps
    Marking sigma;          // consecutive-run pairs, as boxes of pihat
    std::vector<int> sweep;  // sweep[s] = north-step index (path order, 0-based)
                             // of the step with sweep number s+1
    std::vector<std::pair<int, int>> attacks;  // (i,j), i attacks j; 1-based
                                               // sweep numbers, i < j
    int r = 0;  // diagonal touchpoints strictly below the endpoint
};

enum class PfStat { dinv, tdinv, tdinv_prime };

bool is_dyck_path(const DyckPath& p);
bool is_partial_path(const PartialDyckPath& p);

// Southern endpoints (x, y) of the north steps, in path order.
std::vector<std::pair<int, int>> north_ends(const DyckPath& p);

// All (km,kn)-paths whose diagonal touchpoints are exactly the points
// (s m, s n) for s a partial sum of alpha (including 0 and k = |alpha|).
// Requires gcd(m,n) = 1 and every part of alpha positive.
std::vector<DyckPath> enum_paths(int m, int n, const std::vector<int>& alpha);

// area: full lattice squares between the path and the diagonal;
// maxtdinv: number of attacking pairs of north steps;
// dinv: pairs (east step e, north step f) with e starting strictly left of
// f and some line of slope n/m - epsilon meeting both.
PathStats path_stats(const DyckPath& p, int m, int n);

// Sweep numbering, attacking pairs, the attacking path (with its first r
// north steps removed) and the marking induced by consecutive north steps
// of p.  Throws std::logic_error if the attacking pairs fail to assemble
// into a lattice path.
AttackingData attacking_data(const DyckPath& p, int m, int n);

// Area of the N^r-prefixed completion.
long partial_area(const PartialDyckPath& p);

// Boxes weakly above the completed path whose south and east neighbours lie
// strictly below it.
std::vector<Box> corners(const PartialDyckPath& p);

// Boxes between the completed path and the diagonal: row j holds (c, j) for
// X_j < c <= j-1, with X_j the column of the north step in row j.
std::vector<Box> area_boxes(const PartialDyckPath& p);

// Flagged parking words on p with values in {1..value_bound}: the monotone
// condition of `kind` along vertical runs, and the value on the north step
// leaving the j-th diagonal touchpoint at most j.
std::vector<ParkingWord> enum_parking(const DyckPath& p,
                                      const std::vector<int>& alpha,
                                      ParkKind kind, int value_bound);

// Attacking pairs (i, j) weighted by the word: dinv counts w(i) < w(j),
// tdinv counts w(i) > w(j), tdinv_prime counts w(i) >= w(j).
long pf_dinv(const DyckPath& p, const ParkingWord& w, PfStat stat);

// Exponent vector of x^w over nvars variables: entry v-1 counts the north
// steps carrying the value v.
std::vector<int> park_content(const ParkingWord& w, int nvars);

}  // namespace shuffle
