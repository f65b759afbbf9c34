#pragma once

// Almost-symmetric polynomials P(r) = Q(q,t)[x_1..x_r] (x) Lambda(x_{r+1},...):
// sparse sums of head monomials x^eta times symmetric functions in the tail
// alphabet, with inclusion to higher rank, truncation to finitely many
// variables, exact lifting back, stable Weyl symmetrization, and stable atoms.

#include <map>
#include <vector>

#include "shuffle/symfunc.hpp"
#include "shuffle/xpoly.hpp"

namespace shuffle {

struct AsymFn {
    int r = 0;
    std::map<std::vector<int>, SymFn> terms;  // eta in N^r -> nonzero tail

    AsymFn() = default;
    explicit AsymFn(int rank) : r(rank) {}
    static AsymFn from_sym(const SymFn& g, int rank = 0);  // g in the tail
    static AsymFn monom(int rank, std::vector<int> eta, SymFn tail = SymFn(QT(1)));

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // max |eta| + deg(tail); -1 for zero
    bool is_homogeneous() const;
    AsymFn component(int d) const;

    AsymFn operator+(const AsymFn& o) const;
    AsymFn operator-(const AsymFn& o) const;
    AsymFn operator*(const AsymFn& o) const;
    AsymFn operator*(const QT& c) const;
    AsymFn operator-() const;
    AsymFn& operator+=(const AsymFn& o) { return *this = *this + o; }
    AsymFn& operator-=(const AsymFn& o) { return *this = *this - o; }
    bool operator==(const AsymFn& o) const { return r == o.r && terms == o.terms; }
    bool operator!=(const AsymFn& o) const { return !(*this == o); }

    void add_term(const std::vector<int>& eta, const SymFn& g);
    AsymFn map_coeffs(const std::function<QT(const QT&)>& f) const;
    std::string str() const;
};

inline AsymFn operator*(const QT& c, const AsymFn& f) { return f * c; }

// inclusion P(r) -> P(r+1): split each tail over x_{r+1} + (new tail)
AsymFn iota(const AsymFn& f);

// evaluation in x_1..x_N (N >= r); sets x_{N+1} = ... = 0
XPoly truncate_asym(const AsymFn& f, int N);

// inverse of truncation: g must be symmetric in x_{r+1}..x_N with
// N >= r + deg of each homogeneous component (checked by a roundtrip)
AsymFn lift_asym(const XPoly& g, int r);

// stable Weyl symmetrization pi_r : P(r) -> P(r-1)
AsymFn stable_weyl(const AsymFn& f);

// stable atom indexed by (eta | lambda) at the given rank (default: len(eta));
// eta is padded with zeros up to the rank
AsymFn stable_atom(std::vector<int> eta, Partition la, int rank = -1);

// index (eta | lambda) with trailing zeros of eta stripped
using PairIndex = std::pair<std::vector<int>, Partition>;

// exact expansion into stable atoms; throws if the finite atom expansion does
// not group into tail orbit sums (input not in P(r))
std::map<PairIndex, QT> stable_atom_expand(const AsymFn& f);

}  // namespace shuffle
