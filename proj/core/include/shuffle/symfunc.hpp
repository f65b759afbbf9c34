#pragma once

// Symmetric functions over Q(q,t).
//
// Elements are stored in the power-sum basis (multiplicative, plethysm- and
// pairing-friendly); conversions to and from the monomial, complete, elementary
// and Schur bases go through cached per-degree transition data.  Plethysm
// follows the convention that q and t count as letters: p_k[A] substitutes
// q -> q^k, t -> t^k in coefficients and p_j -> p_{jk}.

#include <functional>
#include <map>

#include "shuffle/partition.hpp"
#include "shuffle/qt.hpp"

namespace shuffle {

struct SymFn {
    std::map<Partition, QT> p;  // partition -> coefficient of p_lambda, no zeros

    SymFn() = default;
    explicit SymFn(const QT& c) {
        if (!c.is_zero()) p[{}] = c;
    }

    static SymFn pk(int k);  // p_k, k >= 1

    bool is_zero() const { return p.empty(); }
    int degree() const;  // max |lambda| present; -1 for zero
    bool is_homogeneous() const;
    SymFn component(int d) const;

    SymFn operator+(const SymFn& o) const;
    SymFn operator-(const SymFn& o) const;
    SymFn operator*(const SymFn& o) const;
    SymFn operator*(const QT& c) const;
    SymFn operator-() const;
    SymFn& operator+=(const SymFn& o) { return *this = *this + o; }
    SymFn& operator-=(const SymFn& o) { return *this = *this - o; }
    bool operator==(const SymFn& o) const { return p == o.p; }
    bool operator!=(const SymFn& o) const { return p != o.p; }

    // apply a map to every coefficient (e.g. q,t inversion); not a plethysm
    SymFn map_coeffs(const std::function<QT(const QT&)>& f) const;
};

inline SymFn operator*(const QT& c, const SymFn& f) { return f * c; }

// standard elements
SymFn sym_h(int n);
SymFn sym_e(int n);
SymFn sym_h(const Partition& l);
SymFn sym_e(const Partition& l);
SymFn sym_p(const Partition& l);
SymFn sym_m(const Partition& l);
SymFn sym_s(const Partition& l);

// basis conversions; basis is one of 'm','h','e','p','s'
std::map<Partition, QT> to_basis(const SymFn& f, char basis);
SymFn from_basis(char basis, const std::map<Partition, QT>& coeffs);
std::string sym_str(const SymFn& f, char basis = 'm');

// Hall pairing: <p_l, p_l> = z_l
QT hall(const SymFn& a, const SymFn& b);
// Macdonald pairing: <p_l, p_l> = z_l prod_i (1-q^{l_i})/(1-t^{l_i})
QT qt_inner(const SymFn& a, const SymFn& b);

// omega involution: p_k -> (-1)^{k-1} p_k
SymFn omega(const SymFn& f);

// skew: Hall adjoint of multiplication by g
SymFn skew(const SymFn& g, const SymFn& f);

// plethysm f[a]
SymFn plethysm(const SymFn& f, const SymFn& a);

// f[x + X] = sum_j x^j g_j[X]; returns j -> g_j
std::map<int, SymFn> pleth_split(const SymFn& f);

// Jing vertex operator  B_n f = sum_{i>=0} (-1)^i h_{n+i}[(1-t)X] (e_i-perp f)
SymFn jing(int n, const SymFn& f);

// Macdonald bases (cached)
SymFn macd_P(const Partition& l);
SymFn macd_J(const Partition& l);
SymFn macd_Htilde(const Partition& l);

// nabla with H-tilde eigenvalue q^{n(l*)} t^{n(l)}; power may be negative
SymFn nabla_sym(const SymFn& f, long power = 1);

}  // namespace shuffle
