#pragma once

// Sparse Laurent polynomials in x_1..x_N with coefficients in Q(q,t).

#include <map>
#include <string>
#include <vector>

#include "shuffle/qt.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

using Expo = std::vector<int>;  // length-N exponent vector, entries may be < 0

struct XPoly {
    int N = 0;
    std::map<Expo, QT> terms;  // no zero coefficients

    XPoly() = default;
    explicit XPoly(int n) : N(n) {}

    static XPoly monom(int N, Expo e, QT c = QT(1));
    static XPoly var(int N, int i, int power = 1);  // x_i^power, i is 1-based
    static XPoly constant(int N, QT c);

    bool is_zero() const { return terms.empty(); }
    bool is_polynomial() const;  // all exponents nonnegative
    bool is_homogeneous() const;
    int degree() const;  // max total exponent; 0 for the zero polynomial
    QT coeff(const Expo& e) const;

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const QT& c) const;
    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
    bool operator==(const XPoly& o) const;
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    void add_term(const Expo& e, const QT& c);  // accumulate, dropping zeros
    XPoly map_coeffs(const std::function<QT(const QT&)>& f) const;
    std::string str() const;
};

inline XPoly operator*(const QT& c, const XPoly& f) { return f * c; }

// expansion of a symmetric function in the variables x_from..x_N (monomial
// basis); terms needing more variables than available vanish
XPoly sym_to_xpoly(const SymFn& f, int N, int from = 1);

}  // namespace shuffle
