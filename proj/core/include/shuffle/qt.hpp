#pragma once

// Exact arithmetic in the field Q(q,t) of rational functions in two variables.
//
// Elements are kept as reduced fractions num/den of sparse Laurent-free integer
// polynomials with a canonical normalization, so that equality is plain
// structural comparison and coefficients never drift.  Canonical form:
//   * num and den are honest polynomials (all exponents >= 0),
//   * not both divisible by q, not both divisible by t,
//   * gcd(num, den) = 1 in Z[q,t] (including integer content),
//   * den's lexicographically-leading coefficient (highest q, then t) positive.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shuffle {

using ZZ = mpz_class;

// Sparse integer Laurent polynomial in q and t.
struct PolyQT {
    // (q exponent, t exponent) -> nonzero coefficient
    std::map<std::pair<int, int>, ZZ> terms;

    PolyQT() = default;
    explicit PolyQT(long c) { if (c != 0) terms[{0, 0}] = c; }
    explicit PolyQT(const ZZ& c) { if (c != 0) terms[{0, 0}] = c; }

    static PolyQT monom(ZZ c, int qe, int te);

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;

    PolyQT operator+(const PolyQT& o) const;
    PolyQT operator-(const PolyQT& o) const;
    PolyQT operator*(const PolyQT& o) const;
    PolyQT operator-() const;
    bool operator==(const PolyQT& o) const { return terms == o.terms; }
    bool operator!=(const PolyQT& o) const { return terms != o.terms; }

    int min_q() const;  // minimum q exponent (0 for the zero polynomial)
    int min_t() const;
    int max_q() const;
    int max_t() const;

    // Multiply by q^dq * t^dt (exponent shift; may create Laurent terms).
    PolyQT shifted(int dq, int dt) const;
    PolyQT flip_q() const;  // q -> q^{-1}
    PolyQT flip_t() const;  // t -> t^{-1}
    PolyQT frob(int k) const;  // q -> q^k, t -> t^k  (k >= 1)

    // gcd of all coefficients, >= 0; 0 for the zero polynomial.
    ZZ content() const;

    std::string str() const;
};

// gcd in Z[q,t] of two honest polynomials (integer content included);
// normalized so its lexicographically-leading coefficient is positive.
PolyQT gcd_poly(const PolyQT& a, const PolyQT& b);

// Exact division; throws std::logic_error if the division is not exact.
PolyQT div_exact(const PolyQT& f, const PolyQT& g);

class QT {
  public:
    QT() : num_(), den_(1) {}
    QT(long c) : num_(c), den_(1) {}
    QT(const ZZ& c) : num_(c), den_(1) {}
    explicit QT(PolyQT n) : num_(std::move(n)), den_(1) { reduce(); }
    QT(PolyQT n, PolyQT d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static QT q(int e = 1) { return QT(PolyQT::monom(1, e, 0), PolyQT(1)); }
    static QT t(int e = 1) { return QT(PolyQT::monom(1, 0, e), PolyQT(1)); }
    static QT monom(long c, int qe, int te) {
        return QT(PolyQT::monom(c, qe, te), PolyQT(1));
    }
    // (a + b*q) style helper for rational constants
    static QT ratio(long num, long den) { return QT(PolyQT(num), PolyQT(den)); }

    const PolyQT& num() const { return num_; }
    const PolyQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const;

    QT operator+(const QT& o) const;
    QT operator-(const QT& o) const;
    QT operator*(const QT& o) const;
    QT operator/(const QT& o) const;
    QT operator-() const;
    QT& operator+=(const QT& o) { return *this = *this + o; }
    QT& operator-=(const QT& o) { return *this = *this - o; }
    QT& operator*=(const QT& o) { return *this = *this * o; }
    QT& operator/=(const QT& o) { return *this = *this / o; }
    bool operator==(const QT& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QT& o) const { return !(*this == o); }
    // arbitrary strict total order, for use as map keys
    bool operator<(const QT& o) const;

    QT inv() const;
    QT pow(long e) const;

    QT flip() const;    // q -> q^{-1}, t -> t^{-1}
    QT flip_q() const;  // q -> q^{-1}
    QT flip_t() const;  // t -> t^{-1}
    QT frob(int k) const;  // q -> q^k, t -> t^k

    // Order of vanishing at t = 0 of the Laurent expansion in t
    // (min t-exponent of num minus min t-exponent of den).
    // Returns t_order_infinite for the zero element.
    static constexpr int t_order_infinite = 1 << 30;
    int t_order() const;

    // Laurent expansion at t = 0: coefficients of t^{ord}, t^{ord+1}, ...,
    // t^{ord+count-1} as elements of Q(q) (returned as t-free QT values).
    // first = ord (t_order()).  For zero input: {t_order_infinite, {}}.
    std::pair<int, std::vector<QT>> t_series(int count) const;

    // Evaluate at rational points (den must not vanish there).
    mpq_class eval(const mpq_class& qv, const mpq_class& tv) const;

    std::string str() const;

  private:
    PolyQT num_, den_;
    void reduce();
};

inline QT operator*(long c, const QT& x) { return QT(c) * x; }

}  // namespace shuffle
