#include "shuffle/xpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shuffle {

XPoly XPoly::monom(int N, Expo e, QT c) {
    if (static_cast<int>(e.size()) != N)
        throw std::invalid_argument("XPoly::monom: exponent length != N");
    XPoly f(N);
    if (!c.is_zero()) f.terms[std::move(e)] = std::move(c);
    return f;
}

XPoly XPoly::var(int N, int i, int power) {
    if (i < 1 || i > N) throw std::invalid_argument("XPoly::var: index out of range");
    Expo e(N, 0);
    e[i - 1] = power;
    return monom(N, std::move(e));
}

XPoly XPoly::constant(int N, QT c) { return monom(N, Expo(N, 0), std::move(c)); }

bool XPoly::is_polynomial() const {
    for (const auto& [e, c] : terms)
        for (int v : e)
            if (v < 0) return false;
    return true;
}

bool XPoly::is_homogeneous() const {
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        long s = 0;
        for (int v : e) s += v;
        if (first) {
            d = s;
            first = false;
        } else if (s != d) {
            return false;
        }
    }
    return true;
}

int XPoly::degree() const {
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        long s = 0;
        for (int v : e) s += v;
        if (first || s > d) d = s;
        first = false;
    }
    return static_cast<int>(d);
}

QT XPoly::coeff(const Expo& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? QT() : it->second;
}

void XPoly::add_term(const Expo& e, const QT& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

XPoly XPoly::operator+(const XPoly& o) const {
    if (N != o.N) throw std::invalid_argument("XPoly: mixed variable counts");
    XPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + (-o); }

XPoly XPoly::operator-() const {
    XPoly r(N);
    for (const auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    if (N != o.N) throw std::invalid_argument("XPoly: mixed variable counts");
    XPoly r(N);
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : o.terms) {
            Expo e(N);
            for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

XPoly XPoly::operator*(const QT& c) const {
    XPoly r(N);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms) r.terms[e] = v * c;
    return r;
}

bool XPoly::operator==(const XPoly& o) const { return N == o.N && terms == o.terms; }

XPoly XPoly::map_coeffs(const std::function<QT(const QT&)>& f) const {
    XPoly r(N);
    for (const auto& [e, c] : terms) {
        QT v = f(c);
        if (!v.is_zero()) r.terms[e] = v;
    }
    return r;
}

std::string XPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < N; ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

XPoly sym_to_xpoly(const SymFn& f, int N, int from) {
    if (from < 1 || from > N + 1)
        throw std::invalid_argument("sym_to_xpoly: bad variable range");
    int nvars = N - from + 1;
    XPoly out(N);
    for (const auto& [lam, c] : to_basis(f, 'm')) {
        if (static_cast<int>(lam.size()) > nvars) continue;
        std::vector<int> padded(nvars, 0);
        std::copy(lam.begin(), lam.end(), padded.begin());
        std::sort(padded.begin(), padded.end());
        do {
            Expo e(N, 0);
            for (int i = 0; i < nvars; ++i) e[from - 1 + i] = padded[i];
            out.add_term(e, c);
        } while (std::next_permutation(padded.begin(), padded.end()));
    }
    return out;
}

}  // namespace shuffle
