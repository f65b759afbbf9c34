#include "shuffle/qt.hpp"

#include <algorithm>
#include <sstream>

namespace shuffle {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate Z[t] layer used by the polynomial gcd.
// ---------------------------------------------------------------------------

using UP = std::vector<ZZ>;  // c[i] = coefficient of t^i, no trailing zeros

void up_trim(UP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int up_deg(const UP& a) { return static_cast<int>(a.size()) - 1; }

UP up_sub(const UP& a, const UP& b) {
    UP r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    up_trim(r);
    return r;
}

UP up_mul_z(const UP& a, const ZZ& c) {
    if (c == 0) return {};
    UP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

UP up_mul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    up_trim(r);
    return r;
}

UP up_shift(const UP& a, int k) {
    if (a.empty()) return {};
    UP r(a.size() + k);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

ZZ up_content(const UP& a) {
    ZZ g = 0;
    for (const ZZ& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // >= 0 by mpz_gcd convention
}

UP up_div_exact_z(const UP& a, const ZZ& c) {
    UP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        ZZ rem;
        mpz_fdiv_qr(r[i].get_mpz_t(), rem.get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw std::logic_error("up_div_exact_z: not divisible");
    }
    return r;
}

// primitive part with positive leading coefficient; zero stays zero
UP up_pp(const UP& a) {
    if (a.empty()) return {};
    ZZ c = up_content(a);
    if (a.back() < 0) c = -c;
    return up_div_exact_z(a, c);
}

// pseudo-remainder of a by b (b nonzero), up to integer factors
UP up_prem(UP a, const UP& b) {
    const ZZ lb = b.back();
    while (!a.empty() && up_deg(a) >= up_deg(b)) {
        int k = up_deg(a) - up_deg(b);
        a = up_sub(up_mul_z(a, lb), up_shift(up_mul_z(b, a.back()), k));
    }
    return a;
}

UP up_gcd(UP a, UP b) {
    up_trim(a);
    up_trim(b);
    if (a.empty()) return up_mul_z(up_pp(b), up_content(b));
    if (b.empty()) return up_mul_z(up_pp(a), up_content(a));
    ZZ g0;
    mpz_gcd(g0.get_mpz_t(), up_content(a).get_mpz_t(), up_content(b).get_mpz_t());
    a = up_pp(a);
    b = up_pp(b);
    while (!b.empty()) {
        UP r = up_prem(a, b);
        a = std::move(b);
        b = up_pp(r);
    }
    return up_mul_z(up_pp(a), g0);
}

UP up_div_exact(const UP& a, const UP& b) {
    if (b.empty()) throw std::logic_error("up_div_exact: division by zero");
    UP rem = a;
    up_trim(rem);
    UP quot(rem.size());
    while (!rem.empty() && up_deg(rem) >= up_deg(b)) {
        int k = up_deg(rem) - up_deg(b);
        ZZ c, r;
        mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (r != 0) throw std::logic_error("up_div_exact: not divisible");
        quot.resize(std::max(quot.size(), static_cast<size_t>(k + 1)));
        quot[k] = c;
        rem = up_sub(rem, up_shift(up_mul_z(b, c), k));
    }
    if (!rem.empty()) throw std::logic_error("up_div_exact: nonzero remainder");
    up_trim(quot);
    return quot;
}

// ---------------------------------------------------------------------------
// Bivariate layer: polynomial in q with Z[t] coefficients.
// ---------------------------------------------------------------------------

using BP = std::map<int, UP>;  // q exponent -> nonzero Z[t] coefficient

BP to_bp(const PolyQT& p) {
    BP r;
    for (const auto& [key, c] : p.terms) {
        auto [qe, te] = key;
        if (qe < 0 || te < 0) throw std::logic_error("to_bp: Laurent input");
        UP& u = r[qe];
        if (up_deg(u) < te) u.resize(te + 1);
        u[te] = c;
    }
    return r;
}

PolyQT from_bp(const BP& b) {
    PolyQT r;
    for (const auto& [qe, u] : b)
        for (size_t te = 0; te < u.size(); ++te)
            if (u[te] != 0) r.terms[{qe, static_cast<int>(te)}] = u[te];
    return r;
}

int bp_deg(const BP& a) { return a.empty() ? -1 : a.rbegin()->first; }

BP bp_mul_up(const BP& a, const UP& u) {
    BP r;
    if (u.empty()) return r;
    for (const auto& [qe, c] : a) {
        UP p = up_mul(c, u);
        if (!p.empty()) r[qe] = std::move(p);
    }
    return r;
}

BP bp_sub(const BP& a, const BP& b) {
    BP r = a;
    for (const auto& [qe, c] : b) {
        auto it = r.find(qe);
        if (it == r.end()) {
            r[qe] = up_sub({}, c);
        } else {
            it->second = up_sub(it->second, c);
            if (it->second.empty()) r.erase(it);
        }
    }
    return r;
}

BP bp_shift_q(const BP& a, int k) {
    BP r;
    for (const auto& [qe, c] : a) r[qe + k] = c;
    return r;
}

UP bp_content(const BP& a) {
    UP g;
    for (const auto& [qe, c] : a) g = up_gcd(g, c);
    return g;
}

BP bp_div_up(const BP& a, const UP& u) {
    BP r;
    for (const auto& [qe, c] : a) {
        UP d = up_div_exact(c, u);
        if (!d.empty()) r[qe] = std::move(d);
    }
    return r;
}

// primitive part with respect to q, sign-normalized so the
// (leading in q, then leading in t) coefficient is positive
BP bp_pp(const BP& a) {
    if (a.empty()) return a;
    UP c = bp_content(a);
    if (a.rbegin()->second.back() < 0) c = up_mul_z(c, ZZ(-1));
    return bp_div_up(a, c);
}

BP bp_prem(BP a, const BP& b) {
    const UP lb = b.rbegin()->second;
    while (!a.empty() && bp_deg(a) >= bp_deg(b)) {
        int k = bp_deg(a) - bp_deg(b);
        UP la = a.rbegin()->second;
        a = bp_sub(bp_mul_up(a, lb), bp_shift_q(bp_mul_up(b, la), k));
    }
    return a;
}

BP bp_gcd(BP a, BP b) {
    if (a.empty()) return b.empty() ? b : bp_mul_up(bp_pp(b), bp_content(b));
    if (b.empty()) return bp_mul_up(bp_pp(a), bp_content(a));
    UP gcont = up_gcd(bp_content(a), bp_content(b));
    a = bp_pp(a);
    b = bp_pp(b);
    while (!b.empty()) {
        BP r = bp_prem(a, b);
        a = std::move(b);
        b = bp_pp(r);
    }
    return bp_mul_up(bp_pp(a), gcont);
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyQT
// ---------------------------------------------------------------------------

PolyQT PolyQT::monom(ZZ c, int qe, int te) {
    PolyQT p;
    if (c != 0) p.terms[{qe, te}] = std::move(c);
    return p;
}

bool PolyQT::is_one() const {
    return terms.size() == 1 && terms.begin()->first == std::make_pair(0, 0) &&
           terms.begin()->second == 1;
}

PolyQT PolyQT::operator+(const PolyQT& o) const {
    PolyQT r = *this;
    for (const auto& [k, c] : o.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) {
            r.terms[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

PolyQT PolyQT::operator-(const PolyQT& o) const {
    PolyQT r = *this;
    for (const auto& [k, c] : o.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) {
            r.terms[k] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

PolyQT PolyQT::operator*(const PolyQT& o) const {
    PolyQT r;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : o.terms) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms.find(k);
            if (it == r.terms.end()) {
                ZZ v = ca * cb;
                if (v != 0) r.terms[k] = std::move(v);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

PolyQT PolyQT::operator-() const {
    PolyQT r;
    for (const auto& [k, c] : terms) r.terms[k] = -c;
    return r;
}

int PolyQT::min_q() const {
    if (terms.empty()) return 0;
    return terms.begin()->first.first;  // map is sorted by (q, t)
}

int PolyQT::max_q() const {
    if (terms.empty()) return 0;
    return terms.rbegin()->first.first;
}

int PolyQT::min_t() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (first || k.second < m) m = k.second;
        first = false;
    }
    return m;
}

int PolyQT::max_t() const {
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (first || k.second > m) m = k.second;
        first = false;
    }
    return m;
}

PolyQT PolyQT::shifted(int dq, int dt) const {
    PolyQT r;
    for (const auto& [k, c] : terms) r.terms[{k.first + dq, k.second + dt}] = c;
    return r;
}

PolyQT PolyQT::flip_q() const {
    PolyQT r;
    for (const auto& [k, c] : terms) r.terms[{-k.first, k.second}] = c;
    return r;
}

PolyQT PolyQT::flip_t() const {
    PolyQT r;
    for (const auto& [k, c] : terms) r.terms[{k.first, -k.second}] = c;
    return r;
}

PolyQT PolyQT::frob(int k) const {
    if (k < 1) throw std::invalid_argument("PolyQT::frob: k must be >= 1");
    PolyQT r;
    for (const auto& [key, c] : terms) r.terms[{key.first * k, key.second * k}] = c;
    return r;
}

ZZ PolyQT::content() const {
    ZZ g = 0;
    for (const auto& [k, c] : terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::string PolyQT::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        ZZ a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit) os << a.get_str();
        bool need_star = !unit;
        if (k.first != 0) {
            if (need_star) os << "*";
            os << "q";
            if (k.first != 1) os << "^" << k.first;
            need_star = true;
        }
        if (k.second != 0) {
            if (need_star) os << "*";
            os << "t";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

PolyQT gcd_poly(const PolyQT& a, const PolyQT& b) {
    return from_bp(bp_gcd(to_bp(a), to_bp(b)));
}

PolyQT div_exact(const PolyQT& f, const PolyQT& g) {
    if (g.is_zero()) throw std::logic_error("div_exact: division by zero");
    PolyQT rem = f, quot;
    const auto& ltg = *g.terms.rbegin();
    while (!rem.is_zero()) {
        const auto& ltr = *rem.terms.rbegin();
        int dq = ltr.first.first - ltg.first.first;
        int dt = ltr.first.second - ltg.first.second;
        ZZ c, r;
        mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), ltr.second.get_mpz_t(),
                    ltg.second.get_mpz_t());
        if (r != 0) throw std::logic_error("div_exact: not divisible");
        quot.terms[{dq, dt}] = c;
        rem = rem - g.shifted(dq, dt) * PolyQT(c);
    }
    return quot;
}

// ---------------------------------------------------------------------------
// QT
// ---------------------------------------------------------------------------

void QT::reduce() {
    if (den_.is_zero()) throw std::invalid_argument("QT: zero denominator");
    if (num_.is_zero()) {
        den_ = PolyQT(1);
        return;
    }
    int dq = std::min(num_.min_q(), den_.min_q());
    int dt = std::min(num_.min_t(), den_.min_t());
    if (dq != 0 || dt != 0) {
        num_ = num_.shifted(-dq, -dt);
        den_ = den_.shifted(-dq, -dt);
    }
    if (!den_.is_one()) {
        PolyQT g = gcd_poly(num_, den_);
        if (!g.is_one()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        if (den_.terms.rbegin()->second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    } else {
        // denominator 1: still normalize integer content sign conventions
        // (nothing to do; numerator is already canonical)
    }
}

bool QT::is_integer() const {
    if (!den_.is_one()) return false;
    if (num_.is_zero()) return true;
    return num_.terms.size() == 1 && num_.terms.begin()->first == std::make_pair(0, 0);
}

QT QT::operator+(const QT& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QT(num_ + o.num_, den_);
    return QT(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QT QT::operator-(const QT& o) const {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QT(num_ - o.num_, den_);
    return QT(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QT QT::operator*(const QT& o) const {
    if (is_zero() || o.is_zero()) return QT();
    return QT(num_ * o.num_, den_ * o.den_);
}

QT QT::operator/(const QT& o) const {
    if (o.is_zero()) throw std::invalid_argument("QT: division by zero");
    if (is_zero()) return QT();
    return QT(num_ * o.den_, den_ * o.num_);
}

QT QT::operator-() const {
    QT r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool QT::operator<(const QT& o) const {
    if (num_.terms != o.num_.terms) return num_.terms < o.num_.terms;
    return den_.terms < o.den_.terms;
}

QT QT::inv() const {
    if (is_zero()) throw std::invalid_argument("QT: inverse of zero");
    return QT(den_, num_);
}

QT QT::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QT r(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

QT QT::flip() const { return QT(num_.flip_q().flip_t(), den_.flip_q().flip_t()); }
QT QT::flip_q() const { return QT(num_.flip_q(), den_.flip_q()); }
QT QT::flip_t() const { return QT(num_.flip_t(), den_.flip_t()); }
QT QT::frob(int k) const { return QT(num_.frob(k), den_.frob(k)); }

int QT::t_order() const {
    if (is_zero()) return t_order_infinite;
    return num_.min_t() - den_.min_t();
}

std::pair<int, std::vector<QT>> QT::t_series(int count) const {
    if (is_zero()) return {t_order_infinite, {}};
    int ord = t_order();
    PolyQT n0 = num_.shifted(0, -num_.min_t());
    PolyQT d0 = den_.shifted(0, -den_.min_t());
    auto slice = [](const PolyQT& p, int j) {
        PolyQT s;
        for (const auto& [k, c] : p.terms)
            if (k.second == j) s.terms[{k.first, 0}] = c;
        return s;
    };
    QT dconst = QT(slice(d0, 0));
    std::vector<QT> cs(count);
    for (int k = 0; k < count; ++k) {
        QT acc = QT(slice(n0, k));
        for (int j = 0; j < k; ++j) acc -= cs[j] * QT(slice(d0, k - j));
        cs[k] = acc / dconst;
    }
    return {ord, cs};
}

mpq_class QT::eval(const mpq_class& qv, const mpq_class& tv) const {
    auto eval_poly = [&](const PolyQT& p) {
        mpq_class acc = 0;
        for (const auto& [k, c] : p.terms) {
            mpq_class term(c);
            for (int i = 0; i < k.first; ++i) term *= qv;
            for (int i = 0; i < k.second; ++i) term *= tv;
            acc += term;
        }
        return acc;
    };
    mpq_class dv = eval_poly(den_);
    if (dv == 0) throw std::invalid_argument("QT::eval: denominator vanishes");
    return eval_poly(num_) / dv;
}

std::string QT::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.terms.size() > 1) n = "(" + n + ")";
    if (den_.terms.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace shuffle
