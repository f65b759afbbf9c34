#include "shuffle/keypoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace shuffle {

namespace {

long expo_sum(const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

std::vector<int> sorted_desc_full(std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    return a;
}

}  // namespace

XPoly divided_difference(DDKind kind, int i, const XPoly& f) {
    if (i < 1 || i >= f.N)
        throw std::invalid_argument("divided_difference: index out of range");
    if (kind == DDKind::Tinv) {
        // (T_i - 1)(T_i + t) = 0  =>  T_i^{-1} = t^{-1} T_i - t^{-1}(1-t)
        QT tinv = QT::t().inv();
        return divided_difference(DDKind::T, i, f) * tinv - f * (tinv * (QT(1) - QT::t()));
    }
    int p = i - 1, s = i;  // 0-based adjacent slots
    QT one_minus_t = QT(1) - QT::t();
    XPoly r(f.N);
    for (const auto& [e, c] : f.terms) {
        int a = e[p], b = e[s];
        Expo g = e;
        auto emit = [&](int ei, int es, const QT& v) {
            g[p] = ei;
            g[s] = es;
            r.add_term(g, v);
        };
        switch (kind) {
            case DDKind::pi:
            case DDKind::pihat:
                // pi_i x^a y^b = sum_{j=b}^{a} x^j y^{a+b-j} (a >= b),
                // 0 (b = a+1), -sum_{j=a+1}^{b-1} (b > a+1)
                if (a >= b)
                    for (int j = b; j <= a; ++j) emit(j, a + b - j, c);
                else
                    for (int j = a + 1; j <= b - 1; ++j) emit(j, a + b - j, -c);
                if (kind == DDKind::pihat) emit(a, b, -c);
                break;
            case DDKind::T:
                // T_i = s_i + (1-t) x_i (1 - s_i)/(x_i - x_{i+1})
                emit(b, a, c);
                if (a > b)
                    for (int j = b + 1; j <= a; ++j) emit(j, a + b - j, one_minus_t * c);
                else if (a < b)
                    for (int j = a + 1; j <= b; ++j) emit(j, a + b - j, -(one_minus_t * c));
                break;
            case DDKind::Tinv:
                break;  // handled above
        }
    }
    return r;
}

Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

int perm_length(const Perm& w) {
    int n = w.size(), inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Perm perm_mul(const Perm& u, const Perm& v) {
    Perm r(u.size());
    for (size_t i = 0; i < u.size(); ++i) r[i] = u[v[i]];
    return r;
}

std::vector<int> perm_apply(const Perm& w, const std::vector<int>& beta) {
    std::vector<int> r(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) r[w[i]] = beta[i];
    return r;
}

Perm walpha(const std::vector<int>& alpha) {
    int n = alpha.size();
    // stable sort of positions by value descending; the i-th sorted entry of
    // alpha+ lands at that position, giving the minimal-length w
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return alpha[x] > alpha[y]; });
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = order[i];
    return w;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
    if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    int n = u.size();
    std::vector<int> su, sw;
    su.reserve(n);
    sw.reserve(n);
    for (int k = 0; k < n; ++k) {
        su.insert(std::upper_bound(su.begin(), su.end(), u[k]), u[k]);
        sw.insert(std::upper_bound(sw.begin(), sw.end(), w[k]), w[k]);
        for (int j = 0; j <= k; ++j)
            if (su[j] > sw[j]) return false;
    }
    return true;
}

bool monomial_order_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || expo_sum(a) != expo_sum(b))
        throw std::invalid_argument("monomial_order_less: size or degree mismatch");
    std::vector<int> as = sorted_desc_full(a), bs = sorted_desc_full(b);
    if (as != bs) {
        // strict dominance a+ < b+
        long pa = 0, pb = 0;
        for (size_t i = 0; i < as.size(); ++i) {
            pa += as[i];
            pb += bs[i];
            if (pa > pb) return false;
        }
        return true;
    }
    Perm wa = walpha(a), wb = walpha(b);
    return wa != wb && bruhat_leq(wb, wa);
}

XPoly key_polynomial(KeyKind kind, const std::vector<int>& alpha) {
    int n = alpha.size();
    for (int i = 0; i + 1 < n; ++i) {
        if (alpha[i] < alpha[i + 1]) {
            std::vector<int> beta = alpha;
            std::swap(beta[i], beta[i + 1]);
            XPoly rec = key_polynomial(kind, beta);
            return divided_difference(
                kind == KeyKind::character ? DDKind::pi : DDKind::pihat, i + 1, rec);
        }
    }
    return XPoly::monom(n, alpha);
}

namespace {

void key_expand_homog(KeyKind kind, const XPoly& f,
                      std::map<std::vector<int>, QT>& out) {
    if (f.is_zero()) return;
    // all exponents stay inside the bounding box of the initial support (key
    // polynomials live in the permutohedron of their index), so a box count
    // bounds the distinct monomials; square it as the runaway guard
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms)
        for (int v : e) {
            if (first || v < lo) lo = v;
            if (first || v > hi) hi = v;
            first = false;
        }
    double box = std::pow(static_cast<double>(hi - lo + 1),
                          std::max(1, f.N - 1));
    unsigned long guard = box > 3e7 ? 1000000000UL
                                    : static_cast<unsigned long>(box * box) + 16;
    XPoly rem = f;
    unsigned long steps = 0;
    while (!rem.is_zero()) {
        if (++steps > guard)
            throw std::runtime_error("key_expand: iteration guard exceeded");
        const Expo* best = nullptr;
        for (const auto& [e, c] : rem.terms) {
            bool dominated = false;
            for (const auto& [e2, c2] : rem.terms)
                if (e != e2 && monomial_order_less(e, e2)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                best = &e;
                break;
            }
        }
        if (!best) throw std::runtime_error("key_expand: no maximal term (order bug)");
        Expo idx = *best;
        QT c = rem.terms.at(idx);
        auto it = out.find(idx);
        if (it == out.end())
            out[idx] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
        rem -= key_polynomial(kind, idx) * c;
    }
}

}  // namespace

std::map<std::vector<int>, QT> key_expand(KeyKind kind, const XPoly& f) {
    std::map<std::vector<int>, QT> out;
    // the triangularity order compares exponents of equal total degree only,
    // so split into homogeneous components first
    std::map<long, XPoly> comps;
    for (const auto& [e, c] : f.terms) {
        auto [it, fresh] = comps.try_emplace(expo_sum(e), f.N);
        it->second.terms[e] = c;
    }
    for (const auto& [d, g] : comps) key_expand_homog(kind, g, out);
    return out;
}

XPoly pol_truncate(const XPoly& f, int r) {
    if (f.N != r) throw std::invalid_argument("pol_truncate: rank != variable count");
    XPoly out(r);
    for (const auto& [alpha, c] : key_expand(KeyKind::character, f)) {
        if (std::any_of(alpha.begin(), alpha.end(), [](int v) { return v < 0; }))
            continue;
        out += key_polynomial(KeyKind::character, alpha) * c;
    }
    return out;
}

XPoly weyl_symmetrize(const XPoly& f, int a) {
    if (a < 1 || a > f.N) throw std::invalid_argument("weyl_symmetrize: bad range");
    // bubble passes: the applied word's Demazure product is the longest
    // element of the subgroup, and idempotent pi's absorb surplus letters
    XPoly g = f;
    for (int pass = a; pass < f.N; ++pass)
        for (int i = a; i < f.N; ++i) g = op_pi(i, g);
    return g;
}

XPoly twist_phi(const XPoly& f) {
    XPoly r(f.N);
    for (const auto& [e, c] : f.terms) {
        Expo g(f.N);
        g[0] = e[f.N - 1];
        for (int i = 1; i < f.N; ++i) g[i] = e[i - 1];
        r.add_term(g, c * QT::q(e[f.N - 1]));
    }
    return r;
}

XPoly twist_gamma(const XPoly& f, int r) {
    if (r < 0 || r + 1 > f.N) throw std::invalid_argument("twist_gamma: bad rank");
    XPoly out(f.N);
    for (const auto& [e, c] : f.terms) {
        Expo g = e;
        g[0] = e[r];
        for (int i = 1; i <= r; ++i) g[i] = e[i - 1];
        out.add_term(g, c * QT::q(e[r]));
    }
    return out;
}

}  // namespace shuffle
