#include "shuffle/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "shuffle/linalg.hpp"

namespace shuffle {

namespace {

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama characters via beta-sets.
// ---------------------------------------------------------------------------

using Beta = std::vector<int>;  // strictly decreasing beta numbers

Beta beta_of(const Partition& l) {
    int L = l.size();
    Beta b(L);
    for (int j = 0; j < L; ++j) b[j] = l[j] + (L - 1 - j);
    return b;
}

ZZ chi_rec(const Beta& b, const std::vector<int>& mu, size_t pos,
           std::map<std::pair<Beta, size_t>, ZZ>& memo) {
    if (pos == mu.size()) return 1;
    auto key = std::make_pair(b, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int k = mu[pos];
    ZZ total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        int nb = b[i] - k;
        if (nb < 0) continue;
        bool clash = false;
        int ht = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == nb) clash = true;
            if (b[j] > nb && b[j] < b[i]) ++ht;
        }
        if (clash) continue;
        Beta nbeta = b;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        ZZ sub = chi_rec(nbeta, mu, pos + 1, memo);
        if (ht % 2)
            total -= sub;
        else
            total += sub;
    }
    memo[key] = total;
    return total;
}

ZZ mn_chi(const Partition& lambda, const Partition& mu) {
    std::map<std::pair<Beta, size_t>, ZZ> memo;
    return chi_rec(beta_of(lambda), mu, 0, memo);
}

// ---------------------------------------------------------------------------
// Per-degree transition tables.
// ---------------------------------------------------------------------------

struct DegTables {
    std::vector<Partition> parts;  // descending lex, refines dominance downward
    std::map<Partition, int> index;
    QTMat p_to_m;  // [i][j] = coeff of m_{parts[j]} in p_{parts[i]}
    QTMat m_to_p;  // acts on m-coordinate vectors, yields p-coordinates
    std::map<std::pair<Partition, Partition>, ZZ> chi;  // (lambda, mu)
};

// p_k * (m-basis expansion) update rule: adding k to one distinct part value
// v (or appending, v=0) of mu gives nu with coefficient mult_{nu}(v+k).
void mul_pk_mbasis(std::map<Partition, ZZ>& acc, int k) {
    std::map<Partition, ZZ> nxt;
    for (const auto& [mu, c] : acc) {
        std::vector<int> distinct{0};
        for (int v : mu)
            if (std::find(distinct.begin(), distinct.end(), v) == distinct.end())
                distinct.push_back(v);
        for (int v : distinct) {
            Partition nu = mu;
            if (v == 0) {
                nu.push_back(k);
            } else {
                auto it = std::find(nu.begin(), nu.end(), v);
                *it += k;
            }
            nu = sort_desc(nu);
            int mult = std::count(nu.begin(), nu.end(), v + k);
            nxt[nu] += c * mult;
        }
    }
    acc = std::move(nxt);
}

DegTables& tables(int d) {
    static std::map<int, DegTables> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    DegTables t;
    t.parts = partitions_of(d);
    int n = t.parts.size();
    for (int i = 0; i < n; ++i) t.index[t.parts[i]] = i;
    t.p_to_m = qtmat(n, n);
    for (int i = 0; i < n; ++i) {
        std::map<Partition, ZZ> acc{{{}, ZZ(1)}};
        for (int k : t.parts[i]) mul_pk_mbasis(acc, k);
        for (const auto& [mu, c] : acc) t.p_to_m[i][t.index.at(mu)] = QT(c);
    }
    // transpose, invert
    QTMat mt = qtmat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mt[i][j] = t.p_to_m[j][i];
    t.m_to_p = inverse(mt);
    for (const auto& la : t.parts)
        for (const auto& mu : t.parts) t.chi[{la, mu}] = mn_chi(la, mu);
    return cache[d] = std::move(t);
}

QT zee_qt(const Partition& l) { return QT(zee(l)); }

}  // namespace

// ---------------------------------------------------------------------------
// SymFn basics
// ---------------------------------------------------------------------------

SymFn SymFn::pk(int k) {
    if (k < 1) throw std::invalid_argument("SymFn::pk: k must be >= 1");
    SymFn f;
    f.p[{k}] = QT(1);
    return f;
}

int SymFn::degree() const {
    int d = -1;
    for (const auto& [l, c] : p) d = std::max<int>(d, weight(l));
    return d;
}

bool SymFn::is_homogeneous() const {
    int d = -2;
    for (const auto& [l, c] : p) {
        if (d == -2)
            d = weight(l);
        else if (d != weight(l))
            return false;
    }
    return true;
}

SymFn SymFn::component(int d) const {
    SymFn r;
    for (const auto& [l, c] : p)
        if (weight(l) == d) r.p[l] = c;
    return r;
}

SymFn SymFn::operator+(const SymFn& o) const {
    SymFn r = *this;
    for (const auto& [l, c] : o.p) {
        auto it = r.p.find(l);
        if (it == r.p.end()) {
            r.p[l] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.p.erase(it);
        }
    }
    return r;
}

SymFn SymFn::operator-(const SymFn& o) const { return *this + (-o); }

SymFn SymFn::operator-() const {
    SymFn r;
    for (const auto& [l, c] : p) r.p[l] = -c;
    return r;
}

SymFn SymFn::operator*(const SymFn& o) const {
    SymFn r;
    for (const auto& [la, ca] : p)
        for (const auto& [lb, cb] : o.p) {
            Partition merged = sort_desc(concat(la, lb));
            QT v = ca * cb;
            auto it = r.p.find(merged);
            if (it == r.p.end()) {
                if (!v.is_zero()) r.p[merged] = v;
            } else {
                it->second += v;
                if (it->second.is_zero()) r.p.erase(it);
            }
        }
    return r;
}

SymFn SymFn::operator*(const QT& c) const {
    SymFn r;
    if (c.is_zero()) return r;
    for (const auto& [l, v] : p) r.p[l] = v * c;
    return r;
}

SymFn SymFn::map_coeffs(const std::function<QT(const QT&)>& f) const {
    SymFn r;
    for (const auto& [l, c] : p) {
        QT v = f(c);
        if (!v.is_zero()) r.p[l] = v;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Standard elements
// ---------------------------------------------------------------------------

SymFn sym_p(const Partition& l) {
    SymFn f;
    f.p[sort_desc(l)] = QT(1);
    return f;
}

SymFn sym_h(int n) {
    if (n < 0) return SymFn();
    SymFn f;
    for (const auto& l : partitions_of(n)) f.p[l] = QT(1) / zee_qt(l);
    return f;
}

SymFn sym_e(int n) {
    if (n < 0) return SymFn();
    SymFn f;
    for (const auto& l : partitions_of(n)) {
        QT c = QT(1) / zee_qt(l);
        if ((n - static_cast<int>(l.size())) % 2) c = -c;
        f.p[l] = c;
    }
    return f;
}

SymFn sym_h(const Partition& l) {
    SymFn f(QT(1));
    for (int k : l) f = f * sym_h(k);
    return f;
}

SymFn sym_e(const Partition& l) {
    SymFn f(QT(1));
    for (int k : l) f = f * sym_e(k);
    return f;
}

SymFn sym_m(const Partition& l) {
    Partition ls = sort_desc(l);
    int d = weight(ls);
    DegTables& t = tables(d);
    int j = t.index.at(ls);
    SymFn f;
    for (size_t i = 0; i < t.parts.size(); ++i)
        if (!t.m_to_p[i][j].is_zero()) f.p[t.parts[i]] = t.m_to_p[i][j];
    return f;
}

SymFn sym_s(const Partition& l) {
    Partition ls = sort_desc(l);
    int d = weight(ls);
    DegTables& t = tables(d);
    SymFn f;
    for (const auto& mu : t.parts) {
        ZZ x = t.chi.at({ls, mu});
        if (x != 0) f.p[mu] = QT(x) / zee_qt(mu);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Conversions and pairings
// ---------------------------------------------------------------------------

QT hall(const SymFn& a, const SymFn& b) {
    QT s;
    for (const auto& [l, c] : a.p) {
        auto it = b.p.find(l);
        if (it != b.p.end()) s += c * it->second * zee_qt(l);
    }
    return s;
}

QT qt_inner(const SymFn& a, const SymFn& b) {
    QT s;
    for (const auto& [l, c] : a.p) {
        auto it = b.p.find(l);
        if (it == b.p.end()) continue;
        QT factor = zee_qt(l);
        for (int k : l)
            factor *= (QT(1) - QT::q(k)) / (QT(1) - QT::t(k));
        s += c * it->second * factor;
    }
    return s;
}

SymFn omega(const SymFn& f) {
    SymFn r;
    for (const auto& [l, c] : f.p) {
        QT v = c;
        if ((weight(l) - static_cast<long>(l.size())) % 2) v = -v;
        r.p[l] = v;
    }
    return r;
}

std::map<Partition, QT> to_basis(const SymFn& f, char basis) {
    std::map<Partition, QT> out;
    if (basis == 'p') {
        for (const auto& [l, c] : f.p) out[l] = c;
        return out;
    }
    if (basis == 'e') return to_basis(omega(f), 'h');
    // split by degree
    std::map<int, SymFn> comps;
    for (const auto& [l, c] : f.p) comps[weight(l)].p[l] = c;
    for (auto& [d, fd] : comps) {
        DegTables& t = tables(d);
        if (basis == 'm') {
            QTVec pm(t.parts.size());
            for (const auto& [l, c] : fd.p) {
                int i = t.index.at(l);
                for (size_t j = 0; j < t.parts.size(); ++j)
                    if (!t.p_to_m[i][j].is_zero()) pm[j] += c * t.p_to_m[i][j];
            }
            for (size_t j = 0; j < t.parts.size(); ++j)
                if (!pm[j].is_zero()) out[t.parts[j]] = pm[j];
        } else if (basis == 'h') {
            for (const auto& mu : t.parts) {
                QT c = hall(fd, sym_m(mu));
                if (!c.is_zero()) out[mu] = c;
            }
        } else if (basis == 's') {
            for (const auto& mu : t.parts) {
                QT c = hall(fd, sym_s(mu));
                if (!c.is_zero()) out[mu] = c;
            }
        } else {
            throw std::invalid_argument("to_basis: unknown basis");
        }
    }
    return out;
}

SymFn from_basis(char basis, const std::map<Partition, QT>& coeffs) {
    SymFn f;
    for (const auto& [l, c] : coeffs) {
        SymFn b;
        switch (basis) {
            case 'p': b = sym_p(l); break;
            case 'm': b = sym_m(l); break;
            case 'h': b = sym_h(l); break;
            case 'e': b = sym_e(l); break;
            case 's': b = sym_s(l); break;
            default: throw std::invalid_argument("from_basis: unknown basis");
        }
        f += b * c;
    }
    return f;
}

std::string sym_str(const SymFn& f, char basis) {
    auto coeffs = to_basis(f, basis);
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis << "[";
        for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Skew, plethysm, Jing
// ---------------------------------------------------------------------------

SymFn skew(const SymFn& g, const SymFn& f) {
    SymFn out;
    for (const auto& [gl, gc] : g.p) {
        // apply prod_i p_{gl_i}-perp = prod_i gl_i * d/dp_{gl_i}
        SymFn cur;
        cur.p = f.p;
        for (int k : gl) {
            SymFn nxt;
            for (const auto& [mu, c] : cur.p) {
                int mult = std::count(mu.begin(), mu.end(), k);
                if (!mult) continue;
                Partition rest = mu;
                rest.erase(std::find(rest.begin(), rest.end(), k));
                QT v = c * QT(static_cast<long>(mult) * k);
                auto it = nxt.p.find(rest);
                if (it == nxt.p.end())
                    nxt.p[rest] = v;
                else {
                    it->second += v;
                    if (it->second.is_zero()) nxt.p.erase(it);
                }
            }
            cur = std::move(nxt);
            if (cur.is_zero()) break;
        }
        out += cur * gc;
    }
    return out;
}

namespace {
SymFn pk_pleth(int k, const SymFn& a) {
    SymFn r;
    for (const auto& [l, c] : a.p) {
        Partition kl(l.size());
        for (size_t i = 0; i < l.size(); ++i) kl[i] = l[i] * k;
        r.p[kl] = c.frob(k);
    }
    return r;
}
}  // namespace

SymFn plethysm(const SymFn& f, const SymFn& a) {
    SymFn out;
    for (const auto& [l, c] : f.p) {
        SymFn term(c);
        for (int k : l) term = term * pk_pleth(k, a);
        out += term;
    }
    return out;
}

std::map<int, SymFn> pleth_split(const SymFn& f) {
    std::map<int, SymFn> out;
    for (const auto& [l, c] : f.p) {
        // p_lambda[x + X] = prod_i (x^{l_i} + p_{l_i});
        // expand over subsets taking the x-power
        size_t n = l.size();
        for (size_t mask = 0; mask < (1u << n); ++mask) {
            int xdeg = 0;
            Partition rest;
            for (size_t i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    xdeg += l[i];
                else
                    rest.push_back(l[i]);
            }
            SymFn& dst = out[xdeg];
            Partition key = sort_desc(rest);
            auto it = dst.p.find(key);
            if (it == dst.p.end())
                dst.p[key] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) dst.p.erase(it);
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

SymFn jing(int n, const SymFn& f) {
    if (n < 0) throw std::invalid_argument("jing: negative index");
    SymFn one_minus_t;
    one_minus_t.p[{1}] = QT(1) - QT::t();
    int dmax = std::max(0, f.degree());
    SymFn out;
    for (int i = 0; i <= dmax; ++i) {
        SymFn ef = skew(sym_e(i), f);
        if (ef.is_zero()) continue;
        SymFn hpart = plethysm(sym_h(n + i), one_minus_t);
        SymFn term = hpart * ef;
        if (i % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Macdonald bases and nabla
// ---------------------------------------------------------------------------

SymFn macd_P(const Partition& lam) {
    static std::map<Partition, SymFn> cache;
    static std::mutex mtx;
    Partition l = sort_desc(lam);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }
    int d = weight(l);
    DegTables& t = tables(d);
    int li = t.index.at(l);
    int n = t.parts.size();
    // unknown coefficients for strictly smaller partitions (descending lex
    // linearly extends dominance, so indices > li)
    std::vector<int> lower;
    for (int j = li + 1; j < n; ++j) lower.push_back(j);
    std::vector<SymFn> msym(n);
    for (int j = 0; j < n; ++j) msym[j] = sym_m(t.parts[j]);
    SymFn P = msym[li];
    if (!lower.empty()) {
        int k = lower.size();
        QTMat A = qtmat(k, k);
        QTVec b(k);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c)
                A[r][c] = qt_inner(msym[lower[c]], msym[lower[r]]);
            b[r] = -qt_inner(msym[li], msym[lower[r]]);
        }
        auto x = solve(A, b);
        if (!x) throw std::logic_error("macd_P: degenerate pairing");
        for (int c = 0; c < k; ++c) P += msym[lower[c]] * (*x)[c];
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache[l] = P;
}

SymFn macd_J(const Partition& lam) {
    Partition l = sort_desc(lam);
    QT scale(1);
    for (int i = 1; i <= static_cast<int>(l.size()); ++i)
        for (int j = 1; j <= l[i - 1]; ++j)
            scale *= QT(1) - QT::q(arm(l, i, j)) * QT::t(leg(l, i, j) + 1);
    return macd_P(l) * scale;
}

SymFn macd_Htilde(const Partition& lam) {
    static std::map<Partition, SymFn> cache;
    static std::mutex mtx;
    Partition l = sort_desc(lam);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }
    SymFn J = macd_J(l);
    SymFn Jt = J.map_coeffs([](const QT& c) { return c.flip_t(); });
    SymFn alph;
    alph.p[{1}] = (QT(1) - QT::t(-1)).inv();
    SymFn H = plethysm(Jt, alph) * QT::t().pow(nstat(l));
    std::lock_guard<std::mutex> lock(mtx);
    return cache[l] = H;
}

SymFn nabla_sym(const SymFn& f, long power) {
    struct NT {
        QTMat m_to_ht;  // m-coordinates -> H-tilde coordinates
    };
    static std::map<int, NT> cache;
    static std::mutex mtx;

    std::map<int, SymFn> comps;
    for (const auto& [l, c] : f.p) comps[weight(l)].p[l] = c;
    SymFn out;
    for (auto& [d, fd] : comps) {
        DegTables& t = tables(d);
        int n = t.parts.size();
        QTMat* m2h = nullptr;
        {
            std::lock_guard<std::mutex> lock(mtx);
            auto it = cache.find(d);
            if (it == cache.end()) {
                QTMat ht2m = qtmat(n, n);  // [i][j]: m_{parts[j]} coeff of Htilde_{parts[i]}
                for (int i = 0; i < n; ++i) {
                    auto mc = to_basis(macd_Htilde(t.parts[i]), 'm');
                    for (const auto& [mu, c] : mc) ht2m[i][t.index.at(mu)] = c;
                }
                // transpose then invert: m-coords = (ht2m)^T * ht-coords
                QTMat tr = qtmat(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) tr[i][j] = ht2m[j][i];
                NT nt{inverse(tr)};
                it = cache.emplace(d, std::move(nt)).first;
            }
            m2h = &it->second.m_to_ht;
        }
        auto mc = to_basis(fd, 'm');
        QTVec mv(n);
        for (const auto& [mu, c] : mc) mv[t.index.at(mu)] = c;
        QTVec hv = mat_vec(*m2h, mv);
        for (int i = 0; i < n; ++i) {
            if (hv[i].is_zero()) continue;
            const Partition& mu = t.parts[i];
            QT eig = (QT::q().pow(nstat(conjugate(mu))) * QT::t().pow(nstat(mu))).pow(power);
            out += macd_Htilde(mu) * (hv[i] * eig);
        }
    }
    return out;
}

}  // namespace shuffle
