#include "shuffle/nspleth.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "shuffle/keypoly.hpp"
#include "shuffle/linalg.hpp"

namespace shuffle {

namespace {

// head polynomial (no tail) as an element of P(r)
AsymFn head_poly(const XPoly& p) {
    AsymFn out(p.N);
    for (const auto& [e, c] : p.terms) out.add_term(e, SymFn(c));
    return out;
}

// symmetric function of the full alphabet x_1, x_2, ... at rank r
AsymFn sym_full(const SymFn& g, int r) {
    AsymFn f = AsymFn::from_sym(g, 0);
    for (int i = 0; i < r; ++i) f = iota(f);
    return f;
}

// h_n(x_1..x_k) embedded at rank r
XPoly h_first_vars(int n, int k, int r) {
    XPoly out(r);
    for (auto& c : compositions_of(n, k)) {
        c.resize(r, 0);
        out.add_term(c, QT(1));
    }
    return out;
}

// h_n[x_i + (1-t)(x_1 + ... + x_{i-1})] at rank r, via Newton's identity
XPoly h_shifted_vars(int n, int i, int r) {
    std::vector<XPoly> h(n + 1, XPoly(r));
    h[0] = XPoly::constant(r, QT(1));
    std::vector<XPoly> p(n + 1, XPoly(r));
    for (int m = 1; m <= n; ++m) {
        p[m] = XPoly::var(r, i, m);
        QT c = QT(1) - QT::t(m);
        for (int j = 1; j < i; ++j) p[m] += XPoly::var(r, j, m) * c;
    }
    for (int d = 1; d <= n; ++d) {
        XPoly acc(r);
        for (int m = 1; m <= d; ++m) acc += p[m] * h[d - m];
        h[d] = acc * QT(d).inv();
    }
    return h[n];
}

SymFn one_minus_t_shift(const SymFn& g) {
    return plethysm(g, SymFn::pk(1) * (QT(1) - QT::t()));
}

using Index = std::pair<std::vector<int>, Partition>;

struct GradedMaps {
    std::vector<Index> idx;
    std::map<Index, int> row;
    QTMat fwd;  // signed coordinates -> unsigned coordinates
    QTMat inv;
};

std::vector<Index> graded_index(int r, int d) {
    std::vector<Index> idx;
    for (int h = 0; h <= d; ++h) {
        std::vector<std::vector<int>> heads;
        if (r == 0) {
            if (h == 0) heads.push_back({});
        } else {
            heads = compositions_of(h, r);
        }
        for (const auto& eta : heads)
            for (const auto& la : partitions_of(d - h)) idx.emplace_back(eta, la);
    }
    return idx;
}

QTVec coords(const AsymFn& f, const GradedMaps& gm) {
    QTVec v(gm.idx.size(), QT(0));
    for (const auto& [eta, tail] : f.terms) {
        for (const auto& [mu, c] : to_basis(tail, 'm')) {
            auto it = gm.row.find({eta, mu});
            if (it == gm.row.end())
                throw std::logic_error("pi_r: coordinate outside the graded component");
            v[it->second] = c;
        }
    }
    return v;
}

const GradedMaps& graded_maps(int r, int d) {
    static std::map<std::pair<int, int>, GradedMaps> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(r, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GradedMaps gm;
    gm.idx = graded_index(r, d);
    for (size_t k = 0; k < gm.idx.size(); ++k) gm.row.emplace(gm.idx[k], (int)k);
    size_t n = gm.idx.size();
    QTMat smat = qtmat(n, n), umat = qtmat(n, n);
    for (size_t j = 0; j < n; ++j) {
        const auto& [eta, la] = gm.idx[j];
        QTVec sc = coords(flagged_h({eta, la, true}), gm);
        QTVec uc = coords(flagged_h({eta, la, false}), gm);
        for (size_t i = 0; i < n; ++i) {
            smat[i][j] = sc[i];
            umat[i][j] = uc[i];
        }
    }
    gm.fwd = mat_mul(umat, inverse(smat));
    gm.inv = mat_mul(smat, inverse(umat));
    return cache.emplace(key, std::move(gm)).first->second;
}

AsymFn from_coords(int r, const QTVec& v, const GradedMaps& gm) {
    std::map<std::vector<int>, std::map<Partition, QT>> grouped;
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) grouped[gm.idx[k].first][gm.idx[k].second] = v[k];
    AsymFn out(r);
    for (const auto& [eta, coeffs] : grouped) out.add_term(eta, from_basis('m', coeffs));
    return out;
}

}  // namespace

AsymFn flagged_h(const FlaggedHIndex& idx) {
    int r = (int)idx.eta.size();
    SymFn tail = sym_h(idx.lambda);
    if (idx.sign) tail = one_minus_t_shift(tail);
    AsymFn out = sym_full(tail, r);
    for (int i = 1; i <= r; ++i) {
        XPoly factor = idx.sign ? h_shifted_vars(idx.eta[i - 1], i, r)
                                : h_first_vars(idx.eta[i - 1], i, r);
        out = out * head_poly(factor);
    }
    return out;
}

AsymFn pi_r(const AsymFn& f, bool inverse) {
    AsymFn out(f.r);
    if (f.is_zero()) return out;
    for (int d = 0; d <= f.degree(); ++d) {
        AsymFn fd = f.component(d);
        if (fd.is_zero()) continue;
        const GradedMaps& gm = graded_maps(f.r, d);
        QTVec w = mat_vec(inverse ? gm.inv : gm.fwd, coords(fd, gm));
        out += from_coords(f.r, w, gm);
    }
    return out;
}

AsymFn comp_hl(const std::vector<int>& alpha) {
    int r = (int)alpha.size(), k = 0;
    for (int a : alpha) {
        if (a < 1) throw std::invalid_argument("comp_hl: parts must be positive");
        k += a;
    }
    QT sign = (QT(-1) * QT::t()).pow(k - r);
    return pi_r(AsymFn::monom(r, alpha)) * sign;
}

AsymFn pi_r_series(const AsymFn& f, int order) {
    int r = f.r;
    AsymFn out(r);
    XPoly series = XPoly::constant(r, QT(1));
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            XPoly geo(r);
            for (int k = 0; k <= order; ++k) {
                std::vector<int> e(r, 0);
                e[i - 1] = k;
                e[j - 1] = -k;
                geo.add_term(e, QT::t(k));
            }
            series = series * geo;
        }
    SymFn shift = SymFn::pk(1) * (QT(1) - QT::t()).inv();
    for (const auto& [eta, tail] : f.terms) {
        // the definition acts on products (head polynomial) x (symmetric
        // function of the FULL alphabet), so rewrite the tail through
        // p_k(x_{r+1},...) = p_k(x) - (x_1^k + ... + x_r^k) first
        std::vector<std::pair<XPoly, SymFn>> split;
        for (const auto& [la, c] : to_basis(tail, 'p')) {
            std::vector<std::pair<XPoly, SymFn>> cur = {
                {XPoly::constant(r, c), SymFn(QT(1))}};
            for (int k : la) {
                XPoly heads(r);
                for (int i = 1; i <= r; ++i) heads += XPoly::var(r, i, k);
                std::vector<std::pair<XPoly, SymFn>> next;
                for (const auto& [h, g] : cur) {
                    next.emplace_back(h * (-heads), g);
                    next.emplace_back(h, g * SymFn::pk(k));
                }
                cur = std::move(next);
            }
            for (auto& pr : cur) split.push_back(std::move(pr));
        }
        for (const auto& [h, g] : split) {
            XPoly head = pol_truncate(series * XPoly::monom(r, eta) * h, r);
            out += head_poly(head) * sym_full(plethysm(g, shift), r);
        }
    }
    return out;
}

}  // namespace shuffle
