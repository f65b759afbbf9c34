#include "shuffle/nsmac.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "shuffle/ddpa.hpp"
#include "shuffle/keypoly.hpp"
#include "shuffle/linalg.hpp"
#include "shuffle/nspleth.hpp"
#include "shuffle/symfunc.hpp"

namespace shuffle {

namespace {

Partition sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// f(q x_N, x_1, .., x_{N-1}): exponents rotate left, wrapping picks up q
XPoly rotate_q(const XPoly& f) {
    XPoly out(f.N);
    for (const auto& [e, c] : f.terms) {
        Expo e2(e.begin() + 1, e.end());
        e2.push_back(e[0]);
        out.add_term(e2, c * QT::q(e[0]));
    }
    return out;
}

}  // namespace

QT BoxData::clearing_factor() const {
    QT out(1);
    for (const auto& [a, l] : boxes) out *= QT(1) - QT::monom(1, a + 1, l + 1);
    return out;
}

BoxData diagram_boxes(const std::vector<int>& beta) {
    const int n = static_cast<int>(beta.size());
    BoxData out;
    for (int k = 0; k < n; ++k)
        for (int c = 1; c <= beta[k]; ++c) {
            int arm = beta[k] - c;
            int leg = 0;
            for (int k2 = 0; k2 < k; ++k2)
                if (c <= beta[k2] && beta[k2] <= beta[k]) ++leg;
            for (int k2 = k + 1; k2 < n; ++k2)
                if (c <= beta[k2] + 1 && beta[k2] + 1 <= beta[k]) ++leg;
            out.boxes.push_back({arm, leg});
        }
    return out;
}

XPoly cherednik_finite(int i, const XPoly& f) {
    const int N = f.N;
    if (i < 1 || i > N) throw std::invalid_argument("cherednik_finite: index out of range");
    XPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = op_Tinv(j, g);
    g = rotate_q(g);
    for (int j = N - 1; j >= i; --j) g = op_T(j, g);
    return g * QT::t(i - N);
}

XPoly E_nonsym(const std::vector<int>& beta_in, int N) {
    if (static_cast<int>(beta_in.size()) > N)
        throw std::invalid_argument("E_nonsym: composition longer than the variable count");
    std::vector<int> beta = beta_in;
    beta.resize(N, 0);
    for (int b : beta)
        if (b < 0) throw std::invalid_argument("E_nonsym: negative part");
    const int d = std::accumulate(beta.begin(), beta.end(), 0);

    // Monomials weakly below beta in the order the Cherednik operators
    // triangularize against: strict dominance descent on the sorted parts,
    // and motion toward the dominant rearrangement inside a fixed orbit.
    std::vector<int> beta_sorted = beta;
    std::sort(beta_sorted.begin(), beta_sorted.end(), std::greater<int>());
    std::vector<std::vector<int>> mons;
    for (const auto& a : compositions_of(d, N)) {
        if (a == beta) { mons.push_back(a); continue; }
        std::vector<int> a_sorted = a;
        std::sort(a_sorted.begin(), a_sorted.end(), std::greater<int>());
        const bool below = a_sorted == beta_sorted ? monomial_order_less(beta, a)
                                                   : monomial_order_less(a, beta);
        if (below) mons.push_back(a);
    }
    std::map<std::vector<int>, int> col;
    for (size_t k = 0; k < mons.size(); ++k) col[mons[k]] = static_cast<int>(k);
    const int D = static_cast<int>(mons.size());

    QTMat A = qtmat(N * D, D);
    for (int i = 1; i <= N; ++i) {
        const XPoly diag = cherednik_finite(i, XPoly::monom(N, beta));
        const QT nu = diag.coeff(beta);
        for (int a = 0; a < D; ++a) {
            const XPoly img = a == col[beta] ? diag : cherednik_finite(i, XPoly::monom(N, mons[a]));
            for (const auto& [e, c] : img.terms) {
                auto it = col.find(e);
                if (it == col.end())
                    throw std::runtime_error("E_nonsym: eigen-solve degenerate (image escapes the triangular span)");
                A[(i - 1) * D + it->second][a] += c;
            }
            A[(i - 1) * D + a][a] -= nu;
        }
    }

    QTMat ns = nullspace(std::move(A));
    if (ns.size() != 1)
        throw std::runtime_error("E_nonsym: eigen-solve degenerate (joint eigenspace dimension " +
                                 std::to_string(ns.size()) + ")");
    const QT lead = ns[0][col[beta]];
    if (lead.is_zero())
        throw std::runtime_error("E_nonsym: eigen-solve degenerate (eigenvector misses the leading monomial)");
    XPoly out(N);
    for (int a = 0; a < D; ++a) out.add_term(mons[a], ns[0][a] / lead);
    return out;
}

IntegralForms integral_forms(const std::vector<int>& beta, int N) {
    IntegralForms out;
    out.boxes = diagram_boxes(beta);
    out.E = E_nonsym(beta, N) * out.boxes.clearing_factor();
    const QT scale = QT::q(static_cast<int>(nstat(conjugate(sorted_desc(beta)))));
    out.Etilde = out.E.map_coeffs([&](const QT& c) { return c.flip_q() * scale; });
    return out;
}

XPoly hecke_symmetrize(const XPoly& f, int k) {
    const int N = f.N;
    if (k < 1 || k > N) throw std::invalid_argument("hecke_symmetrize: bad variable range");
    const int m = N - k + 1;
    XPoly F = f;
    const QT tinv = QT::t().inv();
    for (int j = k; j <= N - 1; ++j) {
        XPoly total = F, cur = F;
        for (int l = j; l >= k; --l) {
            cur = op_T(l, cur) * tinv;
            total += cur;
        }
        F = std::move(total);
    }
    QT fact(1);
    for (int a = 1; a <= m; ++a) fact *= (QT(1) - QT::t(a)) / (QT(1) - QT::t());
    return F * (QT::t(m * (m - 1) / 2) / fact);
}

QT stable_eigenvalue(const NsMacIndex& idx, int j) {
    const auto& [eta, lambda] = idx;
    const int r = static_cast<int>(eta.size());
    if (j < 1) throw std::invalid_argument("stable_eigenvalue: index must be positive");
    if (j > r || eta[j - 1] == 0) return QT(0);
    std::vector<int> word = eta;
    word.insert(word.end(), lambda.begin(), lambda.end());
    // standardize: smallest letters get 1,2,.. left to right, then the next
    std::vector<int> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return word[a] < word[b]; });
    std::vector<int> st(word.size());
    for (size_t p = 0; p < order.size(); ++p) st[order[p]] = static_cast<int>(p) + 1;
    const int texp = r + static_cast<int>(lambda.size()) + 1 - st[j - 1];
    return QT::monom(1, eta[j - 1], texp);
}

namespace {

using CoordKey = std::pair<std::vector<int>, Partition>;

void add_coords(std::map<CoordKey, int>& keys, const AsymFn& f) {
    for (const auto& [eta, g] : f.terms)
        for (const auto& [la, c] : g.p) keys.insert({{eta, la}, 0});
}

void write_coords(const std::map<CoordKey, int>& keys, const AsymFn& f, int row0,
                  int column, QTMat& mat) {
    for (const auto& [eta, g] : f.terms)
        for (const auto& [la, c] : g.p)
            mat[row0 + keys.at({eta, la})][column] += c;
}

// Raw operator images of the graded spanning set, shared by every index of
// the same rank and degree: raw[a] = {Y_1 b_a, .., Y_r b_a, d_-^r b_a}.
struct GradeImages {
    std::vector<AsymFn> basis;
    std::vector<std::vector<AsymFn>> raw;
};

const GradeImages& grade_images(int r, int d) {
    static std::map<std::pair<int, int>, GradeImages> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find({r, d});
    if (it != cache.end()) return it->second;
    GradeImages gi;
    gi.basis = pr_graded_basis(r, d);
    gi.raw.resize(gi.basis.size());
    for (size_t a = 0; a < gi.basis.size(); ++a) {
        for (int j = 1; j <= r; ++j) gi.raw[a].push_back(act_cherednik(j, gi.basis[a]));
        AsymFn down = gi.basis[a];
        for (int s = 0; s < r; ++s) down = act_dminus(down);
        gi.raw[a].push_back(std::move(down));
    }
    return cache.emplace(std::pair{r, d}, std::move(gi)).first->second;
}

}  // namespace

AsymFn stable_E(const NsMacIndex& idx) {
    const auto& [eta, lambda] = idx;
    const int r = static_cast<int>(eta.size());
    for (int e : eta)
        if (e < 0) throw std::invalid_argument("stable_E: negative part");
    for (size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] <= 0 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw std::invalid_argument("stable_E: tail is not a partition");

    static std::map<NsMacIndex, AsymFn> results;
    static std::mutex rlock;
    {
        std::lock_guard<std::mutex> guard(rlock);
        auto it = results.find(idx);
        if (it != results.end()) return it->second;
    }

    const int d = std::accumulate(eta.begin(), eta.end(), 0) +
                  std::accumulate(lambda.begin(), lambda.end(), 0);

    std::vector<int> word = eta;
    word.insert(word.end(), lambda.begin(), lambda.end());
    const Partition mu = sorted_desc(word);
    const SymFn target_sym =
        macd_J(mu).map_coeffs([](const QT& c) { return c.flip_q(); }) * QT::q(static_cast<int>(nstat(conjugate(mu))));
    const AsymFn target = AsymFn::from_sym(target_sym);

    const GradeImages& gi = grade_images(r, d);
    const int D = static_cast<int>(gi.basis.size());

    // eigen-residuals for this index's eigenvalues, then the d_-^r anchor
    std::vector<std::vector<AsymFn>> imgs(D);
    for (int a = 0; a < D; ++a) {
        for (int j = 1; j <= r; ++j)
            imgs[a].push_back(gi.raw[a][j - 1] - gi.basis[a] * stable_eigenvalue(idx, j));
        imgs[a].push_back(gi.raw[a][r]);
    }

    std::map<CoordKey, int> keys;
    for (const auto& v : imgs)
        for (const auto& f : v) add_coords(keys, f);
    add_coords(keys, target);
    int nk = 0;
    for (auto& [k, v] : keys) v = nk++;

    // one augmented elimination decides consistency, uniqueness and the answer
    QTMat A = qtmat((r + 1) * nk, D + 1);
    for (int a = 0; a < D; ++a)
        for (int blk = 0; blk <= r; ++blk) write_coords(keys, imgs[a][blk], blk * nk, a, A);
    for (const auto& [et, g] : target.terms)
        for (const auto& [la, c] : g.p) A[r * nk + keys.at({et, la})][D] = c;

    const std::vector<int> piv = rref(A);
    int rank = 0;
    for (int c : piv) {
        if (c == D)
            throw std::runtime_error("stable_E: eigen-solve degenerate (no eigenvector meets the anchor)");
        ++rank;
    }
    if (rank < D)
        throw std::runtime_error("stable_E: eigen-solve degenerate (joint eigenspace is not a point)");

    AsymFn out(r);
    for (size_t k = 0; k < piv.size(); ++k) out = out + gi.basis[piv[k]] * A[k][D];
    {
        std::lock_guard<std::mutex> guard(rlock);
        results.emplace(idx, out);
    }
    return out;
}

AsymFn modified_E(const NsMacIndex& idx) { return pi_r(stable_E(idx)); }

}  // namespace shuffle
