#include "shuffle/asympoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "shuffle/keypoly.hpp"

namespace shuffle {

namespace {

long head_sum(const std::vector<int>& eta) {
    long s = 0;
    for (int v : eta) s += v;
    return s;
}

void check_eta(const std::vector<int>& eta, int r) {
    if (static_cast<int>(eta.size()) != r)
        throw std::invalid_argument("AsymFn: head length != rank");
    for (int v : eta)
        if (v < 0) throw std::invalid_argument("AsymFn: negative head exponent");
}

}  // namespace

AsymFn AsymFn::from_sym(const SymFn& g, int rank) {
    AsymFn f(rank);
    if (!g.is_zero()) f.terms[std::vector<int>(rank, 0)] = g;
    return f;
}

AsymFn AsymFn::monom(int rank, std::vector<int> eta, SymFn tail) {
    check_eta(eta, rank);
    AsymFn f(rank);
    if (!tail.is_zero()) f.terms[std::move(eta)] = std::move(tail);
    return f;
}

int AsymFn::degree() const {
    int d = -1;
    for (const auto& [eta, g] : terms)
        d = std::max<int>(d, head_sum(eta) + std::max(0, g.degree()));
    return d;
}

bool AsymFn::is_homogeneous() const {
    int d = -2;
    for (const auto& [eta, g] : terms) {
        if (!g.is_homogeneous()) return false;
        int gd = head_sum(eta) + std::max(0, g.degree());
        if (d == -2)
            d = gd;
        else if (d != gd)
            return false;
    }
    return true;
}

AsymFn AsymFn::component(int d) const {
    AsymFn out(r);
    for (const auto& [eta, g] : terms) {
        int rest = d - static_cast<int>(head_sum(eta));
        if (rest < 0) continue;
        SymFn part = g.component(rest);
        if (!part.is_zero()) out.terms[eta] = part;
    }
    return out;
}

void AsymFn::add_term(const std::vector<int>& eta, const SymFn& g) {
    if (g.is_zero()) return;
    check_eta(eta, r);
    auto it = terms.find(eta);
    if (it == terms.end()) {
        terms[eta] = g;
    } else {
        it->second += g;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AsymFn AsymFn::operator+(const AsymFn& o) const {
    if (r != o.r) throw std::invalid_argument("AsymFn: mixed ranks");
    AsymFn out = *this;
    for (const auto& [eta, g] : o.terms) out.add_term(eta, g);
    return out;
}

AsymFn AsymFn::operator-(const AsymFn& o) const { return *this + (-o); }

AsymFn AsymFn::operator-() const {
    AsymFn out(r);
    for (const auto& [eta, g] : terms) out.terms[eta] = -g;
    return out;
}

AsymFn AsymFn::operator*(const AsymFn& o) const {
    if (r != o.r) throw std::invalid_argument("AsymFn: mixed ranks");
    AsymFn out(r);
    for (const auto& [ea, ga] : terms)
        for (const auto& [eb, gb] : o.terms) {
            std::vector<int> e(r);
            for (int i = 0; i < r; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ga * gb);
        }
    return out;
}

AsymFn AsymFn::operator*(const QT& c) const {
    AsymFn out(r);
    if (c.is_zero()) return out;
    for (const auto& [eta, g] : terms) out.terms[eta] = g * c;
    return out;
}

AsymFn AsymFn::map_coeffs(const std::function<QT(const QT&)>& f) const {
    AsymFn out(r);
    for (const auto& [eta, g] : terms) {
        SymFn h = g.map_coeffs(f);
        if (!h.is_zero()) out.terms[eta] = h;
    }
    return out;
}

std::string AsymFn::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [eta, g] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "x^(";
        for (size_t i = 0; i < eta.size(); ++i) os << (i ? "," : "") << eta[i];
        os << ")*(" << sym_str(g, 'm') << ")";
    }
    return os.str();
}

AsymFn iota(const AsymFn& f) {
    AsymFn out(f.r + 1);
    for (const auto& [eta, g] : f.terms) {
        for (const auto& [k, gk] : pleth_split(g)) {
            std::vector<int> e = eta;
            e.push_back(k);
            out.add_term(e, gk);
        }
    }
    return out;
}

XPoly truncate_asym(const AsymFn& f, int N) {
    if (N < f.r) throw std::invalid_argument("truncate_asym: N < rank");
    XPoly out(N);
    for (const auto& [eta, g] : f.terms) {
        Expo e(N, 0);
        std::copy(eta.begin(), eta.end(), e.begin());
        out += XPoly::monom(N, e) * sym_to_xpoly(g, N, f.r + 1);
    }
    return out;
}

AsymFn lift_asym(const XPoly& g, int r) {
    int N = g.N;
    if (N < r) throw std::invalid_argument("lift_asym: fewer variables than rank");
    // collect terms whose tail exponents are weakly decreasing: each monomial
    // symmetric function in the tail contributes exactly one such term
    std::map<std::vector<int>, std::map<Partition, QT>> mcoeffs;
    for (const auto& [e, c] : g.terms) {
        std::vector<int> eta(e.begin(), e.begin() + r);
        for (int v : eta)
            if (v < 0) throw std::invalid_argument("lift_asym: negative head exponent");
        bool weakly_dec = true;
        for (int i = r; i + 1 < N; ++i)
            if (e[i] < e[i + 1]) {
                weakly_dec = false;
                break;
            }
        if (!weakly_dec) continue;
        for (int i = r; i < N; ++i)
            if (e[i] < 0) throw std::invalid_argument("lift_asym: negative tail exponent");
        Partition la(e.begin() + r, e.end());
        while (!la.empty() && la.back() == 0) la.pop_back();
        mcoeffs[eta][la] += c;
    }
    AsymFn out(r);
    for (const auto& [eta, coeffs] : mcoeffs) out.add_term(eta, from_basis('m', coeffs));
    if (truncate_asym(out, N) != g)
        throw std::invalid_argument("lift_asym: input is not symmetric in the tail");
    return out;
}

AsymFn stable_weyl(const AsymFn& f) {
    if (f.r < 1) throw std::invalid_argument("stable_weyl: rank is zero");
    AsymFn out(f.r - 1);
    // per graded component, work at N = r + d and symmetrize x_r..x_N
    for (int d = 0; d <= std::max(0, f.degree()); ++d) {
        AsymFn fd = f.component(d);
        if (fd.is_zero()) continue;
        int N = std::max(f.r, f.r + d);
        XPoly g = weyl_symmetrize(truncate_asym(fd, N), f.r);
        out += lift_asym(g, f.r - 1);
    }
    return out;
}

AsymFn stable_atom(std::vector<int> eta, Partition la, int rank) {
    while (!eta.empty() && eta.back() == 0) eta.pop_back();
    int r0 = eta.size();
    if (rank < 0) rank = r0;
    if (rank < r0) throw std::invalid_argument("stable_atom: rank below head length");
    la = sort_desc(la);
    int k = la.size();
    // compute at the canonical rank (eta without trailing zeros), then include
    // into the requested rank; the direct computation at a padded rank would
    // not agree with the iota identification
    std::vector<int> full = eta;
    full.insert(full.end(), la.begin(), la.end());
    XPoly A = key_polynomial(KeyKind::atom, full);
    AsymFn cur = lift_asym(A, r0 + k);
    for (int i = 0; i < k; ++i) cur = stable_weyl(cur);
    for (int i = r0; i < rank; ++i) cur = iota(cur);
    return cur;
}

std::map<PairIndex, QT> stable_atom_expand(const AsymFn& f) {
    std::map<PairIndex, QT> out;
    int r = f.r;
    for (int d = 0; d <= std::max(0, f.degree()); ++d) {
        AsymFn fd = f.component(d);
        if (fd.is_zero()) continue;
        int N = r + d;
        auto atoms = key_expand(KeyKind::atom, truncate_asym(fd, N));
        // Peel by ascending stripped head length j: an atom index whose head
        // is zero past slot j can only come from stable atoms with len(eta)
        // <= j, and the < j ones were already subtracted, so its coefficient
        // is read off directly.  (Truncations of stable atoms are orbit sums
        // A_{(eta; beta)} over tail rearrangements beta of (lambda; 0...).)
        for (int j = 0; j <= r; ++j) {
            std::map<PairIndex, QT> found;
            for (const auto& [alpha, c] : atoms) {
                if (c.is_zero()) continue;
                int stripped = r;
                while (stripped > 0 && alpha[stripped - 1] == 0) --stripped;
                if (stripped != j) continue;
                std::vector<int> eta(alpha.begin(), alpha.begin() + j);
                Partition la = sort_desc(std::vector<int>(alpha.begin() + j, alpha.end()));
                PairIndex key{eta, la};
                auto it = found.find(key);
                if (it == found.end())
                    found[key] = c;
                else if (it->second != c)
                    throw std::runtime_error(
                        "stable_atom_expand: inconsistent tail orbit (not in P(r))");
            }
            for (const auto& [key, c] : found) {
                // subtract c times the full orbit sum of this stable atom
                const auto& [eta, la] = key;
                std::vector<int> beta(N - j, 0);
                if (static_cast<int>(la.size()) > N - j)
                    throw std::runtime_error("stable_atom_expand: tail overflow");
                std::copy(la.begin(), la.end(), beta.begin());
                std::sort(beta.begin(), beta.end());
                do {
                    std::vector<int> alpha = eta;
                    alpha.insert(alpha.end(), beta.begin(), beta.end());
                    auto it = atoms.find(alpha);
                    if (it == atoms.end()) {
                        if (!c.is_zero()) atoms[alpha] = -c;
                    } else {
                        it->second -= c;
                        if (it->second.is_zero()) atoms.erase(it);
                    }
                } while (std::next_permutation(beta.begin(), beta.end()));
                out[key] += c;
                if (out[key].is_zero()) out.erase(key);
            }
        }
        if (!atoms.empty())
            throw std::runtime_error(
                "stable_atom_expand: residue after peeling (not in P(r))");
    }
    return out;
}

}  // namespace shuffle
