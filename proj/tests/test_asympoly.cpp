#include <doctest.h>

#include <random>

#include "shuffle/asympoly.hpp"
#include "shuffle/keypoly.hpp"

using namespace shuffle;

namespace {

AsymFn random_asym(std::mt19937& rng, int r, int maxdeg) {
    std::uniform_int_distribution<int> dh(0, maxdeg), dc(-3, 3), dq(0, 1), dt(0, 1);
    AsymFn f(r);
    for (int k = 0; k < 4; ++k) {
        std::vector<int> eta(r);
        long used = 0;
        for (int i = 0; i < r; ++i) {
            eta[i] = dh(rng) % (maxdeg + 1);
            used += eta[i];
        }
        int rest = maxdeg - static_cast<int>(used % (maxdeg + 1));
        auto parts = partitions_of_max_len(std::max(0, rest % 3), 3);
        int c = dc(rng);
        if (c == 0) c = 1;
        SymFn tail = sym_m(parts[rng() % parts.size()]) * (QT(c) * QT::q(dq(rng)) * QT::t(dt(rng)));
        f.add_term(eta, tail);
    }
    return f;
}

}  // namespace

TEST_CASE("inclusion iota") {
    AsymFn h2 = AsymFn::from_sym(sym_h(2));
    AsymFn i0 = iota(h2);
    CHECK(i0.r == 1);
    CHECK(i0.terms.at({2}) == SymFn(QT(1)));
    CHECK(i0.terms.at({1}) == sym_h(1));
    CHECK(i0.terms.at({0}) == sym_h(2));

    AsymFn x1 = AsymFn::monom(1, {1});
    AsymFn i1 = iota(x1);
    CHECK(i1.r == 2);
    CHECK(i1.terms.size() == 1);
    CHECK(i1.terms.at({1, 0}) == SymFn(QT(1)));

    CHECK(iota(AsymFn::from_sym(SymFn(QT(1)))) == AsymFn::from_sym(SymFn(QT(1)), 1));

    // iota commutes with truncation
    std::mt19937 rng(2);
    for (int trial = 0; trial < 6; ++trial) {
        int r = trial % 3;
        AsymFn f = random_asym(rng, r, 3);
        for (int N = r + 1; N <= r + 4; ++N)
            CHECK(truncate_asym(iota(f), N) == truncate_asym(f, N));
    }
}

TEST_CASE("truncate and lift") {
    AsymFn f = AsymFn::monom(1, {1}, sym_s({1}));
    CHECK(truncate_asym(f, 2) == XPoly::var(2, 1) * XPoly::var(2, 2));
    XPoly h2trunc = truncate_asym(AsymFn::from_sym(sym_h(2)), 2);
    CHECK(h2trunc == XPoly::var(2, 1, 2) + XPoly::var(2, 1) * XPoly::var(2, 2) +
                         XPoly::var(2, 2, 2));
    // truncation at N = r kills positive-degree tails
    CHECK(truncate_asym(f, 1) == XPoly(1));

    CHECK(lift_asym(XPoly::var(2, 1) * XPoly::var(2, 2), 1) == f);
    CHECK(lift_asym(h2trunc, 0) == AsymFn::from_sym(sym_h(2)));
    CHECK(lift_asym(XPoly::var(3, 1, 2), 1) == AsymFn::monom(1, {2}));
    CHECK_THROWS(lift_asym(XPoly::var(2, 1) + XPoly::var(2, 2) * QT(2), 0));

    std::mt19937 rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        int r = trial % 3;
        AsymFn f2 = random_asym(rng, r, 3);
        int N = r + std::max(0, f2.degree());
        CHECK(lift_asym(truncate_asym(f2, N), r) == f2);
        CHECK(lift_asym(truncate_asym(f2, N + 2), r) == f2);
    }
}

TEST_CASE("stable Weyl symmetrization") {
    CHECK(stable_weyl(AsymFn::monom(1, {2})) == AsymFn::from_sym(sym_h(2)));
    CHECK(stable_weyl(AsymFn::from_sym(SymFn(QT(1)), 1)) ==
          AsymFn::from_sym(SymFn(QT(1))));
    CHECK(stable_weyl(AsymFn::monom(1, {1}, sym_h(1))) ==
          AsymFn::from_sym(sym_e(2)));
    // rank 2 -> 1: pi_2(x1^2 x2) has x1^2 h_1 plus lower flag terms
    AsymFn g = stable_weyl(AsymFn::monom(2, {2, 1}));
    CHECK(g.r == 1);
    CHECK(truncate_asym(g, 3) ==
          weyl_symmetrize(XPoly::var(3, 1, 2) * XPoly::var(3, 2), 2));
    CHECK_THROWS(stable_weyl(AsymFn::from_sym(sym_h(1))));
}

TEST_CASE("stable atoms") {
    CHECK(stable_atom({}, {2, 1}) == AsymFn::from_sym(sym_s({2, 1})));
    CHECK(stable_atom({1}, {}) == AsymFn::monom(1, {1}));
    // orbit-sum truncation at N=3
    XPoly want(3);
    want += key_polynomial(KeyKind::atom, {1, 1, 0});
    want += key_polynomial(KeyKind::atom, {1, 0, 1});
    CHECK(truncate_asym(stable_atom({1}, {1}), 3) == want);
    // orbit-sum formula at larger N for a two-row tail
    AsymFn a = stable_atom({2}, {1, 1});
    int N = 1 + 4;
    XPoly want2(N);
    std::vector<int> tail = {1, 1, 0, 0};
    std::sort(tail.begin(), tail.end());
    do {
        std::vector<int> full = {2};
        full.insert(full.end(), tail.begin(), tail.end());
        want2 += key_polynomial(KeyKind::atom, full);
    } while (std::next_permutation(tail.begin(), tail.end()));
    CHECK(truncate_asym(a, N) == want2);
    // compatibility under rank padding: A_{(eta,0)|la} at rank+1 = iota(A_{eta|la})
    CHECK(stable_atom({1}, {1}, 2) == iota(stable_atom({1}, {1})));
    CHECK(stable_atom({2, 1}, {1}, 3) == iota(stable_atom({2, 1}, {1})));
}

TEST_CASE("full symmetrization of stable atoms") {
    // pi_1...pi_r A_{eta|la} = s_{(eta;la)} if weakly decreasing, else 0
    auto full_pi = [](AsymFn f) {
        while (f.r > 0) f = stable_weyl(f);
        return f;
    };
    CHECK(full_pi(stable_atom({2, 1}, {1})) == AsymFn::from_sym(sym_s({2, 1, 1})));
    CHECK(full_pi(stable_atom({1}, {2})) == AsymFn(0));
    CHECK(full_pi(stable_atom({3}, {1, 1})) == AsymFn::from_sym(sym_s({3, 1, 1})));
    CHECK(full_pi(stable_atom({1, 2}, {})) == AsymFn(0));
}

TEST_CASE("stable atom expansion") {
    auto ex = stable_atom_expand(AsymFn::from_sym(sym_s({2, 1})));
    CHECK(ex.size() == 1);
    CHECK(ex.at({{}, {2, 1}}) == QT(1));

    auto ex2 = stable_atom_expand(AsymFn::monom(1, {1}));
    CHECK(ex2.size() == 1);
    CHECK(ex2.at({{1}, {}}) == QT(1));

    // reconstruction on sampled elements
    std::mt19937 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        int r = trial % 3;
        AsymFn f = random_asym(rng, r, 3);
        AsymFn back(r);
        for (const auto& [idx, c] : stable_atom_expand(f))
            back += stable_atom(idx.first, idx.second, r) * c;
        CHECK(back == f);
    }
}
