#include "doctest.h"

#include <stdexcept>

#include "shuffle/ddpa.hpp"
#include "shuffle/nspleth.hpp"

using namespace shuffle;

namespace {

const QT one(1), t = QT::t();

AsymFn xmon(int rank, std::vector<int> eta) { return AsymFn::monom(rank, std::move(eta)); }

SymFn shift1mt(const SymFn& g) { return plethysm(g, SymFn::pk(1) * (one - t)); }

Partition cat_sort(int part, Partition la) {
    if (part > 0) la.push_back(part);
    std::sort(la.begin(), la.end(), std::greater<int>());
    return la;
}

}  // namespace

TEST_CASE("flagged h-basis elements") {
    for (int n : {0, 1, 3})
        CHECK(flagged_h({{n}, {}, true}) == xmon(1, {n}));
    CHECK(flagged_h({{}, {2, 1}, true}) == AsymFn::from_sym(shift1mt(sym_h({2, 1})), 0));
    CHECK(flagged_h({{1, 1}, {}, false}) == xmon(2, {2, 0}) + xmon(2, {1, 1}));
    CHECK(flagged_h({{0, 2}, {}, false}) ==
          xmon(2, {2, 0}) + xmon(2, {1, 1}) + xmon(2, {0, 2}));
    CHECK(flagged_h({{}, {1}, false}) == AsymFn::from_sym(sym_h(1), 0));
}

TEST_CASE("pi on displayed values") {
    CHECK(pi_r(t * xmon(2, {2, 1})) == t * (xmon(2, {2, 1}) + t * xmon(2, {3, 0})));
    for (int r = 0; r <= 2; ++r) {
        AsymFn unit = AsymFn::from_sym(SymFn(one), r);
        CHECK(pi_r(unit) == unit);
    }
    // at rank 0 the map is the plethysm x -> x/(1-t)
    for (const SymFn& g : {sym_s({2, 1}), sym_e(2)}) {
        AsymFn got = pi_r(AsymFn::from_sym(g, 0));
        SymFn expect = plethysm(g, SymFn::pk(1) * (one - t).inv());
        CHECK(got == AsymFn::from_sym(expect, 0));
    }
}

TEST_CASE("pi roundtrip") {
    AsymFn f = t * xmon(2, {2, 1}) + AsymFn::monom(2, {1, 0}, sym_m({2})) +
               AsymFn::from_sym(sym_h({1, 1}), 2) * QT::q();
    CHECK(pi_r(pi_r(f), true) == f);
    CHECK(pi_r(pi_r(f, true)) == f);
}

TEST_CASE("pi commutes with inclusion") {
    AsymFn f = xmon(1, {2}) + AsymFn::monom(1, {1}, SymFn::pk(1));
    CHECK(pi_r(iota(f)) == iota(pi_r(f)));
    AsymFn g = AsymFn::from_sym(sym_h({2}), 0);
    CHECK(pi_r(iota(g)) == iota(pi_r(g)));
}

TEST_CASE("compositional Hall-Littlewood") {
    CHECK(comp_hl({1}) == xmon(1, {1}));
    CHECK(comp_hl({3}) == QT::t(2) * xmon(1, {3}));
    CHECK(comp_hl({3, 1}) == QT::t(2) * xmon(2, {3, 1}) + QT::t(3) * xmon(2, {4, 0}));
    CHECK_THROWS_AS(comp_hl({2, 0, 1}), std::invalid_argument);
}

TEST_CASE("lowering acts on the signed basis by index shift") {
    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 3; ++d)
            for (int h = 0; h <= d; ++h)
                for (const auto& eta : compositions_of(h, r))
                    for (const auto& la : partitions_of(d - h)) {
                        AsymFn lhs = act_dminus(flagged_h({eta, la, true}));
                        std::vector<int> head(eta.begin(), eta.end() - 1);
                        AsymFn rhs = flagged_h({head, cat_sort(eta.back(), la), true});
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("stable Weyl symmetrization on the unsigned basis") {
    for (int r = 1; r <= 2; ++r)
        for (int d = 0; d <= 3; ++d)
            for (int h = 0; h <= d; ++h)
                for (const auto& eta : compositions_of(h, r))
                    for (const auto& la : partitions_of(d - h)) {
                        AsymFn lhs = stable_weyl(flagged_h({eta, la, false}));
                        std::vector<int> head(eta.begin(), eta.end() - 1);
                        AsymFn rhs = flagged_h({head, cat_sort(eta.back(), la), false});
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("pi conjugates lowering to stable Weyl symmetrization") {
    for (int r = 1; r <= 2; ++r)
        for (int d = 0; d <= 3; ++d)
            for (int h = 0; h <= d; ++h)
                for (const auto& eta : compositions_of(h, r)) {
                    AsymFn b = flagged_h({eta, d - h > 0 ? Partition{d - h} : Partition{},
                                          false});
                    CHECK(pi_r(act_dminus(pi_r(b, true))) == stable_weyl(b));
                }
    AsymFn f = t * xmon(2, {2, 1}) + AsymFn::monom(2, {0, 1}, SymFn::pk(1)) * QT::q();
    CHECK(pi_r(act_dminus(pi_r(f, true))) == stable_weyl(f));
}

TEST_CASE("series route agrees with the basis route") {
    for (const AsymFn& f : {t * xmon(2, {2, 1}), xmon(2, {1, 1}),
                            AsymFn::monom(2, {2, 0}, sym_h(1))})
        CHECK(pi_r_series(f, f.degree() + 2) == pi_r(f));
    AsymFn g = xmon(3, {1, 1, 1});
    CHECK(pi_r_series(g, g.degree() + 2) == pi_r(g));
}
